//! Splitting a dimension vector into pieces with entries at most two.

use crate::{DimensionVector, Error, Kind, Result};

/// `d = d^0 + d^1 + ... + d^m` for either kind; `d^0` is always first and may be zero.
pub fn decompose(d: &DimensionVector) -> Vec<DimensionVector> {
    match d.kind() {
        Kind::Orthogonal => decompose_orth(d),
        Kind::Symplectic => decompose_symp(d),
    }
    .expect("kind matches")
}

fn remaining(d: &DimensionVector, pieces: &[Vec<usize>]) -> Vec<usize> {
    let mut c = d.entries().to_vec();
    for p in pieces {
        for (ci, pi) in c.iter_mut().zip(p) {
            *ci -= pi;
        }
    }
    c
}

fn map_entries(c: &[usize], f: impl Fn(usize) -> usize) -> Vec<usize> {
    c.iter().map(|&e| if e == 0 { 0 } else { f(e) }).collect()
}

/// `a` is the least positive even entry: odd entries below it become 1, the rest 2.
fn split_at_even(c: &[usize]) -> Vec<usize> {
    let a = c
        .iter()
        .copied()
        .filter(|&e| e > 0 && e % 2 == 0)
        .min()
        .expect("caller checked for a positive even entry");
    map_entries(c, |e| if e < a { 1 } else { 2 })
}

fn finish(d: &DimensionVector, base: Vec<usize>, pieces: Vec<Vec<usize>>) -> Vec<DimensionVector> {
    std::iter::once(base)
        .chain(pieces)
        .map(|p| d.with_entries(p))
        .collect()
}

pub fn decompose_orth(d: &DimensionVector) -> Result<Vec<DimensionVector>> {
    if d.kind() != Kind::Orthogonal {
        return Err(Error::InvalidInput(format!("{d} is not orthogonal")));
    }
    let centre = d.s();
    let mut base = vec![0; d.entries().len()];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    loop {
        let mut all = pieces.clone();
        all.push(base.clone());
        let c = remaining(d, &all);
        if c.iter().all(|&e| e == 0) {
            break;
        }
        let c0 = c[centre];
        let has_one = c.contains(&1);
        if c0 > 0 && !has_one {
            pieces.push(map_entries(&c, |_| 2));
        } else if c0 % 2 == 1 {
            // c0 odd with a 1 somewhere: the all-ones piece is drawn on row 0.
            if base.iter().any(|&e| e > 0) {
                return Err(Error::Construction(format!("{d}: second row-0 piece")));
            }
            base = map_entries(&c, |_| 1);
        } else if c0 > 0 {
            pieces.push(split_at_even(&c));
        } else {
            pieces.push(map_entries(&c, |e| e.min(2)));
        }
    }
    Ok(finish(d, base, pieces))
}

pub fn decompose_symp(d: &DimensionVector) -> Result<Vec<DimensionVector>> {
    if d.kind() != Kind::Symplectic {
        return Err(Error::InvalidInput(format!("{d} is not symplectic")));
    }
    let centre = d.s();
    let mut base = vec![0; d.entries().len()];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    loop {
        let mut all = pieces.clone();
        all.push(base.clone());
        let c = remaining(d, &all);
        if c.iter().all(|&e| e == 0) {
            break;
        }
        let has_one = c.contains(&1);
        let has_even = c.iter().any(|&e| e > 0 && e % 2 == 0);
        if c[centre] > 0 {
            pieces.push(map_entries(&c, |e| e.min(2)));
        } else if !has_one {
            pieces.push(map_entries(&c, |_| 2));
        } else if has_even {
            pieces.push(split_at_even(&c));
        } else {
            // Every nonzero entry is odd: the all-ones piece is drawn on row 0.
            if base.iter().any(|&e| e > 0) {
                return Err(Error::Construction(format!("{d}: second row-0 piece")));
            }
            base = map_entries(&c, |_| 1);
        }
    }
    Ok(finish(d, base, pieces))
}
