//! Dimension vectors `d = (d_-s, ..., d_0, ..., d_s)` and the parabolic
//! subalgebras they define.
//!
//! The natural module has basis `v_-n, ..., v_n` (no `v_0` when `N` is even),
//! and `d` cuts this ordered basis into consecutive blocks of sizes
//! `d_-s, ..., d_s`. Blocks carry signed indices `-s..=s`.

use crate::liealg::{self, Labels};
use crate::{Error, Kind, Partition, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DimensionVector {
    kind: Kind,
    entries: Vec<usize>,
}

impl DimensionVector {
    /// Takes the full symmetric vector `d_-s, ..., d_s`.
    pub fn new(kind: Kind, entries: Vec<usize>) -> Result<Self> {
        if entries.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "dimension vector {entries:?} must have odd length"
            )));
        }
        if entries.iter().ne(entries.iter().rev()) {
            return Err(Error::InvalidInput(format!(
                "dimension vector {entries:?} is not symmetric"
            )));
        }
        let d = DimensionVector { kind, entries };
        if kind == Kind::Symplectic && d.center() % 2 == 1 {
            return Err(Error::InvalidInput(format!(
                "symplectic dimension vector {:?} has odd centre",
                d.entries
            )));
        }
        Ok(d)
    }

    /// Builds `d` from `d_1, ..., d_s` and the total, with `d_0 = N - 2 sum d_i`.
    pub fn from_half(kind: Kind, half: &[usize], total: usize) -> Result<Self> {
        let twice: usize = 2 * half.iter().sum::<usize>();
        if twice > total {
            return Err(Error::InvalidInput(format!(
                "2 * sum{half:?} = {twice} exceeds N = {total}"
            )));
        }
        if kind == Kind::Symplectic && total % 2 == 1 {
            return Err(Error::InvalidInput(format!(
                "symplectic total must be even, got {total}"
            )));
        }
        let mut entries: Vec<usize> = half.iter().rev().copied().collect();
        entries.push(total - twice);
        entries.extend(half.iter().copied());
        DimensionVector::new(kind, entries)
    }

    /// Builds a vector of the same kind and length from entries indexed by `-s..=s`.
    pub(crate) fn with_entries(&self, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), self.entries.len());
        DimensionVector {
            kind: self.kind,
            entries,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The `s` in `d_-s, ..., d_s`.
    pub fn s(&self) -> usize {
        self.entries.len() / 2
    }

    /// `N = |d|`.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `n = floor(N / 2)`.
    pub fn rank(&self) -> usize {
        self.total() / 2
    }

    pub fn center(&self) -> usize {
        self.entries[self.s()]
    }

    /// `d_i` for `-s <= i <= s`, and zero outside that range.
    pub fn get(&self, i: i32) -> usize {
        let idx = i + self.s() as i32;
        if idx < 0 {
            return 0;
        }
        self.entries.get(idx as usize).copied().unwrap_or(0)
    }

    /// `d_1, ..., d_s`.
    pub fn half(&self) -> &[usize] {
        &self.entries[self.s() + 1..]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn count_of(&self, value: usize) -> usize {
        self.entries.iter().filter(|&&e| e == value).count()
    }

    pub fn is_proper(&self) -> bool {
        let half = self.half();
        if half.contains(&0) {
            return false;
        }
        match self.kind {
            Kind::Orthogonal => !(self.center() == 0 && half.first() == Some(&1)),
            Kind::Symplectic => true,
        }
    }

    /// The proper vector defining the same parabolic subgroup.
    pub fn normalize(&self) -> DimensionVector {
        let mut half: Vec<usize> = self.half().iter().copied().filter(|&e| e > 0).collect();
        let total = self.total();
        if self.kind == Kind::Orthogonal && self.center() == 0 && half.first() == Some(&1) {
            half.remove(0);
        }
        DimensionVector::from_half(self.kind, &half, total)
            .expect("normalizing keeps the total and symmetry")
    }

    /// The dual of the nonzero entries sorted into a partition. This is the
    /// Jordan type of a Richardson element for the parabolic of `GL_N`
    /// stabilizing the same flag.
    pub fn dual_sorted_partition(&self) -> Partition {
        Partition::from_unsorted(self.entries.iter().copied()).dual()
    }

    pub fn parabolic_data(&self) -> ParabolicData {
        ParabolicData::new(self.clone())
    }

    /// All proper vectors of the given kind and total, ordered by `s` and
    /// then lexicographically by `d_1, ..., d_s`.
    pub fn all_proper(kind: Kind, total: usize) -> Vec<DimensionVector> {
        if kind == Kind::Symplectic && total % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for half in frontier {
                if let Ok(d) = DimensionVector::from_half(kind, &half, total) {
                    if d.is_proper() {
                        out.push(d);
                    }
                }
                let used: usize = half.iter().sum();
                for e in 1..=(total / 2).saturating_sub(used) {
                    let mut h = half.clone();
                    h.push(e);
                    next.push(h);
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The block structure of `P(d)`: which block every basis vector lies in and
/// the dimensions of the nilradical and the Levi factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    dimvec: DimensionVector,
    labels: Labels,
    /// Block index of each basis vector, indexed like `labels`.
    block_of: Vec<i32>,
    /// `c_i = d_0 + ... + d_(i-1)` for `i = 1..=s`.
    cum_dims: Vec<usize>,
    dim_u: usize,
    /// Includes the torus.
    dim_levi: usize,
}

impl ParabolicData {
    fn new(dimvec: DimensionVector) -> Self {
        let labels = Labels::new(dimvec.kind(), dimvec.total());
        let s = dimvec.s() as i32;
        let block_of: Vec<i32> = (-s..=s)
            .flat_map(|i| std::iter::repeat_n(i, dimvec.get(i)))
            .collect();
        let cum_dims = (1..=dimvec.s())
            .map(|i| (0..i as i32).map(|j| dimvec.get(j)).sum())
            .collect();
        let mut data = ParabolicData {
            dimvec,
            labels,
            block_of,
            cum_dims,
            dim_u: 0,
            dim_levi: 0,
        };
        data.count_dimensions();
        data
    }

    fn count_dimensions(&mut self) {
        let basis = liealg::basis_unchecked(self.dimvec.kind(), self.dimvec.total());
        let (mut pos, mut zero) = (0, 0);
        for b in &basis {
            match b.block_degree(self) {
                liealg::Degree::Uniform(0) => zero += 1,
                liealg::Degree::Uniform(k) if k > 0 => pos += 1,
                liealg::Degree::Uniform(_) => {}
                other => panic!("basis element {b:?} has degree {other:?}"),
            }
        }
        self.dim_u = pos;
        self.dim_levi = zero;
    }

    pub fn dimvec(&self) -> &DimensionVector {
        &self.dimvec
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// Block index of the basis vector `v_label`.
    pub fn block_of(&self, label: i32) -> i32 {
        self.block_of[self.labels.index_of(label)]
    }

    pub fn cum_dims(&self) -> &[usize] {
        &self.cum_dims
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    pub fn dim_levi(&self) -> usize {
        self.dim_levi
    }

    /// Labels in block `i`, in increasing order.
    pub fn block(&self, i: i32) -> Vec<i32> {
        self.labels
            .iter()
            .filter(|&l| self.block_of(l) == i)
            .collect()
    }

    /// The parabolic `g P g^-1` where `g` swaps `v_1` and `v_-1` and fixes the
    /// other basis vectors. Only meaningful for orthogonal `N` even.
    pub fn conjugated_by_swap(&self) -> Result<ParabolicData> {
        if self.dimvec.kind() != Kind::Orthogonal || self.dimvec.total() % 2 == 1 {
            return Err(Error::Precondition(
                "swap conjugation needs an orthogonal group of even degree".into(),
            ));
        }
        let mut out = self.clone();
        if self.dimvec.total() >= 2 {
            let (a, b) = (self.labels.index_of(1), self.labels.index_of(-1));
            out.block_of.swap(a, b);
        }
        Ok(out)
    }
}
