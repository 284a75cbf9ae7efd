//! The element `x` read off a line diagram, its support and its type.

use crate::diagram::{assemble, decompose, LineDiagram};
use crate::liealg::{epsilon, unit_weight};
use crate::linalg::exact_rank;
use crate::{DimensionVector, Error, Kind, LieElement, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// `x = sum of eps_{i,j} e_{i,j}` over all arrows `i -> j`.
pub fn element_from_diagram(dg: &LineDiagram) -> Result<LieElement> {
    let mut x = LieElement::zero(dg.kind(), dg.total());
    for &(i, j) in dg.arrows() {
        let eps = epsilon(dg.kind(), dg.total(), i, j).ok_or_else(|| {
            Error::Construction(format!("arrow {i} -> {j} is not part of a root vector"))
        })?;
        x.add_term(i, j, eps);
    }
    Ok(x)
}

/// One root of the support, given by its arrows: a mirror pair
/// `{i -> j, -j -> -i}` or a single arrow `i -> -i` through the origin.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub arrows: Vec<(i32, i32)>,
}

impl Root {
    pub fn is_self_mirrored(&self) -> bool {
        self.arrows.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportSet {
    total: usize,
    roots: Vec<Root>,
}

impl SupportSet {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn weights(&self) -> Vec<Vec<i32>> {
        self.roots
            .iter()
            .map(|r| {
                let (i, j) = r.arrows[0];
                unit_weight(self.total, i, j)
            })
            .collect()
    }

    /// The weights of the roots are linearly independent over `Q`.
    pub fn weights_independent(&self) -> bool {
        let rows: Vec<Vec<i64>> = self
            .weights()
            .into_iter()
            .map(|w| w.into_iter().map(i64::from).collect())
            .collect();
        exact_rank(&rows) == self.roots.len()
    }
}

/// Groups the arrows of `dg` into roots.
pub fn support(dg: &LineDiagram) -> SupportSet {
    let roots: BTreeSet<Root> = dg
        .arrows()
        .iter()
        .map(|&(i, j)| {
            let mirror = (-j, -i);
            let mut arrows = vec![(i, j)];
            if mirror != (i, j) {
                arrows.push(mirror);
                arrows.sort_unstable();
            }
            Root { arrows }
        })
        .collect();
    SupportSet {
        total: dg.total(),
        roots: roots.into_iter().collect(),
    }
}

/// Data of one piece `d^j`, `j >= 1`, of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceData {
    pub index: usize,
    /// Number of nonzero entries.
    pub rho: usize,
    /// Number of entries equal to 2.
    pub sigma: usize,
    pub delta: usize,
}

/// A classical component `B_eta`, `C_eta` or `D_eta` plus type `A` components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeLabel {
    pub letter: char,
    pub eta: usize,
    /// Ranks of the `A` components, zeros dropped.
    pub a_parts: Vec<usize>,
    pub pieces: Vec<PieceData>,
    pub i_d: Vec<usize>,
    pub j_d: Vec<usize>,
    pub note: Option<String>,
}

impl TypeLabel {
    pub fn rank(&self) -> usize {
        self.eta + self.a_parts.iter().sum::<usize>()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.eta)?;
        for a in &self.a_parts {
            write!(f, " + A{a}")?;
        }
        Ok(())
    }
}

fn small_rank_note(letter: char, eta: usize) -> Option<String> {
    let text = match (letter, eta) {
        ('D', 1) => "D1 is a one-dimensional torus",
        ('D', 2) => "D2 = A1 + A1",
        ('D', 3) => "D3 = A3",
        ('B', 1) => "B1 = A1 on a short root",
        ('C', 1) => "C1 = A1 on a long root",
        ('C', 2) => "C2 = B2",
        _ => return None,
    };
    Some(text.to_string())
}

/// The type of the orbit of the element constructed for `d`.
pub fn richardson_type(d: &DimensionVector) -> Result<TypeLabel> {
    let pieces = decompose(d);
    let base: usize = pieces[0].entries().iter().sum();
    let mut data = Vec::new();
    let (mut i_d, mut j_d) = (Vec::new(), Vec::new());
    let mut twice_eta = match d.kind() {
        Kind::Orthogonal if d.total() % 2 == 1 => base - 1,
        Kind::Orthogonal => 0,
        Kind::Symplectic => base,
    };
    let mut a_parts = Vec::new();
    for (index, piece) in pieces.iter().enumerate().skip(1) {
        let sigma = piece.count_of(2);
        let rho = piece.entries().iter().filter(|&&e| e != 0).count();
        let all_two = sigma == rho;
        let delta = match d.kind() {
            Kind::Orthogonal => usize::from(!(piece.center() == 2 || all_two)),
            Kind::Symplectic => usize::from(!(piece.center() == 0 || all_two)),
        };
        let (lhs, rhs) = (rho - delta, sigma + delta);
        if lhs == rhs {
            i_d.push(index);
            if lhs > 1 {
                a_parts.push(lhs - 1);
            }
        } else if lhs > rhs {
            j_d.push(index);
            twice_eta += rho + sigma;
        } else {
            return Err(Error::Construction(format!(
                "piece {piece} has rho - delta < sigma + delta"
            )));
        }
        data.push(PieceData {
            index,
            rho,
            sigma,
            delta,
        });
    }
    if twice_eta % 2 == 1 {
        return Err(Error::Construction(format!("odd value 2 eta = {twice_eta} for {d}")));
    }
    let letter = match d.kind() {
        Kind::Orthogonal if d.total() % 2 == 1 => 'B',
        Kind::Orthogonal => 'D',
        Kind::Symplectic => 'C',
    };
    let eta = twice_eta / 2;
    Ok(TypeLabel {
        letter,
        eta,
        a_parts,
        pieces: data,
        i_d,
        j_d,
        note: small_rank_note(letter, eta),
    })
}

/// `|Gamma| = eta + sum over I_d of (rho - delta - 1)`.
pub fn gamma_size_formula(d: &DimensionVector) -> Result<usize> {
    Ok(richardson_type(d)?.rank())
}

/// Every arrow of the diagram joins adjacent blocks.
pub fn is_nice(d: &DimensionVector) -> Result<bool> {
    let dg = assemble(d)?;
    let pd = d.parabolic_data();
    Ok(dg
        .arrows()
        .iter()
        .all(|&(i, j)| pd.block_of(i) - pd.block_of(j) == 1))
}

/// Conjugation by the reflection swapping `v_1` and `v_-1` (orthogonal, `N` even).
pub fn so_remark_conjugate(x: &LieElement) -> Result<LieElement> {
    x.conjugate_by_swap()
}
