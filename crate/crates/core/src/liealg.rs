//! Integer model of `so_N` and `sp_2n` on the basis `v_-n, ..., v_n`.
//!
//! The matrix unit `e_{i,j}` is the linear map sending `v_i` to `v_j` and every
//! other basis vector to zero. Everything in this module is written against
//! that map semantics; there is no row/column layout to get transposed.

use crate::dimvec::ParabolicData;
use crate::linalg::exact_rank;
use crate::{Error, Kind, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// The basis labels `-n..=n` of the natural module, with `0` present iff `N` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Labels {
    total: usize,
}

impl Labels {
    pub fn new(_kind: Kind, total: usize) -> Self {
        Labels { total }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn n(&self) -> i32 {
        (self.total / 2) as i32
    }

    pub fn contains(&self, label: i32) -> bool {
        label.abs() <= self.n() && (label != 0 || self.total % 2 == 1)
    }

    /// Position of `v_label` in the ordered basis.
    pub fn index_of(&self, label: i32) -> usize {
        assert!(self.contains(label), "label {label} out of range for N = {}", self.total);
        let shifted = (label + self.n()) as usize;
        if self.total.is_multiple_of(2) && label > 0 {
            shifted - 1
        } else {
            shifted
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> {
        let n = self.n();
        let odd = self.total % 2 == 1;
        (-n..=n).filter(move |&l| l != 0 || odd)
    }
}

/// The invariant bilinear form: `(v_i, v_-j) = delta_ij` for `i, j >= 1`,
/// symmetric with `(v_0, v_0) = 1` in the orthogonal case and skew in the
/// symplectic case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Form {
    pub kind: Kind,
    pub total: usize,
}

impl Form {
    pub fn eval(&self, a: i32, b: i32) -> i64 {
        if a != -b {
            return 0;
        }
        match self.kind {
            Kind::Orthogonal => 1,
            Kind::Symplectic if a > 0 => 1,
            Kind::Symplectic => -1,
        }
    }
}

/// Degree of an element for the grading attached to a parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Degree {
    /// The zero element.
    Empty,
    Uniform(i32),
    Mixed,
}

/// A linear map of the natural module with exact integer coefficients.
///
/// `entries[(i, j)] = c` means the map sends `v_i` to `c v_j + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    kind: Kind,
    total: usize,
    entries: BTreeMap<(i32, i32), i64>,
}

impl LieElement {
    pub fn zero(kind: Kind, total: usize) -> Self {
        LieElement {
            kind,
            total,
            entries: BTreeMap::new(),
        }
    }

    /// The bare matrix unit `e_{i,j}`; in general not an element of the Lie algebra.
    pub fn unit(kind: Kind, total: usize, i: i32, j: i32) -> Self {
        let mut x = LieElement::zero(kind, total);
        x.add_term(i, j, 1);
        x
    }

    pub fn from_terms(kind: Kind, total: usize, terms: impl IntoIterator<Item = (i32, i32, i64)>) -> Self {
        let mut x = LieElement::zero(kind, total);
        for (i, j, c) in terms {
            x.add_term(i, j, c);
        }
        x
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn labels(&self) -> Labels {
        Labels::new(self.kind, self.total)
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: i64) {
        let labels = self.labels();
        assert!(labels.contains(i) && labels.contains(j), "e_({i},{j}) outside N = {}", self.total);
        let slot = self.entries.entry((i, j)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.entries.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> i64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero terms `(i, j, coeff)` in label order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_same_algebra(&self, other: &LieElement) -> Result<()> {
        if self.kind != other.kind || self.total != other.total {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn scaled(&self, c: i64) -> LieElement {
        LieElement::from_terms(self.kind, self.total, self.terms().map(|(i, j, e)| (i, j, c * e)))
    }

    pub fn plus(&self, other: &LieElement) -> Result<LieElement> {
        self.check_same_algebra(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c);
        }
        Ok(out)
    }

    /// The composite map `self after other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &LieElement) -> Result<LieElement> {
        self.check_same_algebra(other)?;
        let mut by_source: BTreeMap<i32, Vec<(i32, i64)>> = BTreeMap::new();
        for (b, c, coeff) in self.terms() {
            by_source.entry(b).or_default().push((c, coeff));
        }
        let mut out = LieElement::zero(self.kind, self.total);
        for (a, b, y) in other.terms() {
            for &(c, x) in by_source.get(&b).into_iter().flatten() {
                out.add_term(a, c, x * y);
            }
        }
        Ok(out)
    }

    /// `[self, other] = self other - other self` as linear maps.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        let xy = self.compose(other)?;
        let yx = other.compose(self)?;
        xy.plus(&yx.scaled(-1))
    }

    /// `self` composed with itself `k` times; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> LieElement {
        let mut acc = LieElement::from_terms(self.kind, self.total, self.labels().iter().map(|l| (l, l, 1)));
        for _ in 0..k {
            acc = self.compose(&acc).expect("same algebra");
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.power(self.total).is_zero()
    }

    /// Coefficients flattened into a vector of length `N^2`, indexed by basis positions.
    pub fn to_vector(&self) -> Vec<i64> {
        let labels = self.labels();
        let mut v = vec![0; self.total * self.total];
        for (i, j, c) in self.terms() {
            v[labels.index_of(i) * self.total + labels.index_of(j)] = c;
        }
        v
    }

    /// Rank of the element as a linear map.
    pub fn map_rank(&self) -> usize {
        let labels = self.labels();
        let rows: Vec<Vec<i64>> = labels
            .iter()
            .map(|i| labels.iter().map(|j| self.coeff(i, j)).collect())
            .collect();
        exact_rank(&rows)
    }

    /// `(x v, w) + (v, x w) = 0` for all basis vectors `v, w`.
    pub fn in_g(&self) -> bool {
        let form = Form {
            kind: self.kind,
            total: self.total,
        };
        let labels = self.labels();
        labels.iter().all(|a| {
            labels.iter().all(|b| {
                // x v_a = sum_j x[a, j] v_j and only j = -b pairs nontrivially with v_b.
                form.eval(-b, b) * self.coeff(a, -b) + form.eval(a, -a) * self.coeff(b, -a) == 0
            })
        })
    }

    /// `block_of(i) - block_of(j)` when all terms `e_{i,j}` agree on it.
    pub fn block_degree(&self, pd: &ParabolicData) -> Degree {
        let mut degrees = self.terms().map(|(i, j, _)| pd.block_of(i) - pd.block_of(j));
        let Some(first) = degrees.next() else {
            return Degree::Empty;
        };
        if degrees.all(|d| d == first) {
            Degree::Uniform(first)
        } else {
            Degree::Mixed
        }
    }

    /// Every term `e_{i,j}` sends its block to a strictly lower one.
    pub fn in_u(&self, pd: &ParabolicData) -> bool {
        self.terms().all(|(i, j, _)| pd.block_of(j) < pd.block_of(i))
    }

    /// The torus weight shared by all terms, if any.
    pub fn weight(&self) -> Option<Vec<i32>> {
        let mut ws = self.terms().map(|(i, j, _)| unit_weight(self.total, i, j));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms().all(|(i, j, _)| i == j)
    }

    /// Relabels `v_1 <-> v_-1`, which is conjugation by the orthogonal
    /// reflection `g = e_{1,-1} + e_{-1,1} + sum_{i >= 2} (e_{i,i} + e_{-i,-i})`.
    pub fn conjugate_by_swap(&self) -> Result<LieElement> {
        if self.kind != Kind::Orthogonal || self.total % 2 == 1 {
            return Err(Error::Precondition(
                "swap conjugation needs an orthogonal group of even degree".into(),
            ));
        }
        let g = |l: i32| if l.abs() == 1 { -l } else { l };
        Ok(LieElement::from_terms(
            self.kind,
            self.total,
            self.terms().map(|(i, j, c)| (g(i), g(j), c)),
        ))
    }
}

impl Serialize for LieElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (i, j, c) in self.terms() {
            seq.serialize_element(&(i, j, c))?;
        }
        seq.end()
    }
}

/// Weight of `e_{i,j}` for the diagonal torus: `eps_j - eps_i` with
/// `eps_-k = -eps_k` and `eps_0 = 0`, as a vector in `Z^n`.
pub fn unit_weight(total: usize, i: i32, j: i32) -> Vec<i32> {
    let n = total / 2;
    let mut w = vec![0; n];
    for (label, sign) in [(j, 1), (i, -1)] {
        if label != 0 {
            w[label.unsigned_abs() as usize - 1] += sign * label.signum();
        }
    }
    w
}

fn check_degree(kind: Kind, total: usize) -> Result<()> {
    match kind {
        Kind::Orthogonal if total < 3 => Err(Error::InvalidInput(format!(
            "orthogonal algebra needs N >= 3, got {total}"
        ))),
        Kind::Symplectic if total < 2 || total % 2 == 1 => Err(Error::InvalidInput(format!(
            "symplectic algebra needs even N >= 2, got {total}"
        ))),
        _ => Ok(()),
    }
}

/// The Chevalley basis of `so_N` or `sp_N`, including the diagonal elements
/// `e_{i,i} - e_{-i,-i}`.
///
/// Orthogonal: `e_{i,j} - e_{-j,-i}`, `e_{i,-j} - e_{j,-i}`, `e_{-j,i} - e_{-i,j}`
/// (`i < j`), and for odd `N` also `e_{k,0} - e_{0,-k}`, `e_{0,k} - e_{-k,0}`.
/// Symplectic: `e_{i,j} - e_{-j,-i}`, `e_{i,-j} + e_{j,-i}`, `e_{-i,j} + e_{-j,i}`
/// (`i < j`), `e_{k,-k}`, `e_{-k,k}`.
pub fn chevalley_basis(kind: Kind, total: usize) -> Result<Vec<LieElement>> {
    check_degree(kind, total)?;
    Ok(basis_unchecked(kind, total))
}

pub(crate) fn basis_unchecked(kind: Kind, total: usize) -> Vec<LieElement> {
    let n = (total / 2) as i32;
    let el = |terms: &[(i32, i32, i64)]| LieElement::from_terms(kind, total, terms.iter().copied());
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            out.push(el(&[(i, j, 1), (-j, -i, -1)]));
        }
    }
    let sign = match kind {
        Kind::Orthogonal => -1,
        Kind::Symplectic => 1,
    };
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(el(&[(i, -j, 1), (j, -i, sign)]));
            match kind {
                Kind::Orthogonal => out.push(el(&[(-j, i, 1), (-i, j, -1)])),
                Kind::Symplectic => out.push(el(&[(-i, j, 1), (-j, i, 1)])),
            }
        }
    }
    for k in 1..=n {
        match kind {
            Kind::Orthogonal if total % 2 == 1 => {
                out.push(el(&[(k, 0, 1), (0, -k, -1)]));
                out.push(el(&[(0, k, 1), (-k, 0, -1)]));
            }
            Kind::Orthogonal => {}
            Kind::Symplectic => {
                out.push(el(&[(k, -k, 1)]));
                out.push(el(&[(-k, k, 1)]));
            }
        }
    }
    out
}

/// The coefficient of `e_{i,j}` in the Chevalley basis element containing it,
/// or `None` when no basis element contains `e_{i,j}`.
pub fn epsilon(kind: Kind, total: usize, i: i32, j: i32) -> Option<i64> {
    let labels = Labels::new(kind, total);
    if !labels.contains(i) || !labels.contains(j) {
        return None;
    }
    match kind {
        Kind::Orthogonal => match (i.signum(), j.signum()) {
            (1, 1) => Some(1),
            (-1, -1) => Some(-1),
            (1, -1) if i == -j => None,
            (1, -1) => Some(if i < -j { 1 } else { -1 }),
            (-1, 1) if i == -j => None,
            (-1, 1) => Some(if -i > j { 1 } else { -1 }),
            (1, 0) | (0, 1) => Some(1),
            (0, -1) | (-1, 0) => Some(-1),
            _ => None,
        },
        Kind::Symplectic => match (i.signum(), j.signum()) {
            (-1, -1) => Some(-1),
            _ => Some(1),
        },
    }
}
