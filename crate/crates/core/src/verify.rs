//! Independent checks that a constructed element is a Richardson element.
//!
//! Everything here works over the integers with exact rank computations:
//!
//! * [`jordan_partition`] reads the Jordan type off the ranks of powers;
//! * [`expected_partition`] is the collapse of the dual of the sorted
//!   dimension vector, the partition of the Richardson orbit;
//! * [`is_dense_in_u`] is the tangent space criterion `[p, x] = u`;
//! * [`centralizer_dim`] is the dimension of the kernel of `ad x`.

use crate::diagram::{assemble, LineDiagram};
use crate::element::{
    element_from_diagram, gamma_size_formula, is_nice, richardson_type, support, SupportSet,
    TypeLabel,
};
use crate::liealg::{basis_unchecked, Degree};
use crate::linalg::exact_rank;
use crate::{DimensionVector, Error, LieElement, ParabolicData, Partition, Result};
use serde::Serialize;

/// Jordan type of a nilpotent element: the `k`-th part of the dual
/// partition is `rank(x^(k-1)) - rank(x^k)`.
pub fn jordan_partition(x: &LieElement) -> Result<Partition> {
    if !x.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut dual = Vec::new();
    let mut prev = x.total();
    let mut power = x.power(1);
    while prev > 0 {
        let r = power.map_rank();
        dual.push(prev - r);
        prev = r;
        power = x.compose(&power)?;
    }
    Ok(Partition::from_unsorted(dual).dual())
}

/// The partition of the Richardson orbit of `P(d)`.
pub fn expected_partition(d: &DimensionVector) -> Result<Partition> {
    d.dual_sorted_partition().collapse(d.kind())
}

fn bracket_rank<'a>(x: &LieElement, with: impl Iterator<Item = &'a LieElement>) -> Result<usize> {
    let rows = with
        .map(|b| Ok(b.bracket(x)?.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    Ok(exact_rank(&rows))
}

/// Whether `[p, x]` is all of `u`, i.e. the `P`-orbit of `x` is open in `u`.
pub fn is_dense_in_u(x: &LieElement, pd: &ParabolicData) -> Result<bool> {
    if (x.kind(), x.total()) != (pd.dimvec().kind(), pd.dimvec().total()) {
        return Err(Error::AlgebraMismatch);
    }
    if !x.in_u(pd) {
        return Err(Error::Precondition("element does not lie in the nilradical".into()));
    }
    let basis = basis_unchecked(x.kind(), x.total());
    let parabolic = basis
        .iter()
        .filter(|b| matches!(b.block_degree(pd), Degree::Uniform(k) if k >= 0));
    Ok(bracket_rank(x, parabolic)? == pd.dim_u())
}

/// `dim { y in g : [y, x] = 0 }`.
pub fn centralizer_dim(x: &LieElement) -> Result<usize> {
    let basis = basis_unchecked(x.kind(), x.total());
    Ok(basis.len() - bracket_rank(x, basis.iter())?)
}

/// Everything known about the element constructed for one dimension vector.
#[derive(Debug, Clone, Serialize)]
pub struct RichardsonReport {
    pub dimvec: DimensionVector,
    pub diagram: LineDiagram,
    pub x: LieElement,
    pub in_g: bool,
    pub in_u: bool,
    pub nilpotent: bool,
    pub jordan_partition: Partition,
    pub expected_partition: Partition,
    pub partition_matches: bool,
    pub dim_u: usize,
    pub dim_levi: usize,
    pub dense: bool,
    pub centralizer_dim: usize,
    pub centralizer_matches: bool,
    pub support: SupportSet,
    pub gamma_size: usize,
    pub gamma_formula: usize,
    pub support_independent: bool,
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub nice: bool,
}

impl RichardsonReport {
    pub fn all_verified(&self) -> bool {
        self.in_g
            && self.in_u
            && self.nilpotent
            && self.partition_matches
            && self.dense
            && self.centralizer_matches
            && self.gamma_size == self.gamma_formula
            && self.support_independent
    }
}

/// Builds the diagram and element for `d` and runs every check.
pub fn full_report(d: &DimensionVector) -> Result<RichardsonReport> {
    let diagram = assemble(d)?;
    let x = element_from_diagram(&diagram)?;
    let pd = d.parabolic_data();
    let in_g = x.in_g();
    let in_u = x.in_u(&pd);
    let nilpotent = x.is_nilpotent();
    if !nilpotent {
        return Err(Error::Construction(format!("element for {d} is not nilpotent")));
    }
    let jordan = jordan_partition(&x)?;
    let expected = expected_partition(d)?;
    let dense = in_u && is_dense_in_u(&x, &pd)?;
    let centralizer = centralizer_dim(&x)?;
    let support = support(&diagram);
    let gamma_formula = gamma_size_formula(d)?;
    Ok(RichardsonReport {
        dimvec: d.clone(),
        in_g,
        in_u,
        nilpotent,
        partition_matches: jordan == expected,
        jordan_partition: jordan,
        expected_partition: expected,
        dim_u: pd.dim_u(),
        dim_levi: pd.dim_levi(),
        dense,
        centralizer_matches: centralizer == pd.dim_levi(),
        centralizer_dim: centralizer,
        gamma_size: support.len(),
        gamma_formula,
        support_independent: support.weights_independent(),
        support,
        type_label: richardson_type(d)?,
        nice: is_nice(d)?,
        diagram,
        x,
    })
}
