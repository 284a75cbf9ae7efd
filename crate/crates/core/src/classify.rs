//! Which nilpotent orbits are Richardson orbits, decided from the partition
//! alone, and a cross-check against the orbits actually produced by the
//! construction.

use crate::diagram::assemble;
use crate::element::element_from_diagram;
use crate::verify::jordan_partition;
use crate::{DimensionVector, Error, Kind, Partition, Result};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentTag {
    /// All parts odd, any length.
    Odd,
    /// All parts even, any length.
    Even,
    EvenPair,
    OddPair,
    EvenStepDescending,
    OddStepDescending,
}

impl SegmentTag {
    /// Whether `parts` is a segment of this shape.
    pub fn accepts(self, parts: &[usize]) -> bool {
        let all = |parity: usize| parts.iter().all(|p| p % 2 == parity);
        let paired = || parts.chunks(2).all(|c| c[0] == c[1]);
        let step_descending = || (1..parts.len().saturating_sub(1)).step_by(2).all(|k| parts[k] > parts[k + 1]);
        let even_len = parts.len().is_multiple_of(2);
        match self {
            SegmentTag::Odd => all(1),
            SegmentTag::Even => all(0),
            SegmentTag::EvenPair => even_len && all(0) && paired(),
            SegmentTag::OddPair => even_len && all(1) && paired(),
            SegmentTag::EvenStepDescending => even_len && all(0) && step_descending(),
            SegmentTag::OddStepDescending => even_len && all(1) && step_descending(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub tag: SegmentTag,
    pub parts: Vec<usize>,
}

/// A witness that a partition has one of the Richardson shapes.
///
/// Orthogonal: an odd segment followed by alternating even-pair and odd
/// 2-step-descending segments. Symplectic: alternating odd-pair and even
/// 2-step-descending segments (the first may be empty) followed by an even
/// segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeDecomposition {
    pub kind: Kind,
    pub segments: Vec<Segment>,
}

impl ShapeDecomposition {
    pub fn concatenation(&self) -> Vec<usize> {
        self.segments.iter().flat_map(|s| s.parts.iter().copied()).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.segments.iter().all(|s| s.tag.accepts(&s.parts))
    }
}

/// Alternating middle segments `tags[0], tags[1], tags[0], ...` covering
/// `parts[pos..]`, possibly followed by a tail of shape `tail`.
fn search_middle(
    parts: &[usize],
    pos: usize,
    tags: [SegmentTag; 2],
    turn: usize,
    tail: Option<SegmentTag>,
    out: &mut Vec<Segment>,
) -> bool {
    if let Some(t) = tail {
        if t.accepts(&parts[pos..]) {
            out.push(Segment { tag: t, parts: parts[pos..].to_vec() });
            return true;
        }
    } else if pos == parts.len() {
        return true;
    }
    let tag = tags[turn % 2];
    for end in (pos + 2..=parts.len()).step_by(2) {
        if !tag.accepts(&parts[pos..end]) {
            continue;
        }
        out.push(Segment { tag, parts: parts[pos..end].to_vec() });
        if search_middle(parts, end, tags, turn + 1, tail, out) {
            return true;
        }
        out.pop();
    }
    false
}

/// A Richardson shape witness for an orthogonal partition, if one exists.
pub fn classify_orth(a: &Partition) -> Result<Option<ShapeDecomposition>> {
    if !a.is_orthogonal() {
        return Err(Error::InvalidInput(format!("{a} is not an orthogonal partition")));
    }
    let parts = a.parts();
    let odd_prefix = parts.iter().take_while(|p| *p % 2 == 1).count();
    for k in (0..=odd_prefix).rev() {
        let mut segments = vec![Segment { tag: SegmentTag::Odd, parts: parts[..k].to_vec() }];
        let tags = [SegmentTag::EvenPair, SegmentTag::OddStepDescending];
        if search_middle(parts, k, tags, 0, None, &mut segments) {
            return Ok(Some(ShapeDecomposition { kind: Kind::Orthogonal, segments }));
        }
    }
    Ok(None)
}

/// A Richardson shape witness for a symplectic partition, if one exists.
pub fn classify_symp(a: &Partition) -> Result<Option<ShapeDecomposition>> {
    if !a.is_symplectic() {
        return Err(Error::InvalidInput(format!("{a} is not a symplectic partition")));
    }
    let parts = a.parts();
    let tags = [SegmentTag::OddPair, SegmentTag::EvenStepDescending];
    let mut segments = Vec::new();
    if search_middle(parts, 0, tags, 0, Some(SegmentTag::Even), &mut segments) {
        return Ok(Some(ShapeDecomposition { kind: Kind::Symplectic, segments }));
    }
    // The first odd-pair segment may be empty.
    segments.clear();
    segments.push(Segment { tag: SegmentTag::OddPair, parts: Vec::new() });
    if search_middle(parts, 0, tags, 1, Some(SegmentTag::Even), &mut segments) {
        return Ok(Some(ShapeDecomposition { kind: Kind::Symplectic, segments }));
    }
    Ok(None)
}

pub fn classify(kind: Kind, a: &Partition) -> Result<Option<ShapeDecomposition>> {
    match kind {
        Kind::Orthogonal => classify_orth(a),
        Kind::Symplectic => classify_symp(a),
    }
}

/// Jordan types of the elements constructed for all proper dimension
/// vectors of total `total`.
pub fn enumerate_richardson_partitions(kind: Kind, total: usize) -> Result<BTreeSet<Partition>> {
    DimensionVector::all_proper(kind, total)
        .iter()
        .map(|d| jordan_partition(&element_from_diagram(&assemble(d)?)?))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub kind: Kind,
    #[serde(rename = "N")]
    pub total: usize,
    pub matched: usize,
    /// Produced by the construction but rejected by the classifier.
    pub only_enumerated: Vec<Partition>,
    /// Accepted by the classifier but never produced.
    pub only_classified: Vec<Partition>,
}

impl CrossValidation {
    pub fn is_equal(&self) -> bool {
        self.only_enumerated.is_empty() && self.only_classified.is_empty()
    }
}

/// Compares the constructed Jordan types with the classifier over all
/// partitions of `total` of the given kind.
pub fn cross_validate(kind: Kind, total: usize) -> Result<CrossValidation> {
    let enumerated = enumerate_richardson_partitions(kind, total)?;
    let mut classified = BTreeSet::new();
    for p in Partition::all_of(total).into_iter().filter(|p| p.is_valid_for(kind)) {
        if classify(kind, &p)?.is_some() {
            classified.insert(p);
        }
    }
    Ok(CrossValidation {
        kind,
        total,
        matched: enumerated.intersection(&classified).count(),
        only_enumerated: enumerated.difference(&classified).cloned().collect(),
        only_classified: classified.difference(&enumerated).cloned().collect(),
    })
}
