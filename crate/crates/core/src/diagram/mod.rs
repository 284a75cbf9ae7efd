//! Line diagrams.
//!
//! A diagram is a centrally symmetric set of points in the plane, one per
//! basis vector, with arrows pointing strictly to the left. Points in column
//! `i` correspond to the basis vectors of block `i`. Labels are assigned in
//! lexicographic `(col, row)` order, so they increase from left to right and,
//! within a column, from bottom to top.
//!
//! Small dimension vectors (all entries at most two) get a diagram directly
//! from one of the case rules below. A general vector is decomposed into such
//! pieces, and piece `j` is drawn on rows `j` and `-j`.

mod decompose;
mod render;

pub use decompose::{decompose, decompose_orth, decompose_symp};

use crate::liealg::Labels;
use crate::{DimensionVector, Error, Kind, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

type Point = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub col: i32,
    pub row: i32,
    pub label: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineDiagram {
    kind: Kind,
    #[serde(rename = "N")]
    total: usize,
    /// Sorted by `(col, row)`, hence by label.
    vertices: Vec<Vertex>,
    /// `(source label, target label)`, sorted.
    arrows: Vec<(i32, i32)>,
}

/// Geometry before labelling.
#[derive(Debug, Default, Clone)]
struct Sketch {
    points: Vec<Point>,
    arrows: Vec<(Point, Point)>,
}

impl Sketch {
    /// Adds the points and an arrow from every point to its left neighbour in the row,
    /// except from the points listed in `no_chain_from`.
    fn add_row(&mut self, row: i32, mut cols: Vec<i32>, no_chain_from: &[Point]) {
        cols.sort_unstable();
        for w in cols.windows(2) {
            if !no_chain_from.contains(&(w[1], row)) {
                self.arrows.push(((w[1], row), (w[0], row)));
            }
        }
        self.points.extend(cols.into_iter().map(|c| (c, row)));
    }

    /// Rows `+-1` move to `+-j`; row 0 stays put.
    fn stretched(self, j: i32) -> Sketch {
        let st = |(c, r): Point| (c, r * j);
        Sketch {
            points: self.points.into_iter().map(st).collect(),
            arrows: self.arrows.into_iter().map(|(a, b)| (st(a), st(b))).collect(),
        }
    }

    fn extend(&mut self, other: Sketch) {
        self.points.extend(other.points);
        self.arrows.extend(other.arrows);
    }

    fn label(mut self, kind: Kind, total: usize) -> Result<LineDiagram> {
        self.points.sort_unstable();
        if self.points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Construction("two vertices share a position".into()));
        }
        if self.points.len() != total {
            return Err(Error::Construction(format!(
                "{} vertices for N = {total}",
                self.points.len()
            )));
        }
        let labels = Labels::new(kind, total);
        let label_of: BTreeMap<Point, i32> = self.points.iter().copied().zip(labels.iter()).collect();
        let vertices = self
            .points
            .iter()
            .map(|&(col, row)| Vertex {
                col,
                row,
                label: label_of[&(col, row)],
            })
            .collect();
        let mut arrows = self
            .arrows
            .iter()
            .map(|(a, b)| match (label_of.get(a), label_of.get(b)) {
                (Some(&s), Some(&t)) => Ok((s, t)),
                _ => Err(Error::Construction(format!("arrow {a:?} -> {b:?} misses a vertex"))),
            })
            .collect::<Result<Vec<_>>>()?;
        arrows.sort_unstable();
        arrows.dedup();
        Ok(LineDiagram {
            kind,
            total,
            vertices,
            arrows,
        })
    }
}

/// Points `(i, 1)` and `(-i, -1)` for `i >= min_index` with `d_i != 0`, plus
/// `(i, -1)` and `(-i, 1)` for `i > 0` with `d_i = 2`.
fn two_row_points(d: &DimensionVector, min_index: i32) -> (Vec<i32>, Vec<i32>) {
    let s = d.s() as i32;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in min_index..=s {
        if d.get(i) != 0 {
            top.push(i);
            bottom.push(-i);
        }
        if i > 0 && d.get(i) == 2 {
            top.push(-i);
            bottom.push(i);
        }
    }
    (top, bottom)
}

/// Smallest positive indices with a nonzero entry.
fn positive_support(d: &DimensionVector) -> impl Iterator<Item = i32> + '_ {
    (1..=d.s() as i32).filter(|&i| d.get(i) != 0)
}

fn check_small(d: &DimensionVector) -> Result<()> {
    if d.entries().iter().any(|&e| e > 2) {
        return Err(Error::Precondition(format!("{d} has an entry above 2")));
    }
    Ok(())
}

fn chain_sketch(d: &DimensionVector) -> Sketch {
    let s = d.s() as i32;
    let mut sk = Sketch::default();
    sk.add_row(0, (-s..=s).filter(|&i| d.get(i) == 1).collect(), &[]);
    sk
}

fn sketch_orth(d: &DimensionVector) -> Result<Sketch> {
    if d.kind() != Kind::Orthogonal {
        return Err(Error::InvalidInput(format!("{d} is not orthogonal")));
    }
    check_small(d)?;
    let mut sk = Sketch::default();
    match d.center() {
        1 => {
            if d.entries().contains(&2) {
                return Err(Error::Precondition(format!("{d}: centre 1 needs all entries 1")));
            }
            return Ok(chain_sketch(d));
        }
        2 => {
            let (top, bottom) = two_row_points(d, 0);
            sk.add_row(1, top, &[]);
            sk.add_row(-1, bottom, &[]);
            if let Some(l) = positive_support(d).next().filter(|_| d.count_of(1) > 0) {
                sk.arrows.push(((l, 1), (0, -1)));
                sk.arrows.push(((0, 1), (-l, -1)));
            }
        }
        _ => {
            let (top, bottom) = two_row_points(d, 1);
            sk.add_row(1, top, &[]);
            sk.add_row(-1, bottom, &[]);
            if d.count_of(1) >= 4 {
                let mut support = positive_support(d);
                let (l, m) = (support.next().unwrap(), support.next().unwrap());
                sk.arrows.push(((l, 1), (-m, -1)));
                sk.arrows.push(((m, 1), (-l, -1)));
            }
        }
    }
    Ok(sk)
}

fn sketch_symp(d: &DimensionVector) -> Result<Sketch> {
    if d.kind() != Kind::Symplectic {
        return Err(Error::InvalidInput(format!("{d} is not symplectic")));
    }
    check_small(d)?;
    let has_one = d.count_of(1) > 0;
    let has_two = (1..=d.s() as i32).any(|i| d.get(i) == 2);
    let mut sk = Sketch::default();
    match (d.center(), has_one, has_two) {
        (0, _, false) => return Ok(chain_sketch(d)),
        (2, _, _) => {
            let (top, bottom) = two_row_points(d, 0);
            sk.add_row(1, top, &[]);
            sk.add_row(-1, bottom, &[]);
            if d.count_of(1) >= 4 {
                let l = positive_support(d).next().unwrap();
                sk.arrows.push(((l, 1), (-l, -1)));
            }
        }
        (0, false, true) => {
            let s = d.s() as i32;
            let cols: Vec<i32> = (-s..=s).filter(|&i| d.get(i) == 2).collect();
            sk.add_row(1, cols.clone(), &[]);
            sk.add_row(-1, cols, &[]);
        }
        (0, true, true) => {
            let (top, bottom) = two_row_points(d, 1);
            let l = positive_support(d).next().unwrap();
            let m = (1..=d.s() as i32).find(|&i| d.get(i) == 2).unwrap();
            sk.add_row(1, top, &[(l, 1)]);
            sk.add_row(-1, bottom, &[(m, -1)]);
            sk.arrows.push(((l, 1), (-l, -1)));
            sk.arrows.push(((m, -1), (-m, 1)));
        }
        (c, _, _) => return Err(Error::Precondition(format!("{d}: centre {c} is not 0 or 2"))),
    }
    Ok(sk)
}

/// The diagram of an orthogonal vector with entries at most 2 (and all
/// entries 1 when the centre is 1).
pub fn small_diagram_orth(d: &DimensionVector) -> Result<LineDiagram> {
    sketch_orth(d)?.label(d.kind(), d.total())
}

/// The diagram of a symplectic vector with entries at most 2.
pub fn small_diagram_symp(d: &DimensionVector) -> Result<LineDiagram> {
    sketch_symp(d)?.label(d.kind(), d.total())
}

fn sketch_small(d: &DimensionVector) -> Result<Sketch> {
    match d.kind() {
        Kind::Orthogonal => sketch_orth(d),
        Kind::Symplectic => sketch_symp(d),
    }
}

/// The diagram `D(d)` for an arbitrary (not necessarily proper) vector.
pub fn assemble(d: &DimensionVector) -> Result<LineDiagram> {
    let pieces = decompose(d);
    let mut sk = Sketch::default();
    if !pieces[0].is_zero() {
        sk.extend(sketch_small(&pieces[0])?);
    }
    for (j, piece) in pieces.iter().enumerate().skip(1) {
        let part = sketch_small(piece)?;
        if part.points.iter().any(|&(_, r)| r == 0) {
            return Err(Error::Construction(format!("piece {piece} has a point on row 0")));
        }
        sk.extend(part.stretched(j as i32));
    }
    sk.label(d.kind(), d.total())
}

impl LineDiagram {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(i32, i32)] {
        &self.arrows
    }

    pub fn vertex(&self, label: i32) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.label == label)
    }

    pub fn label_at(&self, col: i32, row: i32) -> Option<i32> {
        self.vertices
            .iter()
            .find(|v| v.col == col && v.row == row)
            .map(|v| v.label)
    }

    /// Labels on `row`, left to right.
    pub fn row_labels(&self, row: i32) -> Vec<i32> {
        let mut vs: Vec<&Vertex> = self.vertices.iter().filter(|v| v.row == row).collect();
        vs.sort_by_key(|v| v.col);
        vs.into_iter().map(|v| v.label).collect()
    }

    /// Rows that carry vertices, top to bottom.
    pub fn rows(&self) -> Vec<i32> {
        let set: BTreeSet<i32> = self.vertices.iter().map(|v| v.row).collect();
        set.into_iter().rev().collect()
    }

    /// Checks every structural invariant of a labelled diagram.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Construction(msg));
        let labels = Labels::new(self.kind, self.total);
        let got: Vec<i32> = self.vertices.iter().map(|v| v.label).collect();
        if got != labels.iter().collect::<Vec<_>>() {
            return bad(format!("labels {got:?} are not -n..n in (col, row) order"));
        }
        if self
            .vertices
            .windows(2)
            .any(|w| (w[0].col, w[0].row) >= (w[1].col, w[1].row))
        {
            return bad("vertices are not strictly ordered by (col, row)".into());
        }
        for v in &self.vertices {
            match self.vertex(-v.label) {
                Some(m) if (m.col, m.row) == (-v.col, -v.row) => {}
                _ => return bad(format!("vertex {v:?} has no mirror image")),
            }
        }
        let arrow_set: BTreeSet<(i32, i32)> = self.arrows.iter().copied().collect();
        let mut out_degree: BTreeMap<i32, usize> = BTreeMap::new();
        for &(s, t) in &self.arrows {
            let (Some(vs), Some(vt)) = (self.vertex(s), self.vertex(t)) else {
                return bad(format!("arrow {s} -> {t} has an unknown end"));
            };
            if vt.col >= vs.col {
                return bad(format!("arrow {s} -> {t} does not point left"));
            }
            if !arrow_set.contains(&(-t, -s)) {
                return bad(format!("arrow {s} -> {t} has no mirror"));
            }
            *out_degree.entry(s).or_default() += 1;
        }
        if let Some((v, k)) = out_degree.iter().find(|(_, &k)| k > 2) {
            return bad(format!("vertex {v} has {k} outgoing arrows"));
        }
        Ok(())
    }
}
