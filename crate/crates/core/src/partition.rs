//! Integer partitions with the dominance order, conjugation, and the
//! orthogonal/symplectic collapse.

use crate::{Error, Kind, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A non-increasing sequence of positive integers. The empty partition is allowed.
///
/// The derived `Ord` is lexicographic and only exists so partitions can live in
/// ordered sets; use [`Partition::dominance_leq`] for the dominance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Checks that `parts` is positive and non-increasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition {parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the nonzero entries of `parts` into a partition.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    fn prefix_sums(&self, len: usize) -> impl Iterator<Item = usize> + '_ {
        (0..len).scan(0, move |acc, i| {
            *acc += self.0.get(i).copied().unwrap_or(0);
            Some(*acc)
        })
    }

    /// `self <= other` in the dominance order. Shorter partitions are padded with zeros.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::TotalMismatch(self.total(), other.total()));
        }
        let len = self.len().max(other.len());
        Ok(self
            .prefix_sums(len)
            .zip(other.prefix_sums(len))
            .all(|(a, b)| a <= b))
    }

    /// The conjugate partition: part `k` counts the parts that are at least `k`.
    pub fn dual(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=largest)
                .map(|k| self.0.iter().take_while(|&&p| p >= k).count())
                .collect(),
        )
    }

    /// Every even part occurs with even multiplicity.
    pub fn is_orthogonal(&self) -> bool {
        self.offending_parts(Kind::Orthogonal).next().is_none()
    }

    /// Every odd part occurs with even multiplicity.
    pub fn is_symplectic(&self) -> bool {
        self.offending_parts(Kind::Symplectic).next().is_none()
    }

    pub fn is_valid_for(&self, kind: Kind) -> bool {
        match kind {
            Kind::Orthogonal => self.is_orthogonal(),
            Kind::Symplectic => self.is_symplectic(),
        }
    }

    /// Distinct parts of the parity that `kind` restricts which occur an odd
    /// number of times, largest first.
    fn offending_parts(&self, kind: Kind) -> impl Iterator<Item = usize> + '_ {
        let restricted_parity = match kind {
            Kind::Orthogonal => 0,
            Kind::Symplectic => 1,
        };
        let mut prev = None;
        self.0.iter().copied().filter(move |&p| {
            let fresh = prev != Some(p);
            prev = Some(p);
            fresh && p % 2 == restricted_parity && self.multiplicity(p) % 2 == 1
        })
    }

    /// The largest partition of the given kind below `self` in the dominance order.
    ///
    /// Repeatedly takes the largest offending part `q`, lowers its last
    /// occurrence by one and raises the first later part that is smaller than
    /// `q - 1`. Symplectic partitions only exist for even totals.
    pub fn collapse(&self, kind: Kind) -> Result<Partition> {
        if kind == Kind::Symplectic && self.total() % 2 == 1 {
            return Err(Error::InvalidInput(format!(
                "no symplectic partition of odd total {}",
                self.total()
            )));
        }
        let mut current = self.clone();
        loop {
            let Some(q) = current.offending_parts(kind).next() else {
                break;
            };
            let mut parts = current.0;
            let last = parts.iter().rposition(|&p| p == q).expect("offending part is present");
            parts[last] -= 1;
            match (last + 1..parts.len()).find(|&k| parts[k] + 1 < q) {
                Some(k) => parts[k] += 1,
                None => parts.push(1),
            }
            current = Partition::from_unsorted(parts);
        }
        Ok(current)
    }

    /// All partitions of `total`, in decreasing lexicographic order.
    pub fn all_of(total: usize) -> Vec<Partition> {
        fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                extend(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(total, total, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
