//! Richardson elements for parabolic subgroups of the orthogonal groups
//! `O_N` and the symplectic groups `Sp_2n`.
//!
//! A parabolic subgroup is given by a symmetric [`DimensionVector`]. From it
//! we build a [`LineDiagram`], read off a nilpotent element `x` of the
//! nilradical, and check with exact integer arithmetic that `x` lies in the
//! dense orbit: Lie algebra membership, Jordan type, the tangent space
//! criterion and the centralizer dimension.
//!
//! ```
//! use richardson::{DimensionVector, Kind, verify};
//!
//! let d = DimensionVector::new(Kind::Orthogonal, vec![3, 4, 2, 4, 3]).unwrap();
//! let report = verify::full_report(&d).unwrap();
//! assert!(report.all_verified());
//! assert_eq!(report.jordan_partition.parts(), &[5, 5, 3, 3]);
//! ```

#![forbid(unsafe_code)]

pub mod classify;
pub mod diagram;
pub mod dimvec;
pub mod element;
mod error;
pub mod liealg;
pub mod linalg;
pub mod partition;
pub mod verify;

pub use diagram::LineDiagram;
pub use dimvec::{DimensionVector, ParabolicData};
pub use element::{SupportSet, TypeLabel};
pub use error::{Error, Result};
pub use liealg::LieElement;
pub use partition::Partition;
pub use verify::RichardsonReport;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The two families of classical groups handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `O_N` with a symmetric form.
    Orthogonal,
    /// `Sp_2n` with a skew-symmetric form.
    Symplectic,
}

impl Kind {
    pub fn short_name(self) -> &'static str {
        match self {
            Kind::Orthogonal => "orth",
            Kind::Symplectic => "symp",
        }
    }

    /// Dimension of the Lie algebra acting on a space of dimension `total`.
    pub fn algebra_dim(self, total: usize) -> usize {
        match self {
            Kind::Orthogonal => total * total.saturating_sub(1) / 2,
            Kind::Symplectic => total * (total + 1) / 2,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orth" | "orthogonal" | "o" => Ok(Kind::Orthogonal),
            "symp" | "symplectic" | "sp" => Ok(Kind::Symplectic),
            other => Err(Error::InvalidInput(format!("unknown kind `{other}`"))),
        }
    }
}
