use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("partitions of different totals compared ({0} vs {1})")]
    TotalMismatch(usize, usize),

    #[error("elements live in different algebras")]
    AlgebraMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not nilpotent")]
    NotNilpotent,

    /// The diagram construction produced something it never should.
    #[error("construction bug: {0}")]
    Construction(String),
}
