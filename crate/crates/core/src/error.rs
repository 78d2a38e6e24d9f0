use thiserror::Error;

use crate::lattice::LatticeSubset;
use crate::pauli::PauliPair;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the empty subset does not define a lattice state")]
    EmptySubset,

    #[error("subset {0} is not PPT")]
    NotPpt(LatticeSubset),

    #[error("index {0} is out of range 0..=3")]
    IndexOutOfRange(i64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("site {site} is not on the cross through {center} (or is its center)")]
    NotOnCross { site: PauliPair, center: PauliPair },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid V matrix: {0}")]
    InvalidV(String),

    #[error("{0:?} is not a permutation of 0..=3")]
    InvalidPermutation([u8; 4]),

    #[error("probability table is invalid: {0}")]
    InvalidProbabilities(String),

    #[error("eigenvalue {value:e} of {subset} lies in the unexplained band")]
    ToleranceBand { subset: LatticeSubset, value: f64 },

    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),

    #[error("consistency violation: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
