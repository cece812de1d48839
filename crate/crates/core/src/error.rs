use thiserror::Error;

use crate::bits::BitVector;

/// Errors produced by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("capacity exceeded: {requested} variables requested, limit is {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("cyclic shift {shift} out of range for {n} variables")]
    ShiftOutOfRange { shift: usize, n: usize },

    #[error("function is not bent: |W_f({point})| != 2^(n/2)")]
    NotBent { point: BitVector },

    #[error("function is not negabent: |N_f({point})|^2 != 2^n")]
    NotNegabent { point: BitVector },

    #[error("map is not a permutation of F_2^{m}: {reason}")]
    NotBijective { m: usize, reason: String },

    #[error("invalid parameter specification: {0}")]
    InvalidSpec(String),

    #[error("{first} and {second} lie in the same coset of the repetition subspace")]
    RepresentativeViolation { first: BitVector, second: BitVector },

    #[error("gamma set is not a union of cyclic orbits: {missing} is missing")]
    NotOrbitClosed { missing: BitVector },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_same_dimension(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
