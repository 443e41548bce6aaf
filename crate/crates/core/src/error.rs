use thiserror::Error;

use crate::group::GroupViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group order {0}")]
    InvalidOrder(usize),

    #[error("carrier of {order} elements exceeds the cap of {cap}")]
    Capacity { order: usize, cap: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(GroupViolation),

    #[error("homomorphism law fails at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("brace relation fails at (a, b, c) = ({a}, {b}, {c})")]
    BraceAxiom { a: usize, b: usize, c: usize },

    #[error("{map} fails the homomorphism law at ({a}, {b})")]
    MapLaw { map: String, a: usize, b: usize },

    #[error("{map}[{index}] is not an automorphism")]
    NotAutomorphism { map: String, index: usize },

    #[error("compatibility phi[psi_b(c)] = phi[c] fails at (b, c) = ({b}, {c})")]
    Compatibility { b: usize, c: usize },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<GroupViolation> for Error {
    fn from(v: GroupViolation) -> Self {
        Error::InvalidGroup(v)
    }
}
