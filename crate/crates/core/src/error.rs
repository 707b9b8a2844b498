use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("cell {0} is not in the complex")]
    UnknownCell(Cell),

    #[error("series is not invertible: constant term is {0}")]
    NotInvertible(BigInt),

    #[error("resource limit exceeded: {what} needs more than {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("no stabilization within {max_level} subdivisions (values: {values:?})")]
    NoStabilization { max_level: usize, values: Vec<i64> },

    #[error("unknown complex family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
}
