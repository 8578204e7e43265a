//! Error type shared by all modules of the crate.

use num_bigint::BigInt;
use std::fmt;

use crate::heugcd::HeuristicFailure;

/// Errors produced by polynomial construction, arithmetic and gcd drivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A symmetric-remainder operation was asked for a modulus below 3.
    InvalidModulus(BigInt),
    /// Exact division by zero (scalar or polynomial).
    DivisionByZero,
    /// Operands belong to different coefficient rings.
    RingMismatch,
    /// Operands have incompatible variable orders.
    VariableMismatch,
    /// An operation that needs at least one variable was given a constant.
    ConstantInput,
    /// gcd(0, 0) is rejected to surface caller bugs.
    ZeroOperands,
    /// The requested diagnostic is not defined for these inputs.
    Unsupported(&'static str),
    /// The heuristic gcd gave up; see the carried failure for the reason.
    Heuristic(HeuristicFailure),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(z) => write!(f, "invalid modulus {z}: base must be at least 3"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::RingMismatch => write!(f, "operands use different coefficient rings"),
            Error::VariableMismatch => write!(f, "operands have incompatible variable orders"),
            Error::ConstantInput => write!(f, "operation requires a non-constant polynomial"),
            Error::ZeroOperands => write!(f, "gcd(0, 0) is undefined"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::Heuristic(failure) => write!(f, "heuristic gcd failed: {failure}"),
        }
    }
}

impl std::error::Error for Error {}
