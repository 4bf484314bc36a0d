use thiserror::Error;

use crate::recurrence::Order;

#[derive(Debug, Error)]
pub enum Error {
    /// The seed terms share a common factor, so the sequence is a multiple of another one.
    #[error("seed {terms:?} is not coprime (gcd {gcd})")]
    NonCoprimeSeed { terms: Vec<i64>, gcd: u64 },

    #[error("expected 2 or 3 terms, got {0}")]
    WrongArity(usize),

    #[error("modulus must be between 1 and {max}, got {value}")]
    InvalidModulus { value: u64, max: u64 },

    #[error("residue {residue} is out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("expected an order-{expected} sequence, got order {found}")]
    OrderMismatch { expected: Order, found: Order },

    #[error("not a cycle: {0}")]
    InvalidCycle(&'static str),

    #[error("{what} needs {needed} but the budget is {budget}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A checked theorem produced a counterexample.
    #[error("theorem violated: {0}")]
    TheoremViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
