use thiserror::Error;

use crate::engine::EngineId;
use crate::classes::ClassLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A closed-form evaluation left a non-integer value behind.
    #[error("value is not a rational integer: {0}")]
    NotRationalInteger(String),

    #[error("letter counts ({n1}, {n2}, {n3}) do not sum to {total}")]
    ArityMismatch { total: i64, n1: i64, n2: i64, n3: i64 },

    #[error("word length {0} is not divisible by 3")]
    NotDivisibleBy3(u64),

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: u64, limit: u64 },

    #[error("generating function denominator has constant term {0}, expected ±1")]
    NonUnitConstantTerm(String),

    #[error("identity `{identity}` violated at n = {n}")]
    IdentityViolation { identity: String, n: usize },

    #[error("engine {engine} does not support class {label} at n = {n}")]
    OutOfDomain { engine: EngineId, label: ClassLabel, n: u64 },

    #[error("unknown sequence `{0}` (expected A391468, A391469 or A391470)")]
    UnknownSequence(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
