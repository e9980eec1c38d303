//! Error types shared by the whole crate.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or checking a code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {q} exceeds the size bound {bound}")]
    SizeExceeded { q: u128, bound: u64 },

    #[error("division by zero in a finite field")]
    DivisionByZero,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("{t} and {v} are not coprime")]
    NotCoprime { t: u64, v: u64 },

    #[error("the zero element has no multiplicative order")]
    ZeroElement,

    #[error("GF({q}) has no primitive {n}th root of unity ({n} does not divide {q} - 1)")]
    NoSuchRoot { q: u64, n: u64 },

    #[error("characteristic {p} divides the length {n}")]
    CharacteristicDividesLength { p: u64, n: u64 },

    #[error("supplied element is not a primitive root of the required order")]
    NotPrimitiveRoot,

    #[error("arithmetic difference {step} is not coprime to the length {n}")]
    BadArithmeticDifference { n: u64, step: u64 },

    #[error("oracle bound exceeded: {strategy} would cost about {cost} (bound {bound})")]
    OracleBoundExceeded {
        strategy: &'static str,
        cost: u128,
        bound: u128,
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{l} is not invertible modulo {n}")]
    LNotInvertible { l: u64, n: u64 },

    #[error("the code does not contain its dual")]
    NotDualContaining,

    #[error("the classical distance is unknown; run a distance oracle first")]
    UnknownDistance,

    #[error("self-dual input would give a dimension-zero quantum code")]
    SelfDualInput,

    #[error("search exhausted: no feasible construction found up to d = {last_d}")]
    SearchExhausted { last_d: u64 },

    #[error("broken provenance: {0}")]
    BrokenProvenance(String),

    #[error("invalid rate: {0}")]
    InvalidRate(String),

    #[error("cannot parse field specification `{0}`")]
    InvalidFieldSpec(String),

    #[error("Hermitian structure requires a field of square order, got GF({q})")]
    NonSquareField { q: u64 },

    #[error("invalid row selection: {0}")]
    InvalidSelection(String),

    #[error("value {value} is not a valid element encoding for GF({q})")]
    ValueOutOfRange { value: u64, q: u64 },
}
