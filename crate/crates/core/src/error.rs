use num_bigint::BigUint;
use thiserror::Error;

/// Which of the two input arrays an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Array {
    A,
    B,
}

impl std::fmt::Display for Array {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Array::A => f.write_str("a"),
            Array::B => f.write_str("b"),
        }
    }
}

/// Errors raised by the solvers and the instance constructors.
///
/// Indices carried by errors are 1-based so they can be shown to users as-is.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arrays have different lengths: a has {a}, b has {b}")]
    MismatchedLengths { a: usize, b: usize },
    #[error("element {index} of array {array} is not strictly positive")]
    NonPositiveElement { array: Array, index: usize },
    #[error("element {index} of array {array} is not a finite number")]
    NonFiniteElement { array: Array, index: usize },
    #[error("instance needs at least 2 elements, got {len}")]
    TooShort { len: usize },
    #[error("invalid decimal literal {literal:?}")]
    InvalidDecimal { literal: String },
    #[error("index {index} is outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index {index} appears more than once")]
    DuplicateIndex { index: usize },
    #[error("selection is empty")]
    EmptySelection,
    #[error("every index is excluded")]
    AllExcluded,
    #[error("subset size {n} must satisfy 1 <= n < {len}")]
    InvalidSubsetSize { n: usize, len: usize },
    #[error("enumeration of {count} candidate sets exceeds the cap of {cap}")]
    EnumerationCapExceeded { count: BigUint, cap: u64 },
    #[error("invalid greedy set: {reason}")]
    InvalidGreedySet { reason: String },
    #[error("vector u is not unit length (norm {norm})")]
    NotUnit { norm: f64 },
    #[error("basis is not orthonormal: {reason}")]
    NotOrthonormal { reason: String },
    #[error("row {index} yields a zero entry in array {array}")]
    ZeroRow { array: Array, index: usize },
    #[error("dimension mismatch: {reason}")]
    DimensionMismatch { reason: String },
    #[error("selection has zero weight in u")]
    DegenerateSelection,
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MismatchedLengths { .. } => "MismatchedLengths",
            Error::NonPositiveElement { .. } => "NonPositiveElement",
            Error::NonFiniteElement { .. } => "NonFiniteElement",
            Error::TooShort { .. } => "TooShort",
            Error::InvalidDecimal { .. } => "InvalidDecimal",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicateIndex { .. } => "DuplicateIndex",
            Error::EmptySelection => "EmptySelection",
            Error::AllExcluded => "AllExcluded",
            Error::InvalidSubsetSize { .. } => "InvalidSubsetSize",
            Error::EnumerationCapExceeded { .. } => "EnumerationCapExceeded",
            Error::InvalidGreedySet { .. } => "InvalidGreedySet",
            Error::NotUnit { .. } => "NotUnit",
            Error::NotOrthonormal { .. } => "NotOrthonormal",
            Error::ZeroRow { .. } => "ZeroRow",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DegenerateSelection => "DegenerateSelection",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
