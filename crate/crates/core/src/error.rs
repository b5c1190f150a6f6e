use thiserror::Error;

/// Errors raised by the library.
///
/// Everything except [`Error::TooLarge`] is an input error: the caller handed
/// over something malformed or out of range.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),

    #[error("expected {expected} digits, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("digit {digit} at slot {slot} outside 1..={dim}")]
    DigitOutOfRange { slot: usize, digit: usize, dim: usize },

    #[error("linear index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("slot {slot} outside 1..={order}")]
    SlotOutOfRange { slot: usize, order: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("{0} is zero")]
    Zero(&'static str),

    #[error("entangler needs equal subsystem dimensions, got {0:?}")]
    NonUniformDims(Vec<usize>),

    #[error("matrix is singular")]
    Singular,

    #[error("braid letter {letter} outside ±1..={max}")]
    BadLetter { letter: i32, max: usize },

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

impl Error {
    /// True for resource-cap violations, false for malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
