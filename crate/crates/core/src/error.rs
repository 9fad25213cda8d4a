use thiserror::Error;

/// Errors produced by the LOCO library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocoError {
    #[error("invalid code parameters m={m}, x={x}: {reason}")]
    InvalidParams { m: usize, x: usize, reason: &'static str },

    #[error("length {requested} outside the table range [{min}, {max}]")]
    OutOfTableRange { requested: usize, min: usize, max: usize },

    #[error("codeword has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("codeword {codeword} contains forbidden pattern {pattern} at offset {offset}")]
    ConstraintViolation {
        codeword: String,
        pattern: String,
        offset: usize,
    },

    #[error("index {index} outside [0, {limit})")]
    IndexOutOfRange { index: String, limit: String },

    #[error("codeword {codeword} has index {index}, which does not carry a message (valid range 1..={max})")]
    NonMessageCodeword {
        codeword: String,
        index: String,
        max: String,
    },

    #[error("code C({m},{x}) has only {cardinality} codewords, too few to carry a message")]
    Underfull { m: usize, x: usize, cardinality: String },

    #[error("message block has {found} bits, expected {expected}")]
    MessageLength { expected: usize, found: usize },

    #[error("bridging method 2 is only defined for x = 1 (got x = {x})")]
    UnsupportedBridging { x: usize },

    #[error("no bridging rule matches context {prev}|{next}")]
    NoBridgeRule { prev: String, next: String },

    #[error("parameter mismatch: expected m={expected_m}, x={expected_x}")]
    MixedParams { expected_m: usize, expected_x: usize },

    #[error("malformed stream: {0}")]
    MalformedStream(String),

    #[error("oracle cap exceeded: m={m} > cap {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("invalid rate arguments: {0}")]
    InvalidRateArgs(String),
}

pub type Result<T> = std::result::Result<T, LocoError>;
