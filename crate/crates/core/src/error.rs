use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected (n={expected_n}, h={expected_h}), got (n={got_n}, h={got_h})")]
    DimensionMismatch {
        expected_n: usize,
        expected_h: u32,
        got_n: usize,
        got_h: u32,
    },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("count {count} at index {index} exceeds height {height}")]
    CountTooLarge { index: usize, count: u32, height: u32 },

    #[error("order relation has a cycle through element {0}")]
    CycleDetected(usize),

    #[error("multiset is not an ideal: element {above} has positive count but {below} below it is not full")]
    NotAnIdeal { above: usize, below: usize },

    #[error("{what} = {value} outside allowed range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        lo: u64,
        hi: u64,
    },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("vector length {got} does not match space length N = {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operation requires all blocks of length 1")]
    NonUnitBlocks,

    #[error("operation requires all blocks of equal length")]
    NonUniformBlocks,

    #[error("operation requires a chain pomset")]
    NotAChain,

    #[error("space has {size} vectors, above the enumeration cap {cap}")]
    SpaceTooLarge { size: String, cap: u128 },

    #[error("ideal is not of full count")]
    NotFullCount,

    #[error("ideal is of full count; a partial-count ideal is required")]
    NotPartialCount,

    #[error("2t+1 = {modulus_part} does not divide m = {m} for element {index} with partial count t = {count}")]
    DivisibilityFails {
        index: usize,
        count: u32,
        modulus_part: u32,
        m: u32,
    },

    #[error("code is not linear")]
    NotLinear,

    #[error("code has fewer than two codewords")]
    SingletonCode,

    #[error("code is empty")]
    EmptyCode,

    #[error("code cardinality {0} is not of the required form")]
    BadCardinality(u128),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
