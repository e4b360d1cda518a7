use thiserror::Error;

/// Why a slot array or pair list is not a canonical fixed-point-free involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("odd length {len}: a fixed-point-free involution needs an even ground set")]
    OddLength { len: usize },
    #[error("not a permutation: value {value} at position {position} is outside 1..={max}")]
    OutOfRange {
        position: usize,
        value: usize,
        max: usize,
    },
    #[error("not a permutation: element {value} repeated")]
    Repeated { value: usize },
    #[error("fixed point: element {element} is paired with itself")]
    FixedPoint { element: usize },
    #[error("pair-minimum violation: pair {pair} stores {first} before {second}")]
    PairMinimum {
        pair: usize,
        first: usize,
        second: usize,
    },
    #[error("minima not decreasing: pair {pair} minimum {current} is below next minimum {next}")]
    MinimaNotDecreasing {
        pair: usize,
        current: usize,
        next: usize,
    },
}

impl ValidationError {
    /// Short stable name of the violated invariant.
    pub fn kind(&self) -> &'static str {
        match self {
            ValidationError::OddLength { .. } => "odd-length",
            ValidationError::OutOfRange { .. } | ValidationError::Repeated { .. } => {
                "not-a-permutation"
            }
            ValidationError::FixedPoint { .. } => "fixed-point",
            ValidationError::PairMinimum { .. } => "pair-minimum-violation",
            ValidationError::MinimaNotDecreasing { .. } => "minima-not-decreasing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {value} outside 1..={max}")]
    ElementOutOfRange { value: usize, max: usize },
    #[error("shift index {index} outside 2..={max}")]
    ShiftIndexOutOfRange { index: usize, max: usize },
    #[error("{value} is outside the image {{2..={max}}} \\ {{{index}}} of the shift bijection")]
    NotInShiftImage {
        value: usize,
        index: usize,
        max: usize,
    },
    #[error("ground set size {0} is odd")]
    OddGroundSet(usize),
    #[error("choice digit {digit} at level {level} outside 2..={max}")]
    DigitOutOfRange {
        level: usize,
        digit: usize,
        max: usize,
    },
    #[error("prefix of {prefix} digits is longer than the {levels} levels")]
    PrefixTooLong { prefix: usize, levels: usize },
    #[error("rank {rank} out of range for {pairs} pairs (count {count})")]
    RankOutOfRange { rank: u128, pairs: usize, count: u128 },
    #[error("size mismatch: involution on {involution} elements, bijection on {bijection}")]
    SizeMismatch { involution: usize, bijection: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("ground size {size} exceeds the oracle limit {limit}")]
    OracleLimit { size: usize, limit: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}
