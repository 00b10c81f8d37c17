use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distribution must have at least one entry")]
    EmptyDistribution,

    #[error("entry {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },

    #[error("entries sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("configuration space has {cells} cells, cap is {cap}")]
    SizeOverflow { cells: u128, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell index {index} is not in the {side} set")]
    IndexOutOfPartition { index: usize, side: &'static str },

    #[error("weight for cell {cell} must be finite and > 0, got {value}")]
    InvalidWeight { cell: usize, value: f64 },

    #[error("missing weight for cell {cell}")]
    MissingWeight { cell: usize },

    #[error("empty compatible set for pair ({female}, {male})")]
    EmptyCompatibleSet { female: usize, male: usize },

    #[error("heredity tensor row ({i}, {k}) of {side} is not stochastic (sum {sum})")]
    NotStochastic {
        side: &'static str,
        i: usize,
        k: usize,
        sum: f64,
    },

    #[error("parameter {name} = {value} is outside {range}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("initial point is already a fixed point")]
    IsFixedPoint,

    #[error("parameters lie on the critical line {0}")]
    OnCriticalLine(&'static str),

    #[error("state is not on the slice: {0}")]
    NotOnSlice(String),
}
