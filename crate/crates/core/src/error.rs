use thiserror::Error;

/// Errors raised by the combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed partition or skew-shape text. `position` is the 1-based
    /// index of the offending comma-separated token.
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("partition is not weakly decreasing at part {position}")]
    NotDecreasing { position: usize },

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    DoesNotFit {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },

    #[error("operation `{0}` is undefined on the empty partition")]
    EmptyPartition(&'static str),

    #[error(
        "smooth Schubert variety, lambda^0 undefined (partition {0} has at most one rectangle)"
    )]
    Smooth(String),

    #[error("component index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("component indices must be distinct (got {0} twice)")]
    SameIndex(usize),

    #[error("cell set is not a skew shape")]
    NotSkew,

    #[error("skew shape is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("resource bound exceeded: {what} of size {size} exceeds limit {limit}")]
    ResourceBound {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("count overflowed 128-bit arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
