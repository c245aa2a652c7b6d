use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid frame {d}x{e}: both dimensions must be positive")]
    InvalidFrame { d: usize, e: usize },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("cannot parse {0:?} as a partition")]
    ParsePartition(String),

    #[error("partition {partition} does not fit in the {d}x{e} frame")]
    FrameViolation {
        partition: String,
        d: usize,
        e: usize,
    },

    #[error("frame {d}x{e} has an odd number of columns; half partitions need e even")]
    OddFrame { d: usize, e: usize },

    #[error("malformed binary sequence: {0}")]
    MalformedSequence(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("malformed bundle expression: {0}")]
    MalformedExpression(String),

    #[error("Gr({d},{n}) has odd dimension {dim}; the case d and e both odd is open", n = d + e, dim = d * e)]
    OddDimension { d: usize, e: usize },

    #[error("frame {d}x{e} has {count} partitions, above the brute-force limit {limit}")]
    TooLarge {
        d: usize,
        e: usize,
        count: String,
        limit: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
