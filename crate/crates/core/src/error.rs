use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part set is empty")]
    EmptySet,

    #[error("part {0} is not a positive integer")]
    NonPositivePart(i64),

    #[error("table bound {0} is negative")]
    NegativeBound(i64),

    #[error("enumeration refused: {count} partitions exceeds the oracle limit of {limit}")]
    OracleBoundExceeded { count: String, limit: u64 },

    #[error("{0} is not a part of the set")]
    PartNotInSet(i64),

    #[error("part {part} exceeds n = {n}")]
    PartExceedsN { part: i64, n: i64 },

    #[error(
        "gcd of the parts is {0}, not 1; reduce with p_A(n) = p_(A/g)(n/g) when g | n, 0 otherwise"
    )]
    GcdNotOne(u64),

    #[error("constituent for residue {residue} deviates from the count at l = {l}")]
    ResidualNonZero { residue: u64, l: u64 },

    #[error("constituent value at n = {n} is {value}, not an integer")]
    NonIntegerValue { n: i64, value: String },

    #[error("set has {found} parts; this check needs {needed}")]
    WrongCardinality { found: usize, needed: &'static str },

    #[error("n = {n} is not above the validity bound {bound}")]
    BelowValidityBound { n: i64, bound: i64 },

    #[error("product of the parts does not fit in memory-addressable range")]
    PeriodTooLarge,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{context}: {source}")]
    InInstance { context: String, source: Box<Error> },
}
