use thiserror::Error;

use crate::staircase::Bidegree;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<usize>),
    #[error("index {index} out of range for a partition with {len} parts")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation needs a nonempty partition")]
    EmptyPartition,
    #[error("ruling labels must be positive, got 0")]
    ZeroLabel,
    #[error("duplicate ruling label {0}")]
    DuplicateLabel(u64),
    #[error("duplicate point ({0}, {1})")]
    DuplicateCell(u64, u64),
    #[error("not enough ruling labels: need {needed} {orientation}, got {got}")]
    LabelShortage {
        orientation: &'static str,
        needed: usize,
        got: usize,
    },
    #[error("label {0} is used both by a line and by a point-supporting ruling")]
    LabelCollision(u64),
    #[error("bidegrees {0} and {1} are comparable; generators must form an antichain")]
    NotAntichain(Bidegree, Bidegree),
    #[error("bidegree {deg} exceeds the ambient ({n_h}, {n_v})")]
    OutOfAmbient { deg: Bidegree, n_h: usize, n_v: usize },
    #[error("arrangement does not fit in its ruling frame")]
    ArrangementOverflow,
    #[error("arrangements live over different ruling frames")]
    AmbientMismatch,
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("a partition side is empty (0-partition)")]
    ZeroPartition,
    #[error("ideal has {0} minimal generator(s); no proper bipartition exists")]
    NotSplittable(usize),
    #[error("{0} is not a drop generator of the configuration")]
    NotDropGenerator(Bidegree),
    #[error("complement of the point side is empty")]
    EmptyComplement,
    #[error("configuration is not ACM")]
    NotAcm,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is out of the supported range [2, 2^32)")]
    PrimeOutOfRange(u64),
    #[error("label {label} is not a valid coordinate modulo {p}")]
    LabelOutOfField { label: u64, p: u64 },
    #[error("a minimal generator sits on the boundary {0} of the box; widen the box")]
    BoxTooSmall(Bidegree),
    #[error("negative syzygy count at {0}; the ideal does not have a length-one resolution")]
    NegativeSyzygy(Bidegree),
    #[error("found {horizontal} generators of bidegree (a,0) and {vertical} of bidegree (0,b); expected one each")]
    PureGeneratorCount { horizontal: usize, vertical: usize },
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("structural and numeric answers disagree: {0}")]
    Inconsistent(String),
}
