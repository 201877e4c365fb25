use alloc::string::String;

use crate::partition::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation point {0} is a pole")]
    Pole(String),
    #[error("rational function {0} is not a polynomial")]
    NotPolynomial(String),
    #[error("partitions {0} and {1} have different weights")]
    WeightMismatch(Partition, Partition),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
    #[error("square ({row}, {col}) lies outside the diagram of {lambda}")]
    OutsideDiagram { lambda: Partition, row: usize, col: usize },
    #[error("operation requires a nonzero partition")]
    ZeroPartition,
    #[error("{0} is not a rectangular partition")]
    NotRectangular(Partition),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("parse error: {0}")]
    Parse(String),
}
