use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window is not a permutation of 1..={0}")]
    InvalidWindow(usize),
    #[error("grid size {given} too small; the Rothe diagram needs at least {needed}")]
    GridTooSmall { given: usize, needed: usize },
    #[error("permutation is not vexillary")]
    NotVexillary,
    #[error("permutation is vexillary; transition tree has no children here")]
    VexillaryLeaf,
    #[error("cell ({0}, {1}) is not the accessible box of this permutation")]
    NotAccessibleBox(usize, usize),
    #[error("enumeration budget exceeded: {need} exceeds limit {limit} ({what})")]
    BudgetExceeded {
        what: &'static str,
        need: usize,
        limit: usize,
    },
    #[error("brute-force subset scan refused: n = {0} > {1}; use the LP path instead")]
    SubsetScanTooLarge(usize, usize),
    #[error("content sum {sum} does not match the diagram size {cells}")]
    DegreeMismatch { sum: usize, cells: usize },
    #[error("point is not integral at coordinate ({0}, {1})")]
    NonIntegralPoint(usize, usize),
    #[error("point does not satisfy the feasibility system: {0}")]
    InfeasiblePoint(&'static str),
    #[error("invalid compression: {0}")]
    InvalidCompression(&'static str),
    #[error("feasibility system is inconsistent: {0}")]
    BadSystem(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
