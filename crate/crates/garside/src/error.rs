//! Error types shared across the crate.

use thiserror::Error;

/// Errors from constructing or combining braid-group values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count {0} out of range (2..=64)")]
    StrandCount(usize),
    #[error("letter {letter} invalid for {n} strands (need 1 <= |letter| <= {max})", max = n - 1)]
    Letter { n: usize, letter: i64 },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("cannot parse braid letter {0:?}")]
    Parse(String),
    #[error("invalid permutation table: {0}")]
    Permutation(String),
}

/// Errors from curve constructions on the punctured disk.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve module needs at least 3 punctures, got {0}")]
    TooFewPunctures(usize),
    #[error("round curve indices ({i},{j}) invalid for n={n}: need 1 <= i < j <= n")]
    RoundIndices { i: usize, j: usize, n: usize },
    #[error("round curve (1,{0}) is boundary-parallel and carries the zero coordinate vector")]
    BoundaryParallel(usize),
    #[error("parabolic tag ({i},{j}) invalid for n={n}: need 1 <= i <= j < n, (i,j) != (1,{m})", m = n - 1)]
    ParabolicTag { i: usize, j: usize, n: usize },
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// A search or enumeration ran into one of its explicit caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error("ball node cap {cap} exceeded before radius {radius} was explored")]
    BallCap { cap: usize, radius: u32 },
    #[error("conjugation budget {0} exhausted")]
    Budget(u64),
}
