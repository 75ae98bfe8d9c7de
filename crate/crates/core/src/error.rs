use thiserror::Error;

use crate::poly::Bidegree;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime (or exceeds 2^31)")]
    NotPrime(u32),
    #[error("matrix product B*A is nonzero; not a complex")]
    ComposeNonzero,
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("zero polynomial has no bidegree")]
    ZeroPoly,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("invalid ring: {0}")]
    BadRing(String),
    #[error("entry ({row},{col}) has bidegree {found}, expected {expected}")]
    DegreeMismatch {
        row: usize,
        col: usize,
        found: Bidegree,
        expected: Bidegree,
    },
    #[error("module element has wrong rank: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("module is zero")]
    ZeroModule,
    #[error("theory {0} is not defined for this ring")]
    BadTheory(String),
    #[error("Cech localization did not stabilize at degree {degree} within {cap} steps")]
    NoStabilize { degree: Bidegree, cap: usize },
    #[error("module is not Cohen-Macaulay")]
    NotCm,
    #[error("module is not generalized Cohen-Macaulay (or is Cohen-Macaulay)")]
    NotGenCm,
    #[error("suite needs m <= 1, got m = {0}")]
    BadM(usize),
    #[error("suite needs depth = dim - 1 (dim {dim}, depth {depth})")]
    BadProfile { dim: i64, depth: i64 },
    #[error("index {0} is unsupported: not s or t-m, module not Cohen-Macaulay, and m > 1")]
    UnsupportedIndex(i64),
    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("window {0} is empty or malformed")]
    BadWindow(String),
}
