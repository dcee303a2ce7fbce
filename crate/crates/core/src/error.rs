use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order {n} out of range: expected {min} <= n <= {max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("{op} supports n <= {max}, got n = {n} (set BWL_MAX_N to override enumeration guards)")]
    GuardExceeded {
        op: &'static str,
        n: usize,
        max: usize,
    },

    #[error("point subset must be nonempty")]
    EmptySubset,

    #[error("point {p} out of range for order {n}")]
    PointOutOfRange { p: usize, n: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("{family}: parameter violates {bound}")]
    FamilyParameter { family: String, bound: String },

    #[error("hypergraph has no edges; kernel undefined")]
    EmptyHypergraph,

    #[error("invalid permutation of {n} points")]
    InvalidPermutation { n: usize },

    #[error("equality subsystem is inconsistent")]
    InconsistentEqualities,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("exceptional catalog file missing or unreadable: {path} ({reason})")]
    MissingCatalog { path: String, reason: String },

    #[error("unknown claim id: {0}")]
    UnknownClaim(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
