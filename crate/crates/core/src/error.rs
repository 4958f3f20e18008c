use serde::Serialize;
use thiserror::Error;

/// A single failed quandle axiom together with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    /// 1 = idempotence, 2 = left-invertibility, 3 = left-distributivity.
    pub axiom: u8,
    pub witness: Vec<usize>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "axiom {} violated at ({})", self.axiom, w.join(", "))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Shape(String),

    #[error("entry {value} at ({row}, {col}) is out of range for size {size}")]
    Range {
        row: usize,
        col: usize,
        value: i64,
        size: usize,
    },

    #[error("{} axiom violation(s); first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),

    #[error("index {index} out of range for size {size}")]
    Index { index: usize, size: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("not a group: {0}")]
    InvalidGroup(String),

    #[error("not a subgroup: product of {0} and {1} leaves the subset")]
    NotASubgroup(usize, usize),

    #[error("group is not abelian: {0} and {1} do not commute")]
    NotAbelian(usize, usize),

    #[error("not a group automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("subgroup elements moved by the automorphism: {0:?}")]
    NotFixed(Vec<usize>),

    #[error("cocycle does not vanish on the diagonal at x = {0:?}")]
    Cocycle(Vec<usize>),

    #[error("coset operation is not well defined: representatives {0:?} disagree")]
    NotWellDefined((usize, usize)),

    #[error("parameter is not invertible mod {p}")]
    NotInvertible { p: u32 },

    #[error("{0} is not a supported prime")]
    NotPrime(u32),

    #[error("input too large: size {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("subset is not closed under the quandle operations: {0} ▷ {1} leaves it")]
    NotClosed(usize, usize),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("inconsistent arc labels: missing {missing:?}, duplicated {duplicated:?}")]
    InconsistentArcs {
        missing: Vec<usize>,
        duplicated: Vec<usize>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
