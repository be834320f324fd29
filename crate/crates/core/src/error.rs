use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    Shape {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("singular parameter: denominator {denominator} vanishes")]
    SingularParameter { denominator: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no Jordan block of size >= 2, so no nontrivial witness exists")]
    NoWitness,
    #[error("x_(1,2) = 0: solution is not conjugate to the special solution X0")]
    NotNormalizable,
    #[error("matrix is not a solution of XA - AX = X^{p}")]
    NotASolution { p: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("selected vectors do not span a T-invariant subspace")]
    InvalidSelection,
    #[error("top halves of the selected vectors do not form a basis")]
    GraphCondition,
    #[error("catalog family {family} at {params} has nonzero residual")]
    CatalogFailure { family: String, params: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}
