use thiserror::Error;

/// Crate-wide error type. Variants name the failing contract rather than the
/// call site; callers that need structured data (witnesses, violated
/// inequalities) get it through the payload.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size cap exceeded: {what} = {got}, cap = {cap}")]
    SizeCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("instance too large: {0} triangles exceed the solver cap {1}")]
    SolverCap(usize, usize),

    #[error("LP iteration cap reached after {0} pivots; instance is numerically suspect")]
    LpIterationCap(usize),

    #[error("graph is not regular: degrees {0} and {1} both occur")]
    NotRegular(usize, usize),

    #[error("expected a blowup with vertex edges; input carries no block structure")]
    NotBlowup,

    #[error("input graph contains a triangle {0:?}")]
    NotTriangleFree([u32; 3]),

    #[error("configuration rejected: violated inequality {0}")]
    ConfigRejected(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(usize),

    #[error("unknown generator family: {0}")]
    UnknownFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("eigensolver failed to converge on eigenvalue index {0}")]
    EigenNoConvergence(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
