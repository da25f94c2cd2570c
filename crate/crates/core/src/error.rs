use crate::converter::Collection;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("direction must be nonzero")]
    ZeroDirection,

    #[error("degenerate sector: bounding rays coincide")]
    DegenerateSector,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    /// The iteration cap was hit before any state repeated. Carries every
    /// collection computed so far, starting with the initial one.
    #[error("no repeat within {cap} iterations")]
    CapExceeded {
        cap: usize,
        partial: Box<Vec<Collection>>,
    },

    #[error("could not generate {wanted} distinct polytopes (got {got}) within the retry budget")]
    GenerationFailed { wanted: usize, got: usize },

    #[error("claim violated: {0}")]
    ClaimViolated(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported document version {0:?}")]
    Version(String),

    #[error("polytope {polytope}, vertex {vertex}: invalid rational literal {literal:?}")]
    Rational {
        polytope: usize,
        vertex: usize,
        literal: String,
    },

    #[error("polytope {0} has no vertices")]
    EmptyPolytope(usize),

    #[error("invalid rational literal {0:?}")]
    Literal(String),
}
