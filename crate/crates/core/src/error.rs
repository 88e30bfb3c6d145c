use thiserror::Error;

/// Errors raised by configuration handling and the two planners.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    #[error("two points of the configuration coincide")]
    DuplicatePoint,
    #[error("time {0} is outside [0, 1]")]
    TimeOutOfRange(f64),
    #[error("configurations have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("minimum separation {found:e} is below the required {required:e}")]
    InsufficientSeparation { found: f64, required: f64 },
    #[error("angle grouping is ambiguous: a chain of near-coincident angles spans {span:e}")]
    AmbiguousGrouping { span: f64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("redistribution did not terminate within {cap} steps")]
    IterationCapExceeded { cap: usize },
    #[error("phase lift failed: adjacent samples jump by {jump:.3} rad; increase lift_steps")]
    LiftUnwrapFailure { jump: f64 },
    #[error("no triangle side is parallel to the line")]
    NoParallelSide,
    #[error("the two halves of the pair deformation do not meet")]
    MidpointMismatch,
    #[error("segment does not start where the path ends")]
    BrokenChain,
    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),
    #[error("non-finite coordinate")]
    NonFinite,
}

/// Errors raised by braid-word computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {index} is out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("braid is not pure")]
    NotPure,
    #[error("strands {0} and {1} cross an odd number of times")]
    OddCrossingParity(usize, usize),
    #[error("braids act on different strand counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("cannot parse braid word: {0}")]
    Parse(String),
    #[error("conjugation image disagrees with the relabeled linking matrix")]
    ConjugationMismatch,
}

pub type Result<T, E = PlanError> = std::result::Result<T, E>;

/// Errors raised by the experiment harness and file I/O.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Plan(#[from] PlanError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("malformed configuration file: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("refusing to persist a run whose endpoints do not match")]
    InvalidRun,
    #[error("strands {0} and {1} are not adjacent at a crossing; sample more densely")]
    NonSimpleCrossing(usize, usize),
}
