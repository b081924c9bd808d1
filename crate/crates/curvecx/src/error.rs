use thiserror::Error;

/// Errors raised by curve, homology and complex operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),

    #[error("vector has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("invalid normal coordinates in face {face}: {reason}")]
    InvalidNormalCoordinates { face: usize, reason: String },

    #[error("multicurve contains a disc-bounding component (vertex link), component {0}")]
    DiscBoundingComponent(usize),

    #[error("expected {expected} orientation signs, got {got}")]
    OrientationCount { expected: usize, got: usize },

    #[error("orientation sign must be +1 or -1, got {0}")]
    BadOrientationSign(i64),

    #[error("multicurves live on different triangulations ({0} vs {1} edges)")]
    TriangulationMismatch(usize, usize),

    #[error("multicurves are not disjoint: geometric intersection {0} > 0")]
    NotDisjoint(u64),

    #[error("cycle is not null-homologous: classes {left:?} vs {right:?}")]
    NotNullHomologous { left: Vec<i64>, right: Vec<i64> },

    #[error("homology classes differ: {left:?} vs {right:?}")]
    ClassMismatch { left: Vec<i64>, right: Vec<i64> },

    #[error("step {step} is not simple: chain weights span {min}..={max}")]
    NonSimpleStep { step: usize, min: i64, max: i64 },

    #[error("step {step} selects level {level}, which contains no region")]
    DegeneratePiece { step: usize, level: i64 },

    #[error("path is empty or has a non-disjoint consecutive pair at step {0}")]
    BadPath(usize),

    #[error("homology class alpha must be nonzero")]
    ZeroAlpha,

    #[error("multicurve is not a vertex of the slice: {0}")]
    NotInSlice(String),
}

pub type Result<T> = std::result::Result<T, Error>;
