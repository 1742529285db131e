use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("negative dilation factor {0}")]
    NegativeScale(String),
    #[error("degenerate simplex: vertices are affinely dependent or have the wrong count")]
    DegenerateSimplex,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is empty")]
    Empty,
    #[error("vertex enumeration limited to dim <= 4 and <= 16 halfspaces (got dim {dim}, {halfspaces} halfspaces)")]
    ScaleGuardExceeded { dim: usize, halfspaces: usize },
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("degenerate polygon")]
    DegeneratePolygon,
    #[error("radius is infinite (affine hulls are incompatible)")]
    InfiniteRadius,
    #[error("radius is zero (body is lower-dimensional than the gauge)")]
    ZeroRadius,
    #[error("this evaluation requires a centrally symmetric gauge")]
    SymmetricGaugeRequired,
    #[error("gauge is not Minkowski centered at the origin")]
    NotCentered,
    #[error("input must be planar")]
    NotPlanar,
    #[error("input must be a triangle")]
    NotATriangle,
    #[error("the origin is not contained in the gauge")]
    OriginNotInGauge,
    #[error("no vertex of (n+1)(S ∩ -S) lies outside S - S")]
    NoSuchPoint,
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("random generation exhausted its redraw budget")]
    ExhaustedRedraws,
    #[error("dual solution does not yield a valid containment certificate")]
    DegenerateDual,
}

pub type Result<T> = std::result::Result<T, Error>;
