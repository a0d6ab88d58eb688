use thiserror::Error;

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("length must be at least 1")]
    ZeroLength,

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("the zero element does not define a module")]
    ZeroElement,

    #[error("{0} is not in J* (0 <= Re < 1, nonzero)")]
    NotInJStar(String),

    #[error("degenerate window [{lo}, {hi}]")]
    DegenerateWindow { lo: i64, hi: i64 },

    #[error("window [{lo}, {hi}] too small: need at least [{need_lo}, {need_hi}]")]
    WindowTooSmall {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },

    #[error("relation violated: {0}")]
    RelationViolated(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("objects live over different presentations")]
    BackendMismatch,

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("map is not injective")]
    NotInjective,

    #[error("map is not surjective")]
    NotSurjective,

    #[error("sequence is not short exact: {0}")]
    NotExact(String),

    #[error("zero object")]
    ZeroObject,

    #[error("object is not indecomposable")]
    NotIndecomposable,

    #[error("semisimple quotient of dimension {0} violates k-rationality")]
    NotKRational(usize),

    #[error("object is not of finite length over the supplied simple family")]
    NotFiniteLength,

    #[error("simple family is not orthogonal: Hom({0}, {1}) != 0")]
    NonOrthogonal(String, String),

    #[error("simple `{0}` is not a k-rational point")]
    NotKRationalPoint(String),

    #[error("the uniseriality criterion fails: {0}")]
    UcViolated(String),

    #[error("order vector does not follow arrows of the species at position {0}")]
    NotAPath(usize),

    #[error("invalid iterated extension: {0}")]
    InvalidIteratedExtension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
