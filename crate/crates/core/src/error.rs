use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a linkage needs at least 3 sides, got {0}")]
    TooFewSides(usize),
    #[error("expected {expected} sides, got {found}")]
    WrongSideCount { expected: usize, found: usize },
    #[error("side {index} is not strictly positive")]
    NonPositiveSide { index: usize },
    #[error("side {index} is negative")]
    NegativeSide { index: usize },
    #[error("value is not a finite number")]
    NonFinite,
    #[error("tangent lengths are not unique for an even number of sides ({0})")]
    EvenN(usize),
    #[error("tangent length {index} is not strictly positive")]
    NonPositiveTangentLength { index: usize },
    #[error("linkage has no tangential configuration")]
    NotTangential,
    #[error("Sylvester biquadratic has negative discriminant")]
    NegativeDiscriminant,
    #[error("no inradius with winding {winding} exists for {n} tangent lengths")]
    NoSolution { winding: u32, n: usize },
    #[error("bisection could not bracket a root: {0}")]
    BracketFailure(&'static str),
    #[error("all sides are zero")]
    DegenerateAllZero,
    #[error("side {index} is not shorter than the sum of the others; the linkage cannot close")]
    NotClosable { index: usize },
    #[error("polynomial has no positive real root")]
    NoPositiveRoot,
    #[error("quadrilateral is degenerate")]
    Degenerate,
    #[error("quadrilateral violates the Pitot condition a1 + a3 = a2 + a4")]
    PitotViolated,
    #[error("arctangent sum misses winding * pi by {residual:e}")]
    AngleMismatch { residual: f64 },
    #[error("radius must be positive and finite")]
    NonPositiveRadius,
    #[error("no short-arc circumradius exists for winding {winding}")]
    NoCircumradius { winding: u32 },
    #[error("sides {0}, {1}, {2} violate the strict triangle inequality")]
    NotATriangle(f64, f64, f64),
    #[error("winding must be positive, got {0}")]
    UnsupportedWinding(u32),
    #[error("generalized Heron degree overflows u64 for n = {0}")]
    DegreeOverflow(usize),
}
