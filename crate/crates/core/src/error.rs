use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse {0:?} as an exact scalar")]
    Parse(String),

    #[error("invalid rank: sl(N) needs N >= 2, got {0}")]
    InvalidRank(usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("bracket table is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Killing form is degenerate")]
    DegenerateKilling,

    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a Cartan subalgebra: {0}")]
    NotCartan(String),
    #[error("frame does not form a basis of q: {0}")]
    NotAFrame(String),

    #[error("forms live on different coframes ({0} vs {1} generators)")]
    CoframeMismatch(usize, usize),
    #[error("form is not real")]
    NotRealForm,
    #[error("form is not of pure type (1,1)")]
    NotType11,
    #[error("invalid exponent {exponent} for {available} entries")]
    InvalidExponent { exponent: usize, available: usize },

    #[error("Hermitian matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("complex structure is not regular: {0}")]
    NotRegularStructure(String),

    #[error("exponents sum to {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("denominator (dβ₂)²∧ω_K^{{n-2}} vanishes")]
    DegenerateDenominator,
    #[error("no positive solution: c² = {0}")]
    NoPositiveSolution(String),

    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("bad parameter {key:?}: {reason}")]
    BadParameter { key: String, reason: String },
}
