use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("arity mismatch: expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),

    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("size mismatch: {0}")]
    Size(String),

    #[error("denominator vanishes at the origin")]
    DenominatorVanishes,

    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a univariate matrix, found variables {0:?}")]
    NotUnivariate(Vec<String>),

    #[error("expected a constant matrix")]
    NotConstant,

    #[error("kernel dimension jumps at the point and the projection does not fix v")]
    KernelDimensionJumps,

    #[error("vector is not in the kernel at the point")]
    NotInKernel,

    #[error("seed matrix does not intertwine A and B at the point")]
    NotIntertwining,

    #[error("construction fails: P(xi) vec(Phi) != vec(Phi)")]
    ConstructionFails,

    #[error("witness search exhausted after {0} attempts")]
    WitnessSearchExhausted(usize),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("matrix does not commute with Phi")]
    NotCommuting,

    #[error("characteristic polynomial does not split over Q(i)")]
    DoesNotSplit,

    #[error("eigenvalue functions do not factor the characteristic polynomial")]
    EigenfunctionMismatch,

    #[error("seed construction fails: A(xi) and J(xi) are not similar")]
    SeedConstruction,

    #[error("p and q are not coprime: p={p}, q={q}")]
    NotCoprime { p: u32, q: u32 },

    #[error("line slopes are not pairwise distinct")]
    RepeatedSlope,

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("winding number: zero sample at index {0}")]
    ZeroSample(usize),

    #[error("winding number: consecutive samples {0} and {1} are too far apart in argument")]
    Undersampled(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
