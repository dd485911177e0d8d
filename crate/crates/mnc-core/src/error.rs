use thiserror::Error;

/// Errors surfaced by the module, seminorm and measure operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("truncation mismatch: expected {expected}, got {got}")]
    TruncationMismatch { expected: usize, got: usize },
    #[error("element is not normal: commutator defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotNormal { defect: f64, tol: f64 },
    #[error("element is not unitary: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotUnitary { defect: f64, tol: f64 },
    #[error("matrix is not a projection: {what} defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotProjection { what: String, defect: f64, tol: f64 },
    #[error("not a valid state: {0}")]
    InvalidState(String),
    #[error("system vector {index} violates the unit-norm bound: norm {norm}")]
    NormBoundViolated { index: usize, norm: f64 },
    #[error("blocked system has a vanishing block at index {index} (norm {norm:.3e} <= {tol:.3e})")]
    VanishingBlock { index: usize, norm: f64, tol: f64 },
    #[error("break indices must be strictly increasing and within the truncation: {0}")]
    BadBreaks(String),
    #[error("epsilon {epsilon} is outside (0, {lambda}) required by the witness construction")]
    EpsilonOutOfRange { epsilon: f64, lambda: f64 },
    #[error(
        "sampler cannot reach tail norm {required:.6} at index {index}; best achievable {best:.6}"
    )]
    SamplerExhausted { index: usize, required: f64, best: f64 },
    #[error(
        "truncation window too small for {requested} witnesses (achieved {achieved}); \
         estimated minimal truncation {min_truncation}"
    )]
    WindowTooSmall { requested: usize, achieved: usize, min_truncation: usize },
    #[error("profile window exceeds truncation: n_max {n_max} > N {truncation}")]
    WindowExceedsTruncation { n_max: usize, truncation: usize },
    #[error("budget exceeded for exact {solver}: {detail}")]
    BudgetExceeded { solver: &'static str, detail: String },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bracket violation: lower {lower} exceeds upper {upper} beyond tolerance")]
    BracketViolation { lower: f64, upper: f64 },
    #[error("reference computation did not converge: {0}")]
    OracleDiverged(String),
}

pub type Result<T> = std::result::Result<T, Error>;
