use thiserror::Error;

/// Every failure the library can report.
///
/// Numeric payloads are widened to `f64` so the type stays independent of
/// the scalar the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tridiagonal iteration did not converge for eigenvalue {index} within {sweeps} sweeps")]
    ConvergenceFailure { index: usize, sweeps: usize },

    #[error("matrix of dimension {n} has no principal minor")]
    DimensionTooSmall { n: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("eigenvalue {index} is within {tol:e} of a neighbour ({gap:e} apart)")]
    DegenerateEigenvalue { index: usize, gap: f64, tol: f64 },

    #[error("negative weight {value:e} for eigenvalue {index}; spectra are inconsistent")]
    NegativeWeight { index: usize, value: f64 },

    #[error("cluster at {center} needs {needed} minor eigenvalues within {radius:e}, found {found}")]
    MatchingFailure { center: f64, needed: usize, found: usize, radius: f64 },

    #[error("lambda = {lambda} coincides with eigenvalue {pole} (gap {gap:e})")]
    PoleEvaluation { lambda: f64, pole: f64, gap: f64 },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("matrix is not Hermitian at ({row}, {col}): deviation {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI's `error:<kind>:` prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ConvergenceFailure { .. } => "convergence-failure",
            Error::DimensionTooSmall { .. } => "dimension-too-small",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::DegenerateEigenvalue { .. } => "degenerate-eigenvalue",
            Error::NegativeWeight { .. } => "negative-weight",
            Error::MatchingFailure { .. } => "matching-failure",
            Error::PoleEvaluation { .. } => "pole-evaluation",
            Error::Parse { .. } => "parse",
            Error::NotHermitian { .. } => "not-hermitian",
            Error::InvalidSpec(_) => "invalid-spec",
            Error::InvalidArgument(_) => "invalid-argument",
        }
    }

    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::ConvergenceFailure { .. }
                | Error::DegenerateEigenvalue { .. }
                | Error::NegativeWeight { .. }
                | Error::MatchingFailure { .. }
                | Error::PoleEvaluation { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
