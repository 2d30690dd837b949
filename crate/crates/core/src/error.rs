use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Probability mass lost to the Fock-space truncation exceeds the tolerance.
    #[error("truncation tail mass {mass:.3e} exceeds tolerance {tolerance:.1e}; raise the Fock dimension (currently {dim})")]
    TailMass {
        mass: f64,
        tolerance: f64,
        dim: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("trace {trace} deviates from 1 beyond {tolerance:.1e}")]
    Normalization { trace: f64, tolerance: f64 },

    #[error("matrix is not Hermitian: max |A_ij - conj(A_ji)| = {asymmetry:.3e}")]
    NonHermitian { asymmetry: f64 },

    #[error("eigenvalue {value:.3e} is below the clamp threshold; upstream truncation is likely too small")]
    NegativeEigenvalue { value: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("{0}")]
    Usage(String),

    #[error("config line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::ConfigParse { .. } => 2,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}
