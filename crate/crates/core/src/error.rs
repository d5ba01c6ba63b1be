use thiserror::Error;

/// Errors raised by the library. Each variant maps to a process exit code
/// through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("point {0} lies on a branch cut or at a branch point")]
    OnCut(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("the functions are linearly dependent (nullity {nullity})")]
    Dependent { nullity: usize },
    #[error("precision escalation exhausted: residual 1e{residual_exp} at {digits} digits")]
    PrecisionExhausted { digits: u32, residual_exp: i64 },
    #[error("time budget of {0} s exceeded")]
    TimeBudget(f64),
    #[error("iteration did not converge: {0}")]
    NotConverged(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Degenerate(_) | Error::Dependent { .. } | Error::InvalidGerm(_) => 2,
            Error::PrecisionExhausted { .. } => 3,
            Error::TimeBudget(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
