use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("field mismatch: ℚ(√{0}) vs ℚ(√{1})")]
    FieldMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not hyperbolic: {0}")]
    NotHyperbolic(String),
    #[error("identity element has no classification")]
    Identity,
    #[error("not discrete: {0}")]
    NotDiscrete(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl GeomError {
    /// Stable machine-readable kind used by the JSON error envelope.
    pub fn kind(&self) -> &'static str {
        match self {
            GeomError::InvalidInput(_) => "invalid_input",
            GeomError::FieldMismatch(..) => "field_mismatch",
            GeomError::DivisionByZero => "division_by_zero",
            GeomError::NotHyperbolic(_) => "not_hyperbolic",
            GeomError::Identity => "identity",
            GeomError::NotDiscrete(_) => "not_discrete",
            GeomError::OutOfScope(_) => "out_of_scope",
            GeomError::Consistency(_) => "consistency",
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
