use thiserror::Error;

/// Errors produced by the algebra, calculus and expansion routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scale mismatch: {left} vs {right}")]
    ScaleMismatch { left: f64, right: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(&'static str),

    #[error("sgn(t) is undefined at t = 0")]
    ZeroScaleSign,

    #[error("element is singular (det = {det:e})")]
    Singular { det: f64 },

    #[error("matrix does not have the realization pattern (residual {residual:e})")]
    PatternViolation { residual: f64 },

    #[error("hyperbolic number lies on the null cone (seminorm {seminorm:e})")]
    NullCone { seminorm: f64 },

    #[error("no polar branch reconstructs the input (residual {residual:e})")]
    NoBranch { residual: f64 },

    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("operator {op} is not defined at scale t = {t}")]
    ScaleConstraint { op: &'static str, t: f64 },

    #[error("function is not left regular: residual {residual:e} at {witness:?}")]
    NotLeftRegular { witness: [f64; 4], residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
