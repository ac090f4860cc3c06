use thiserror::Error;

/// Errors produced by the numerical pipeline and the file readers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("invalid derivative order {0}: expected 1..=4")]
    InvalidOrder(usize),

    #[error("parse error at byte offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("evaluation failed at s = {s}: {message}")]
    Evaluation { s: f64, message: String },

    #[error("initial normal is zero or parallel to the tangent")]
    DegenerateInitialNormal,

    #[error("profile is missing channel `{0}`")]
    IncompleteProfile(&'static str),

    #[error("Frenet frame undefined at all {0} samples (curvature below kappa_min)")]
    UndefinedFrenet(usize),

    #[error("no valid samples left to evaluate")]
    NoValidSamples,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{path}: {message}")]
    Input { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
