use thiserror::Error;

/// Errors produced while building or evaluating expansions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("singular matrix: pivot {pivot:e} at column {column} below threshold {threshold:e}")]
    SingularMatrix {
        column: usize,
        pivot: f64,
        threshold: f64,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("integrand is not finite at x = {at:?}")]
    NonFiniteIntegrand { at: Vec<f64> },
    #[error("series kind {0} is not supported")]
    UnsupportedKind(String),
    #[error("series kind {kind} cannot be used on a {domain} domain")]
    KindDomainMismatch { kind: String, domain: String },
    #[error("derivative order {order} exceeds the maximum {max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("derivative order {0} was not built")]
    OrderNotBuilt(String),
    #[error("normalizer u_max = {0:e} is degenerate")]
    DegenerateNormalizer(f64),
    #[error("missing error component {0}")]
    MissingComponent(String),
    #[error("unknown sample id {0}")]
    UnknownSample(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
