use thiserror::Error;

use crate::geometry::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point set is not in general position: {}", join_violations(.0))]
    Validation(Vec<Violation>),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("operation needs at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error(
        "refusing to enumerate n = {n} points (cap {cap}); expect between {low:.3e} and {high:.3e} plane graphs. Raise the cap to proceed"
    )]
    OverCap {
        n: usize,
        cap: usize,
        low: f64,
        high: f64,
    },

    #[error("edge bit-vectors hold at most {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },

    #[error("brute-force oracle limited to {max} segments, got {got}")]
    TooManySegments { got: usize, max: usize },

    #[error("point {point} is not isolated in the family root")]
    NotIsolated { point: usize },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed point file: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
