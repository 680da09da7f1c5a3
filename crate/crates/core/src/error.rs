use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("labeling error: {0}")]
    Labeling(String),

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// `r` is below the construction threshold `g(k)`.
    #[error("r = {r} is below the threshold g({k}) = {threshold}")]
    Threshold {
        k: usize,
        r: usize,
        threshold: usize,
    },

    #[error("no valid coloring with at most {max_colors} colors")]
    CapExceeded { max_colors: usize },

    #[error(
        "refusing exhaustive search: about {estimate} canonical colorings exceed the limit of {limit} (use force to override)"
    )]
    CostGuard { estimate: u128, limit: u128 },

    #[error("witness generation for case {tag} produced {found} paths, {needed} needed")]
    WitnessShortfall {
        tag: String,
        found: usize,
        needed: usize,
    },

    #[error("malformed coloring file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
