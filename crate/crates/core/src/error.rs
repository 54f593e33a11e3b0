use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty ambient")]
    EmptyAmbient,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("Hilbert basis requires pointed cone")]
    NotPointed,

    #[error("unbounded region")]
    Unbounded,

    #[error("divergent weight family for sign pattern {0:?}")]
    DivergentWeight(Vec<usize>),

    #[error("face correspondence requires nef")]
    FaceRequiresNef,

    #[error("requires nef twist")]
    RequiresNefTwist,

    #[error("requires ample twist")]
    RequiresAmpleTwist,

    #[error("only 3-folds supported")]
    OnlyThreefolds,

    #[error("expected a rank-{expected} fan, found rank {found}")]
    FanRank { expected: usize, found: usize },

    #[error("not a cone of the fan: {0:?}")]
    NotACone(Vec<usize>),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("inconsistent Chern data: {0}")]
    InconsistentChern(String),

    #[error("degree {0} is odd")]
    OddDegree(i64),

    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    #[error("cannot parse class `{0}`")]
    ClassSyntax(String),

    #[error("unknown basis name `{0}`")]
    UnknownName(String),

    #[error("fan has no named basis")]
    NoNamedBasis,

    #[error("invariant table: {0}")]
    InvariantTable(String),

    #[error("schema: {0}")]
    Schema(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
