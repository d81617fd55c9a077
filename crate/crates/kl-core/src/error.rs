use thiserror::Error;

/// Errors surfaced by the group, Hecke, cell and tensor layers.
#[derive(Debug, Error)]
pub enum KlError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("element is not in the finite Weyl group W0")]
    NotFinite,

    #[error("element is not in the left cell Gamma_0")]
    NotInGamma0,

    #[error("element is not in the lowest two-sided cell")]
    NotInC0,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),

    #[error("h-coefficient has degree {deg} above the supplied a = {a}")]
    DegreeAboveA { deg: i64, a: i64 },

    #[error("no polynomial: {0}")]
    Empty(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache format error: {0}")]
    CacheFormat(String),
}

pub type Result<T> = std::result::Result<T, KlError>;
