use thiserror::Error;

/// Errors raised by site, object and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point is outside the base order: {0}")]
    OutOfRange(String),
    #[error("operation needs a loop site")]
    NotALoop,
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("objects live on different sites")]
    SiteMismatch,
    #[error("object is projective")]
    ProjectiveObject,
    #[error("object is injective")]
    InjectiveObject,
    #[error("morphisms are not composable")]
    CompositionMismatch,
    #[error("no path from {0} to {1}")]
    NoPath(String, String),
    #[error("keep set is empty")]
    EmptyKeepSet,
    #[error("keep set {0} gives an empty subcategory")]
    EmptySubcategory(String),
    #[error("object does not lie in the perpendicular subcategory")]
    NotInSubcategory,
    #[error("object has infinite length")]
    InfiniteLength,
    #[error("representations have different quivers")]
    RankMismatch,
    #[error("support leaves the window [-{0}, {0}]")]
    SupportOutOfWindow(i64),
    #[error("series precisions differ: {0} vs {1}")]
    PrecisionMismatch(usize, usize),
    #[error("series violates the divisibility pattern: {0}")]
    PatternViolation(String),
    #[error("bijection does not preserve the order: {0}")]
    NotOrderPreserving(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
