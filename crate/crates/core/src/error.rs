use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("weight caps differ: {0} vs {1}")]
    CapMismatch(usize, usize),

    #[error("exponential needs a vanishing constant term")]
    NonzeroConstantTerm,

    #[error("logarithm needs constant coefficient 1")]
    ConstantNotOne,

    #[error("missing power-sum integral for {0}")]
    MissingKey(Partition),

    #[error("need {needed} log-coefficients, got {got}")]
    SeriesTooShort { needed: usize, got: usize },

    #[error("unknown surface `{0}` (expected p2 or p1xp1)")]
    UnknownSurface(String),

    #[error("unknown genus preset `{0}` (expected todd, euler or signature)")]
    UnknownPreset(String),

    #[error("torus parameters ({a}, {b}) are degenerate: {reason}")]
    DegenerateWeights { a: i64, b: i64, reason: String },

    #[error("no generic torus parameters found after {attempts} attempts starting at ({a}, {b})")]
    GenericityExhausted { a: i64, b: i64, attempts: usize },

    #[error("localized classes below top degree do not cancel: k = {k}, t = {t}, u-degree {degree}")]
    VanishingFailure { k: usize, t: i64, degree: usize },

    #[error("z^{n} coefficient has a nonzero component of weight {weight}")]
    HomogeneityFailure { n: usize, weight: usize },

    #[error("n = {n}, {partition}: {reason}")]
    Validation { n: usize, partition: Partition, reason: String },

    #[error("ln φ_m is not quadratic in m at z^{power}")]
    QuadraticFailure { power: usize },

    #[error("malformed Chern key `{0}`")]
    BadChernKey(String),

    #[error("reference table: {0}")]
    Reference(String),
}
