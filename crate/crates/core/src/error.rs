use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operands live on different Fock bases")]
    BasisMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("coherent-state truncation tail {tail:.3e} exceeds tolerance {tolerance:.3e}; increase the cutoff or shrink |z|")]
    TailTooLarge { tail: f64, tolerance: f64 },

    #[error("operator support degree {support} reaches the cutoff {cutoff}; the truncated operator is not finitely supported")]
    SupportExceedsCutoff { support: usize, cutoff: usize },

    #[error("quadrature grid too coarse: order {actual} < required {required}")]
    InsufficientGridOrder { required: usize, actual: usize },

    #[error("grid frame does not match the integrand: {0}")]
    GridFrameMismatch(String),

    #[error("discretized symbol map is rank deficient (smallest singular value {0:.3e}); use a finer sphere grid")]
    RankDeficient(f64),

    #[error("orbit point is antipodal to the base point; the section is undefined there")]
    SectionSingular,

    #[error("point is not on the coadjoint orbit: {0}")]
    OffOrbit(String),

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
}
