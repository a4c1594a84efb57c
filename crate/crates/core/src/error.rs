use thiserror::Error;

pub type Result<T, E = PickError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PickError {
    #[error("{what} is not finite")]
    NonFinite { what: String },

    #[error("{what} has modulus {modulus}, outside the admissible disc")]
    Domain { what: String, modulus: f64 },

    #[error("pole: 1 - conj(u) v vanishes for u = {u}, v = {v}")]
    Pole { u: String, v: String },

    #[error("nodes {i} and {j} coincide (separation {separation:e} below floor {floor:e})")]
    NodeCollision {
        i: usize,
        j: usize,
        separation: f64,
        floor: f64,
    },

    #[error("{count} nodes exceeds the supported maximum of {max}")]
    TooManyNodes { count: usize, max: usize },

    #[error("empty node set")]
    Empty,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NonHermitian { deviation: f64 },

    #[error("alpha is the zero tuple")]
    ZeroAlpha,

    #[error("closed form not applicable to this alpha pattern")]
    NotApplicable,

    #[error("determinant polynomial is degenerate: all sampled determinants vanish")]
    DegeneratePolynomial,

    #[error("no admissible root of the determinant polynomial")]
    NoAdmissibleRoot,

    #[error("interpolation problem is not solvable")]
    Unsolvable,

    #[error("data is not on the boundary of the Pick body (mu = {mu})")]
    NotOnBoundary { mu: f64 },

    #[error("index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("pair indices must differ (got {0} twice)")]
    SameIndex(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("graph disc through coordinate {coordinate} is not applicable: {reason}")]
    InfeasibleGraphDisc { coordinate: usize, reason: String },

    #[error("no feasible analytic disc found by the search")]
    NoFeasibleDisc,

    #[error("invalid candidate disc: {0}")]
    InvalidCandidate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
