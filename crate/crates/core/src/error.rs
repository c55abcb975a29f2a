use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {0}: cyclic factors must have order >= 1")]
    InvalidOrder(i64),

    #[error("element arity {got} does not match group rank {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("residue {value} out of range for factor of order {order}")]
    ResidueOutOfRange { value: usize, order: usize },

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("matrix invalid for these orders: {0}")]
    InvalidForOrders(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("generated group exceeds size cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("exponent {exponent} does not divide {torus_order}")]
    TorusDivisibility { exponent: usize, torus_order: usize },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("space mismatch: expected {expected}, got {got}")]
    SpaceMismatch { expected: String, got: String },

    #[error("elements belong to different groups")]
    MixedGroups,

    #[error("matrix dimension {dim} exceeds cap {cap}; use apply form")]
    MatrixCap { dim: usize, cap: usize },

    #[error("zero window: wavelet constant undefined")]
    ZeroWindow,

    #[error("inadmissible window (c_psi = {0:e})")]
    InadmissibleWindow(f64),

    #[error("commutant dimension indeterminate: singular value tail {tail:?}")]
    Indeterminate { tail: Vec<f64> },

    #[error("equivalence check failed: best deviation {0:e}")]
    EquivalenceFailed(f64),

    #[error("resource cap exceeded ({points} points > {cap}); reduce orders or torus_order")]
    ResourceCap { points: usize, cap: usize },

    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
