use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("unit law fails: {0}")]
    Unit(String),
    #[error("path enumeration exceeded the cap of {0} paths")]
    PathCap(usize),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("unsupported over this field: {0}")]
    Unsupported(String),
    #[error("idempotent splitting failed: {0}")]
    Splitting(String),
    #[error("no eligible object")]
    NoEligibleObject,
    #[error("zero module")]
    ZeroModule,
    #[error("not a module morphism: {0}")]
    NotMorphism(String),
    #[error("not a Nakayama algebra: {0}")]
    NotNakayama(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("uncertified structure: {0}")]
    Uncertified(String),
    #[error("cap exhausted: {0}")]
    Cap(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
