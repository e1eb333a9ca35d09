use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("not admissible within cap {cap}")]
    NotAdmissible { cap: usize },
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("malformed coordinates: expected {expected} entries, found {found}")]
    MalformedCoordinates { expected: usize, found: usize },
    #[error("undecidable at cap: Ext^{degree} needs a resolution beyond cap {cap}")]
    UndecidableAtCap { degree: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("AR class ambiguous: annihilator solution space has dimension {dimension}")]
    ArClassAmbiguous { dimension: usize },
    #[error("equivalence violated: {0}")]
    EquivalenceViolated(String),
    #[error("characterization disagreement: {0}")]
    CharacterizationDisagreement(String),
    #[error("internal consistency check failed: {0}")]
    Sentinel(String),
    #[error("presentation cap exceeded at path length {cap}")]
    PresentationCapExceeded { cap: usize },
    #[error("indecomposable list is not certified complete")]
    NotCertified,
    #[error("field characteristic {p} too small for modules of dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
