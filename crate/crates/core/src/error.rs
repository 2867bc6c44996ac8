use thiserror::Error;

/// Errors raised by the library. `exit_code` maps them onto CLI exit statuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity in table")]
    NoIdentity,
    #[error("{what} needs {size} basis elements, over the cap of {cap}")]
    TooLarge { what: String, size: u128, cap: u128 },
    #[error("characteristic {p} divides |G_e| = {order}")]
    BadCharacteristic { p: u64, order: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("crossed system violates {axiom} at {witness}")]
    CrossedAxiom { axiom: &'static str, witness: String },
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// 2 for "hypotheses do not hold", 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotApplicable(_) | Error::BadCharacteristic { .. } => 2,
            _ => 1,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "invalid_input",
            Error::NotAssociative { .. } => "not_associative",
            Error::NoIdentity => "no_identity",
            Error::TooLarge { .. } => "cap_exceeded",
            Error::BadCharacteristic { .. } => "bad_characteristic",
            Error::NotApplicable(_) => "not_applicable",
            Error::CrossedAxiom { .. } => "crossed_axiom",
            Error::NotARepresentation(_) => "not_a_representation",
            Error::Dimension(_) => "dimension_mismatch",
            Error::NotChainMap(_) => "not_a_chain_map",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
