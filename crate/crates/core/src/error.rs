use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation `{0}` needs a second operand")]
    MissingOperand(&'static str),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("invalid set: {0}")]
    InvalidSet(String),
    #[error("resource cap exceeded in {what} (cap {cap})")]
    ResourceCap { what: &'static str, cap: usize },
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable code, used by the command-line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AlphabetMismatch(_) => "E_ALPHABET",
            Error::UnknownLetter(_) => "E_LETTER",
            Error::DimensionMismatch { .. } => "E_DIMENSION",
            Error::MissingOperand(_) => "E_OPERAND",
            Error::InvalidAutomaton(_) => "E_AUTOMATON",
            Error::InvalidAlphabet(_) => "E_ALPHABET",
            Error::InvalidWord(_) => "E_WORD",
            Error::InvalidFormula(_) => "E_FORMULA",
            Error::InvalidSet(_) => "E_SET",
            Error::ResourceCap { .. } => "E_CAP",
            Error::Io(_) => "E_IO",
            Error::Json(_) => "E_JSON",
        }
    }

    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
