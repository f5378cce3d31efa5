use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rho undefined on empty word")]
    RhoOnEmptyWord,

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },

    #[error("state {state} out of range for automaton with {states} states")]
    StateOutOfRange { state: usize, states: usize },

    #[error("horizon {horizon} is smaller than factor length {n}")]
    HorizonTooSmall { horizon: usize, n: usize },

    #[error("morphism is not prolongable on {0:?}")]
    NonProlongable(char),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("determinization cap exceeded ({0} subset states)")]
    DeterminizationCap(usize),

    #[error("automaton is not trim")]
    NotTrim,

    #[error("FIATC undecidable on horizon-limited data")]
    InexactProfile,

    #[error("no plateau within horizon {0}")]
    NoPlateau(usize),

    #[error("word is not periodic within the materialized window")]
    NotPeriodic,

    #[error("factor count at length {0} does not fit in 64 bits")]
    CountOverflow(usize),

    #[error("truncation length {requested} exceeds oracle limit {limit}")]
    TruncationTooLong { requested: usize, limit: usize },

    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),

    #[error("unsupported source: {0}")]
    Unsupported(String),

    #[error("malformed language spec: {0}")]
    Spec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
