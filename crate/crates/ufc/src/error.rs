use std::fmt;

use thiserror::Error;

use crate::alphabet::Letter;

/// Errors shared by all automaton, transformation, and expression operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed alphabet: letters must be distinct and strictly increasing ({0})")]
    MalformedAlphabet(String),

    #[error("letter '{0}' is not in the alphabet")]
    ForeignLetter(Letter),

    #[error("alphabet {found} is not contained in {required}")]
    AlphabetNotContained { found: String, required: String },

    #[error("operands must have identical alphabets in restricted mode ({left} vs {right})")]
    AlphabetMismatch { left: String, right: String },

    #[error("state {state} out of range for {count} states")]
    StateOutOfRange { state: usize, count: usize },

    #[error("automaton must have at least one state")]
    NoStates,

    #[error("automaton is not complete")]
    NotComplete,

    #[error("automaton is not minimal")]
    NotMinimal,

    #[error("subset construction supports at most {cap} source states, got {got}")]
    SubsetCapacity { got: usize, cap: usize },

    #[error("transformation degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("monoid closure exceeded the cap of {cap} elements")]
    ClosureCapacity { cap: usize },

    #[error("cycle notation: {0}")]
    CycleNotation(String),

    #[error("witness automata require n >= 3, got {0}")]
    WitnessTooSmall(usize),

    #[error("dialect: {0}")]
    Dialect(String),

    #[error("atom index {index} out of range for {count} states")]
    AtomIndexRange { index: u64, count: usize },

    #[error("atom subsets are limited to automata with at most 64 states, got {0}")]
    AtomWidth(usize),

    #[error("atom parameter s = {s} out of range 0..={n}")]
    AtomParameter { n: usize, s: usize },

    #[error(
        "refusing atom sweep for {got} states (default limit {limit}); raise the limit explicitly"
    )]
    AtomSweepRefused { got: usize, limit: usize },

    #[error("a union is not dominated by any star and cannot be eliminated")]
    NotEliminable,

    #[error("interchange data: {0}")]
    Interchange(String),

    #[error("grid ranges must start at 3 or above ({0})")]
    GridRange(String),

    #[error("json: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(format!("{e} (line {}, column {})", e.line(), e.column()))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Display helper used by error messages that mention an alphabet.
pub(crate) fn letters_display(letters: impl IntoIterator<Item = impl fmt::Display>) -> String {
    let inner: Vec<String> = letters.into_iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
