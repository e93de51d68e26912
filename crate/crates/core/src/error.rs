use thiserror::Error;

use crate::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("digit {digit} is outside the alphabet of {system}")]
    InvalidDigit { digit: u32, system: String },

    #[error("word is not a valid representation in {system}")]
    NonCanonical { system: String },

    #[error("value does not fit in 64 bits")]
    Overflow,

    #[error("no transition from state {state} on digit {digit}")]
    UndefinedTransition { state: usize, digit: u32 },

    #[error("morphism is not prolongable on its seed letter {seed}")]
    NotProlongable { seed: usize },

    #[error("automaton is incomplete: state {state} has no transition on digit {digit}")]
    IncompleteAutomaton { state: usize, digit: u32 },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("symbol {0} is outside the transducer input alphabet")]
    SymbolOutsideAlphabet(Symbol),

    #[error("the dead-state symbol # already belongs to the alphabet")]
    HashSymbolCollision,

    #[error("canonical-representation language of {0} is not prefix-closed")]
    NotPrefixClosed(String),

    #[error("unknown corpus entry `{0}`")]
    UnknownName(String),

    #[error("input must be at least 1")]
    ZeroInput,

    #[error("word is not balanced")]
    NotBalanced,

    #[error("requested size exceeds the limit ({0})")]
    SizeLimit(String),

    #[error("invalid automaton: {0}")]
    Invalid(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("state {state} has no transition on symbol {symbol}")]
    MissingTransition { state: String, symbol: Symbol },

    #[error("unknown numeration system `{0}`")]
    UnknownNumeration(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
