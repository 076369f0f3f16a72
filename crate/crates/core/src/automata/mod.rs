//! Regular languages as canonical minimal DFAs: regex compilation, Boolean
//! operations, reversal, quotients and bounded enumeration.

mod alphabet;
mod dfa;
mod nfa;
mod regex;

pub use alphabet::{Alphabet, Word};
pub use dfa::{BooleanOp, Dfa, Equivalence, Side};
pub use nfa::Nfa;
pub use regex::Regex;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("letter `{0}` declared twice")]
    DuplicateLetter(char),
    #[error("`{0}` is reserved by the regex syntax and cannot be a letter")]
    ReservedLetter(char),
    #[error("letter `{0}` is not in the alphabet")]
    ForeignLetter(char),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("alphabet mismatch: `{left}` vs `{right}`")]
    AlphabetMismatch { left: String, right: String },
    #[error("{0}")]
    Operand(String),
    #[error("invalid DFA: {0}")]
    InvalidDfa(String),
    #[error("malformed DFA file: {0}")]
    Json(String),
}

/// Parses `text` over `alphabet` and returns its minimal DFA.
pub fn compile(text: &str, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    Regex::parse(text, alphabet)?.compile(alphabet)
}
