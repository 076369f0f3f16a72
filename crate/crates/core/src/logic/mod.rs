//! First-order and monadic second-order logic on finite words.

mod build;
mod eval;
mod formula;
mod relativize;

use thiserror::Error;

pub use build::{
    build_count_formula, build_endpoints_formula, build_lrtt_class_formula, build_subword_formula,
    build_word_formula, endpoint_by_between, endpoint_by_neighbour, expand_macro, MacroKind,
};
pub use eval::{evaluate, language_of, Compiled, EvalLimits, Valuation};
pub use formula::{
    and, bet, eq, exists, exists_all, exists_set, falsity, forall, forall_set, fresh_name,
    implies, is_set_var, lab, less, member, nbr, neq, not, or, parse_formula, truth, Formula,
    Signature,
};
pub use relativize::{relativize, RelativizeMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("sort error at offset {offset}: {message}")]
    Sort { offset: usize, message: String },
    #[error("arity error at offset {offset}: `{op}` takes {expected} arguments, found {found}")]
    Arity { offset: usize, op: String, expected: usize, found: usize },
    #[error("word length {length} exceeds the evaluation cap {cap}")]
    CapExceeded { length: usize, cap: usize },
    #[error("free variable `{0}` is unassigned")]
    Unassigned(String),
    #[error("variable `{var}` is assigned position {position}, outside 1..={length}")]
    PositionOutOfRange { var: String, position: usize, length: usize },
    #[error("not a sentence: free variables {0:?}")]
    NotSentence(Vec<String>),
    #[error("signature error: {0}")]
    Signature(String),
    #[error("not in prenex form: {0}")]
    NotPrenex(String),
    #[error("Σ₁ sentence in prenex mode: use build_subword_formula for existential sentences")]
    Sigma1,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
