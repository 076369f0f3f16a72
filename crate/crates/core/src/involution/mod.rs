//! Finite semigroups with involution: the syntactic monoid of a language,
//! its reversal involution and the identity checks run on them.

mod semigroup;
mod syntactic;

use thiserror::Error;

use crate::automata::AutomataError;

pub use semigroup::{
    check_involution_identity, check_ltt_identity, idempotents, is_aperiodic, Aperiodicity,
    FiniteSemigroup, Involution, InvolutionIdentity, LttIdentity,
};
pub use syntactic::{
    accepting_star_closed, brute_force_congruence, involution_from_reverse, syntactic_monoid,
    syntactic_monoid_capped, syntactic_semigroup, SyntacticData, DEFAULT_ELEMENT_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("language is not reversible")]
    NotReversible,
    #[error("reversal involution is inconsistent: {0}")]
    InvolutionInconsistent(String),
    #[error("syntactic monoid exceeds {cap} elements")]
    ElementCap { cap: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}
