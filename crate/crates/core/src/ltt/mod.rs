//! Factor counting, the `≈ₖᵗ` / `≈rₖᵗ` equivalences and the fixed-`(k, t)`
//! union-of-classes decision.

mod factor_dfa;
mod profile;
mod union;

pub use factor_dfa::{factor_count_dfa, CountClause, Relation, MAX_CLAUSE_VALUE};
pub use profile::{
    canonical_factor, count_factor, count_factor_rev, lrtt_equiv, lrtt_profile, ltt_equiv,
    ltt_profile, LrttClass, LrttProfile, LttClass, LttProfile, ShortWordClass,
};
pub use union::{
    is_union_of_classes, is_union_of_classes_capped, search_params, search_params_capped, Mode,
    ProfileAutomaton, ProfileState, SearchOutcome, UnionVerdict, DEFAULT_STATE_CAP,
};

use thiserror::Error;

use crate::automata::AutomataError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LttError {
    #[error("factor must be nonempty")]
    EmptyFactor,
    #[error("clause value {value} exceeds the cap of {cap}")]
    CapExceeded { value: usize, cap: usize },
    #[error(transparent)]
    Automata(#[from] AutomataError),
}
