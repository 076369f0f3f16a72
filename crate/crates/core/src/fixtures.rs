//! Named example languages used throughout the examples and tests.

use crate::automata::{compile, Alphabet, Dfa};
use crate::ltt::{factor_count_dfa, CountClause};

fn alphabet(letters: &str) -> Alphabet {
    Alphabet::parse(letters).expect("fixture alphabet")
}

fn regex(text: &str, letters: &str) -> Dfa {
    compile(text, &alphabet(letters)).expect("fixture regex")
}

/// `(abc)* + (cba)*`, reversible.
pub fn abc_or_cba() -> Dfa {
    regex("(abc)*+(cba)*", "abc")
}

/// `bc(abc)*`, the left quotient of [`abc_or_cba`] by `a`; not reversible.
pub fn bc_abc_star() -> Dfa {
    regex("bc(abc)*", "abc")
}

/// `(ab)*`: locally testable, not reversible.
pub fn ab_star() -> Dfa {
    regex("(ab)*", "ab")
}

/// Words of even length over `{a, b}`: reversible, not aperiodic.
pub fn even_length() -> Dfa {
    regex("((a+b)(a+b))*", "ab")
}

/// `c*ac*bc*` over `{a, b, c}`: aperiodic but not locally threshold testable.
pub fn c_a_c_b_c() -> Dfa {
    regex("c*ac*bc*", "abc")
}

/// `aba* + a*ba`, reversible and a union of `≈rₖᵗ` classes.
pub fn aba_star_or_a_star_ba() -> Dfa {
    regex("aba*+a*ba", "ab")
}

/// `A*aA*bA* ∪ A*bA*aA*` over `{a, b}`: words containing both letters.
pub fn both_letters() -> Dfa {
    regex("(a+b)*a(a+b)*b(a+b)*+(a+b)*b(a+b)*a(a+b)*", "ab")
}

/// Words over `{a, b, c}` with `♯ab = 2 ∧ ♯ba = 1` or `♯ab = 1 ∧ ♯ba = 2`.
///
/// Reversible and locally threshold testable, yet not a union of `≈rₖᵗ`
/// classes for any `(k, t)`.
pub fn ab_ba_counts() -> Dfa {
    let abc = alphabet("abc");
    let left = factor_count_dfa(&abc, &[CountClause::exactly("ab", 2), CountClause::exactly("ba", 1)])
        .expect("small clause values");
    let right = factor_count_dfa(&abc, &[CountClause::exactly("ab", 1), CountClause::exactly("ba", 2)])
        .expect("small clause values");
    left.union(&right).expect("same alphabet")
}

/// Every fixture with a short name, in a fixed order.
pub fn all() -> Vec<(&'static str, Dfa)> {
    vec![
        ("abc-or-cba", abc_or_cba()),
        ("bc-abc-star", bc_abc_star()),
        ("ab-star", ab_star()),
        ("even-length", even_length()),
        ("c-a-c-b-c", c_a_c_b_c()),
        ("aba-star-or-a-star-ba", aba_star_or_a_star_ba()),
        ("both-letters", both_letters()),
        ("ab-ba-counts", ab_ba_counts()),
    ]
}

/// Looks up a fixture by the name used in [`all`].
pub fn by_name(name: &str) -> Option<Dfa> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}

/// A sentence file bundled with the crate, together with a DFA for the
/// language it defines.
pub struct SentenceFixture {
    pub name: &'static str,
    pub text: &'static str,
    pub alphabet: Alphabet,
    pub dfa: Dfa,
}

pub const EVEN_LENGTH_NBR: &str = include_str!("../formulas/even_length_nbr.sexp");
pub const EVEN_LENGTH_ORDER: &str = include_str!("../formulas/even_length_order.sexp");
pub const BOTH_LETTERS: &str = include_str!("../formulas/both_letters.sexp");
pub const FIRST_LETTER_A: &str = include_str!("../formulas/first_letter_a.sexp");
pub const SAME_ENDS: &str = include_str!("../formulas/same_ends.sexp");
pub const BC_ABC_STAR: &str = include_str!("../formulas/bc_abc_star.sexp");

/// The bundled sentences over `<`. The DFA of `even_length_order` includes
/// the empty word, which that sentence accepts.
pub fn order_sentences() -> Vec<SentenceFixture> {
    let fixture = |name, text, letters: &str, dfa: Dfa| SentenceFixture {
        name,
        text,
        alphabet: alphabet(letters),
        dfa,
    };
    vec![
        fixture("even-length", EVEN_LENGTH_ORDER, "ab", even_length()),
        fixture("both-letters", BOTH_LETTERS, "ab", both_letters()),
        fixture("first-letter-a", FIRST_LETTER_A, "ab", regex("a(a+b)*", "ab")),
        fixture("same-ends", SAME_ENDS, "ab", regex("a+b+a(a+b)*a+b(a+b)*b", "ab")),
        fixture("bc-abc-star", BC_ABC_STAR, "abc", bc_abc_star()),
    ]
}
