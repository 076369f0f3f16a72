//! Formula constructions over the `bet` / `N` signatures.

use crate::automata::{Alphabet, Word};
use crate::ltt::{canonical_factor, count_factor_rev};

use super::formula::*;
use super::{Formula, LogicError};

/// `e` has at most one neighbour: `¬∃p,q (p ≠ q ∧ N(e,p) ∧ N(e,q))`.
pub fn endpoint_by_neighbour(e: &str) -> Formula {
    let p = format!("{e}_p");
    let q = format!("{e}_q");
    not(exists(
        &p,
        exists(&q, and(vec![neq(&p, &q), nbr(e, &p), nbr(e, &q)])),
    ))
}

/// `e` lies strictly between no two positions: `∀x,y ¬bet(x,e,y)`.
pub fn endpoint_by_between(e: &str) -> Formula {
    let x = format!("{e}_x");
    let y = format!("{e}_y");
    forall(&x, forall(&y, not(bet(&x, e, &y))))
}

/// Conjuncts saying `vars` is a non-backtracking `N`-path labelled by `v`.
fn labelled_chain(vars: &[String], v: &Word) -> Vec<Formula> {
    let n = vars.len();
    let mut parts = Vec::new();
    for j in 0..n.saturating_sub(1) {
        parts.push(nbr(&vars[j], &vars[j + 1]));
    }
    for j in 1..n.saturating_sub(1) {
        parts.push(neq(&vars[j - 1], &vars[j + 1]));
    }
    for (j, &a) in v.letters().iter().enumerate() {
        parts.push(lab(a, &vars[j]));
    }
    parts
}

fn chain_vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("{prefix}{j}")).collect()
}

/// Σ₁(bet) sentence for the words having `u` or `uʳ` as a scattered subword.
pub fn build_subword_formula(u: &Word) -> Result<Formula, LogicError> {
    if u.is_empty() {
        return Err(LogicError::InvalidArgument("subword must be nonempty".into()));
    }
    let xs = chain_vars("x", u.len());
    let mut parts: Vec<Formula> = u
        .letters()
        .iter()
        .zip(&xs)
        .map(|(&a, x)| lab(a, x))
        .collect();
    for i in 1..xs.len().saturating_sub(1) {
        parts.push(bet(&xs[i - 1], &xs[i], &xs[i + 1]));
    }
    // with two letters there is no bet-chain to force distinct positions
    if xs.len() == 2 {
        parts.push(neq(&xs[0], &xs[1]));
    }
    let body = if parts.len() == 1 { parts.pop().expect("one part") } else { and(parts) };
    Ok(exists_all(&xs, body).alpha_renamed())
}

/// FO(N) sentence `φ_v^{≥m}`: `♯ʳ(w, v) ≥ m`, via `m` labelled
/// non-backtracking `N`-chains with pairwise distinct unordered endpoints.
pub fn build_count_formula(v: &Word, m: usize) -> Result<Formula, LogicError> {
    if v.is_empty() || m == 0 {
        return Err(LogicError::InvalidArgument("need a nonempty factor and m ≥ 1".into()));
    }
    let n = v.len();
    let chains: Vec<Vec<String>> = (1..=m).map(|i| chain_vars(&format!("x{i}_"), n)).collect();
    let mut parts = Vec::new();
    for chain in &chains {
        parts.extend(labelled_chain(chain, v));
    }
    for i in 0..m {
        for j in i + 1..m {
            let (ci, cj) = (&chains[i], &chains[j]);
            parts.push(not(or(vec![
                and(vec![eq(&ci[0], &cj[0]), eq(&ci[n - 1], &cj[n - 1])]),
                and(vec![eq(&ci[0], &cj[n - 1]), eq(&ci[n - 1], &cj[0])]),
            ])));
        }
    }
    let vars: Vec<String> = chains.into_iter().flatten().collect();
    Ok(exists_all(&vars, and(parts)).alpha_renamed())
}

/// FO(N) sentence `ψ_v` defining exactly `{v, vʳ}`.
pub fn build_word_formula(v: &Word) -> Result<Formula, LogicError> {
    if v.is_empty() {
        return Err(LogicError::InvalidArgument("word must be nonempty".into()));
    }
    let xs = chain_vars("x", v.len());
    let mut parts = vec![endpoint_by_neighbour(&xs[0])];
    parts.extend(labelled_chain(&xs, v));
    parts.push(forall("z", or(xs.iter().map(|x| eq("z", x)).collect())));
    Ok(exists_all(&xs, and(parts)).alpha_renamed())
}

/// FO(N) sentence `χ_{x,y}`: on words of length `≥ |x|`, true iff
/// `{prefix_{|x|}(w), reverse(suffix_{|x|}(w))} = {x, y}`.
pub fn build_endpoints_formula(x: &Word, y: &Word) -> Result<Formula, LogicError> {
    if x.len() != y.len() {
        return Err(LogicError::InvalidArgument(format!(
            "endpoint words differ in length ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    if x.is_empty() {
        return Err(LogicError::InvalidArgument("endpoint words must be nonempty".into()));
    }
    let ps = chain_vars("p", x.len());
    let qs = chain_vars("q", y.len());
    let mut parts = vec![endpoint_by_neighbour(&ps[0]), endpoint_by_neighbour(&qs[0])];
    parts.extend(labelled_chain(&ps, x));
    parts.extend(labelled_chain(&qs, y));
    // distinct ends, unless the word has a single position
    parts.push(or(vec![neq(&ps[0], &qs[0]), forall("z", eq("z", &ps[0]))]));
    let vars: Vec<String> = ps.into_iter().chain(qs).collect();
    Ok(exists_all(&vars, and(parts)).alpha_renamed())
}

/// FO(N) sentence defining the `≈rₖᵗ` class of `w` over `alphabet`.
pub fn build_lrtt_class_formula(
    w: &Word,
    k: usize,
    t: usize,
    alphabet: &Alphabet,
) -> Result<Formula, LogicError> {
    if k == 0 || t == 0 {
        return Err(LogicError::InvalidArgument("k and t must be positive".into()));
    }
    alphabet
        .check(w)
        .map_err(|e| LogicError::InvalidArgument(e.to_string()))?;
    if w.len() < k {
        return if w.is_empty() {
            Ok(forall("z", falsity()))
        } else {
            build_word_formula(w)
        };
    }
    let mut parts = Vec::new();
    for len in 1..=k {
        for v in alphabet.words_of_length(len) {
            if canonical_factor(&v) != v {
                continue;
            }
            let c = count_factor_rev(w, &v).expect("nonempty factor").min(t);
            if c >= 1 {
                parts.push(build_count_formula(&v, c)?);
            }
            if c < t {
                parts.push(not(build_count_formula(&v, c + 1)?));
            }
        }
    }
    if k >= 2 {
        let x = w.prefix(k - 1);
        let y = w.suffix(k - 1).reversed();
        parts.push(build_endpoints_formula(&x, &y)?);
    }
    Ok(and(parts).alpha_renamed())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MacroKind {
    /// `N(x,y)` from `bet`, free variables `x, y`.
    NFromBet,
    /// `bet(x,y,z)` from `N` with set quantifiers, free variables `x, y, z`.
    BetFromN,
}

pub fn expand_macro(kind: MacroKind) -> Formula {
    match kind {
        MacroKind::NFromBet => and(vec![neq("x", "y"), forall("z", not(bet("x", "z", "y")))]),
        MacroKind::BetFromN => {
            // X contains x, z and another position, and every other member of
            // X has two neighbours in X; for x, z at distance ≥ 2 the only such
            // X is the closed interval between them.
            let segment = |set: &str| {
                let low = set.to_lowercase();
                let w = format!("{low}_w");
                let p = format!("{low}_p");
                let q1 = format!("{low}_q1");
                let q2 = format!("{low}_q2");
                and(vec![
                    member("x", set),
                    member("z", set),
                    exists(&w, and(vec![member(&w, set), neq(&w, "x"), neq(&w, "z")])),
                    forall(
                        &p,
                        implies(
                            and(vec![member(&p, set), neq(&p, "x"), neq(&p, "z")]),
                            exists(
                                &q1,
                                exists(
                                    &q2,
                                    and(vec![
                                        neq(&q1, &q2),
                                        nbr(&p, &q1),
                                        nbr(&p, &q2),
                                        member(&q1, set),
                                        member(&q2, set),
                                    ]),
                                ),
                            ),
                        ),
                    ),
                ])
            };
            and(vec![
                neq("y", "x"),
                neq("y", "z"),
                exists_set("S", segment("S")),
                forall_set("X", implies(segment("X"), member("y", "X"))),
            ])
            .alpha_renamed()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{evaluate, language_of, EvalLimits, Valuation};

    fn holds(f: &Formula, w: &str) -> bool {
        evaluate(&Word::from(w), f, &Valuation::new()).unwrap()
    }

    #[test]
    fn count_formula_examples() {
        let ab = Word::from("ab");
        assert!(holds(&build_count_formula(&ab, 1).unwrap(), "ba"));
        let two = build_count_formula(&ab, 2).unwrap();
        assert!(holds(&two, "abab"));
        assert!(!holds(&two, "ab"));
        assert!(holds(&build_count_formula(&ab, 3).unwrap(), "abab"));
        assert!(!holds(&build_count_formula(&ab, 4).unwrap(), "abab"));
        let aa2 = build_count_formula(&Word::from("aa"), 2).unwrap();
        assert!(holds(&aa2, "aaa"));
        assert!(!holds(&build_count_formula(&Word::from("aa"), 3).unwrap(), "aaa"));
    }

    #[test]
    fn word_formula_pins_the_word() {
        let ab = Alphabet::parse("ab").unwrap();
        let lang = language_of(&build_word_formula(&Word::from("ab")).unwrap(), &ab, 4, EvalLimits::default()).unwrap();
        assert_eq!(lang, vec![Word::from("ab"), Word::from("ba")]);
        let lang = language_of(&build_word_formula(&Word::from("aba")).unwrap(), &ab, 4, EvalLimits::default()).unwrap();
        assert_eq!(lang, vec![Word::from("aba")]);
        let abc = build_word_formula(&Word::from("abc")).unwrap();
        assert!(holds(&abc, "cba"));
        assert!(!holds(&abc, "abcabc"));
    }

    #[test]
    fn endpoints_formula() {
        let f = build_endpoints_formula(&Word::from("ab"), &Word::from("aa")).unwrap();
        assert!(!holds(&f, "abba"));
        let g = build_endpoints_formula(&Word::from("ab"), &Word::from("ab")).unwrap();
        assert!(holds(&g, "abba"));
        let single = build_endpoints_formula(&Word::from("a"), &Word::from("a")).unwrap();
        assert!(holds(&single, "a"));
        assert!(build_endpoints_formula(&Word::from("ab"), &Word::from("a")).is_err());
    }

    #[test]
    fn subword_formula() {
        let f = build_subword_formula(&Word::from("abc")).unwrap();
        assert!(holds(&f, "acbc"));
        assert!(holds(&f, "cba"));
        assert!(!holds(&f, "acb"));
        assert_eq!(build_subword_formula(&Word::from("a")).unwrap(), exists("x1", lab('a', "x1")));
        assert!(!holds(&build_subword_formula(&Word::from("aa")).unwrap(), "a"));
        assert!(build_subword_formula(&Word::empty()).is_err());
    }

    #[test]
    fn short_class_formula() {
        let ab = Alphabet::parse("ab").unwrap();
        let f = build_lrtt_class_formula(&Word::from("ab"), 3, 1, &ab).unwrap();
        let lang = language_of(&f, &ab, 5, EvalLimits::default()).unwrap();
        assert_eq!(lang, vec![Word::from("ab"), Word::from("ba")]);
        let eps = build_lrtt_class_formula(&Word::empty(), 2, 1, &ab).unwrap();
        assert_eq!(language_of(&eps, &ab, 3, EvalLimits::default()).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn macros_on_examples() {
        let n = expand_macro(MacroKind::NFromBet);
        let w = Word::from("abc");
        assert!(evaluate(&w, &n, &Valuation::new().with("x", 1).with("y", 2)).unwrap());
        assert!(!evaluate(&w, &n, &Valuation::new().with("x", 1).with("y", 3)).unwrap());
        let b = expand_macro(MacroKind::BetFromN);
        let w = Word::from("abcd");
        let v = Valuation::new().with("x", 1).with("y", 2).with("z", 4);
        assert!(evaluate(&w, &b, &v).unwrap());
    }
}
