//! Turning `<`-sentences into sentences over `bet`/`N` by fixing an endpoint.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::build::{endpoint_by_between, endpoint_by_neighbour};
use super::formula::*;
use super::{Formula, LogicError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelativizeMode {
    /// `∃e (ψ_N(e) ∧ φ′)`; works for any MSO(<) sentence.
    Mso,
    /// Keeps the quantifier prefix: the endpoint test `∀x,y ¬bet(x,e,y)` is
    /// merged into the first universal block, so the alternation depth is
    /// unchanged for inputs with at least two blocks.
    Prenex,
}

impl FromStr for RelativizeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mso" => Ok(RelativizeMode::Mso),
            "prenex" => Ok(RelativizeMode::Prenex),
            other => Err(format!("unknown relativization mode `{other}` (expected mso or prenex)")),
        }
    }
}

impl fmt::Display for RelativizeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelativizeMode::Mso => "mso",
            RelativizeMode::Prenex => "prenex",
        })
    }
}

/// Returns `χ` with `w ⊨ χ ⇔ (w ⊨ f or wʳ ⊨ f)`. Every `x < y` is read as
/// "x is strictly closer to the endpoint `e` than y".
pub fn relativize(f: &Formula, mode: RelativizeMode) -> Result<Formula, LogicError> {
    if !f.is_sentence() {
        return Err(LogicError::NotSentence(f.free_vars().into_iter().collect()));
    }
    let sig = f.signature();
    if !sig.is_order_only() {
        return Err(LogicError::Signature(format!("expected a sentence over <, found {sig}")));
    }
    let f = f.alpha_renamed();
    let e = fresh_name("e", &f.var_names());
    let replaced = f.map_atoms(&|atom| match atom {
        Formula::Less(x, y) => Some(or(vec![
            and(vec![eq(&e, x), neq(x, y)]),
            bet(&e, x, y),
        ])),
        _ => None,
    });
    let out = match mode {
        RelativizeMode::Mso => exists(&e, and(vec![endpoint_by_neighbour(&e), replaced])),
        RelativizeMode::Prenex => prenex(&replaced, &e)?,
    };
    Ok(out.alpha_renamed())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Quant {
    Exists,
    Forall,
}

fn prenex(f: &Formula, e: &str) -> Result<Formula, LogicError> {
    let mut prefix = Vec::new();
    let mut matrix = f;
    loop {
        match matrix {
            Formula::Exists(x, _) => prefix.push((Quant::Exists, x.clone())),
            Formula::Forall(x, _) => prefix.push((Quant::Forall, x.clone())),
            Formula::ExistsSet(..) | Formula::ForallSet(..) => {
                return Err(LogicError::NotPrenex("set quantifiers are not allowed in prenex mode".into()))
            }
            _ => break,
        }
        matrix = match matrix {
            Formula::Exists(_, g) | Formula::Forall(_, g) => g,
            _ => unreachable!(),
        };
    }
    let mut quantifier_free = true;
    matrix.visit(&mut |g| {
        if matches!(
            g,
            Formula::Exists(..) | Formula::Forall(..) | Formula::ExistsSet(..) | Formula::ForallSet(..)
        ) {
            quantifier_free = false;
        }
    });
    if !quantifier_free {
        return Err(LogicError::NotPrenex("quantifier inside the matrix".into()));
    }
    let blocks = 1 + prefix.windows(2).filter(|p| p[0].0 != p[1].0).count();
    if prefix.is_empty() || blocks < 2 {
        return Err(LogicError::Sigma1);
    }

    // ψ(e) = ∀x,y ¬bet(x,e,y): take its two variables and matrix apart.
    let psi = endpoint_by_between(e);
    let (px, py, psi_matrix) = match psi {
        Formula::Forall(x, g) => match *g {
            Formula::Forall(y, h) => (x, y, *h),
            _ => unreachable!(),
        },
        _ => unreachable!(),
    };
    let used: BTreeSet<String> = f.var_names();
    debug_assert!(!used.contains(&px) && !used.contains(&py));

    let first_forall = prefix.iter().position(|(q, _)| *q == Quant::Forall).expect("two blocks");
    prefix.insert(first_forall, (Quant::Forall, py));
    prefix.insert(first_forall, (Quant::Forall, px));
    let mut out = and(vec![psi_matrix, matrix.clone()]);
    for (q, x) in prefix.into_iter().rev() {
        out = match q {
            Quant::Exists => exists(&x, out),
            Quant::Forall => forall(&x, out),
        };
    }
    Ok(exists(e, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Alphabet, Word};
    use crate::logic::{evaluate, parse_formula, Valuation};

    fn agrees_with_symmetrization(f: &Formula, mode: RelativizeMode, alphabet: &str, max_len: usize) {
        let chi = relativize(f, mode).unwrap();
        assert!(chi.signature().is_undirected());
        let alphabet = Alphabet::parse(alphabet).unwrap();
        for w in alphabet.words_up_to(max_len) {
            let v = Valuation::new();
            let want = evaluate(&w, f, &v).unwrap() || evaluate(&w.reversed(), f, &v).unwrap();
            assert_eq!(evaluate(&w, &chi, &v).unwrap(), want, "{mode} on {w}");
        }
    }

    #[test]
    fn first_letter_is_a() {
        // non-reversible: χ must accept words starting or ending with a
        let f = parse_formula("(exists x (and (lab a x) (forall y (not (< y x)))))").unwrap();
        agrees_with_symmetrization(&f, RelativizeMode::Mso, "ab", 5);
        let chi = relativize(&f, RelativizeMode::Mso).unwrap();
        assert!(evaluate(&Word::from("ba"), &chi, &Valuation::new()).unwrap());
    }

    #[test]
    fn prenex_mode_keeps_shape() {
        let f = parse_formula("(exists x (forall y (and (lab a x) (not (< y x)))))").unwrap();
        agrees_with_symmetrization(&f, RelativizeMode::Prenex, "ab", 5);
    }

    #[test]
    fn rejects_bad_inputs() {
        let sigma1 = parse_formula("(exists x (exists y (and (< x y) (lab a x))))").unwrap();
        assert_eq!(relativize(&sigma1, RelativizeMode::Prenex), Err(LogicError::Sigma1));
        assert!(relativize(&sigma1, RelativizeMode::Mso).is_ok());
        let open = parse_formula("(lab a x)").unwrap();
        assert!(matches!(relativize(&open, RelativizeMode::Mso), Err(LogicError::NotSentence(_))));
        let nbr = parse_formula("(exists x (exists y (N x y)))").unwrap();
        assert!(matches!(relativize(&nbr, RelativizeMode::Mso), Err(LogicError::Signature(_))));
        let nested = parse_formula("(exists x (and (lab a x) (forall y (< y x))))").unwrap();
        assert!(matches!(relativize(&nested, RelativizeMode::Prenex), Err(LogicError::NotPrenex(_))));
    }
}
