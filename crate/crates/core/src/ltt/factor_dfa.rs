use std::collections::HashMap;

use crate::automata::{Alphabet, Dfa, Word};

use super::LttError;

/// Largest value a counting clause may mention.
pub const MAX_CLAUSE_VALUE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Exactly,
    AtLeast,
}

/// `♯(w, factor) = value` or `♯(w, factor) ≥ value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountClause {
    pub factor: Word,
    pub relation: Relation,
    pub value: usize,
}

impl CountClause {
    pub fn exactly(factor: &str, value: usize) -> Self {
        CountClause { factor: Word::from(factor), relation: Relation::Exactly, value }
    }

    pub fn at_least(factor: &str, value: usize) -> Self {
        CountClause { factor: Word::from(factor), relation: Relation::AtLeast, value }
    }

    fn holds(&self, count: usize) -> bool {
        match self.relation {
            Relation::Exactly => count == self.value,
            Relation::AtLeast => count >= self.value,
        }
    }
}

/// Minimal DFA of the words satisfying every clause. Built as a sliding
/// window over the last `max |factor| − 1` letters together with one counter
/// per clause saturating at `value + 1`.
pub fn factor_count_dfa(alphabet: &Alphabet, clauses: &[CountClause]) -> Result<Dfa, LttError> {
    for c in clauses {
        if c.factor.is_empty() {
            return Err(LttError::EmptyFactor);
        }
        if c.value > MAX_CLAUSE_VALUE {
            return Err(LttError::CapExceeded { value: c.value, cap: MAX_CLAUSE_VALUE });
        }
        alphabet.check(&c.factor)?;
    }
    let factors: Vec<Vec<usize>> = clauses
        .iter()
        .map(|c| alphabet.indices(&c.factor))
        .collect::<Result<_, _>>()?;
    let keep = factors.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);

    type State = (Vec<usize>, Vec<usize>);
    let start: State = (Vec::new(), vec![0; clauses.len()]);
    let mut index: HashMap<State, usize> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let mut row = Vec::with_capacity(alphabet.len());
        for a in 0..alphabet.len() {
            let (window, counts) = &states[i];
            let mut seen = window.clone();
            seen.push(a);
            let counts: Vec<usize> = counts
                .iter()
                .zip(&factors)
                .zip(clauses)
                .map(|((&c, f), clause)| {
                    let hit = seen.ends_with(f);
                    (c + usize::from(hit)).min(clause.value + 1)
                })
                .collect();
            let window = seen[seen.len().saturating_sub(keep)..].to_vec();
            let next = (window, counts);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    states.len() - 1
                }
            };
            row.push(id);
        }
        delta.push(row);
        i += 1;
    }
    let accepting = states
        .iter()
        .map(|(_, counts)| clauses.iter().zip(counts).all(|(c, &n)| c.holds(n)))
        .collect();
    Ok(Dfa::new(alphabet.clone(), 0, accepting, delta)?.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltt::count_factor;

    #[test]
    fn single_exact_clause_matches_counting() {
        let ab = Alphabet::parse("ab").unwrap();
        let d = factor_count_dfa(&ab, &[CountClause::exactly("ab", 1)]).unwrap();
        for w in ab.words_up_to(8) {
            let expect = count_factor(&w, &Word::from("ab")).unwrap() == 1;
            assert_eq!(d.accepts(&w).unwrap(), expect, "{w}");
        }
        assert!(d.accepts(&Word::from("aab")).unwrap());
        assert!(!d.accepts(&Word::from("abab")).unwrap());
        assert!(!d.accepts(&Word::from("ba")).unwrap());
    }

    #[test]
    fn no_clauses_is_everything() {
        let ab = Alphabet::parse("ab").unwrap();
        assert_eq!(factor_count_dfa(&ab, &[]).unwrap(), Dfa::universal(&ab));
    }

    #[test]
    fn cap_is_enforced() {
        let ab = Alphabet::parse("ab").unwrap();
        assert_eq!(
            factor_count_dfa(&ab, &[CountClause::at_least("a", 9)]),
            Err(LttError::CapExceeded { value: 9, cap: 8 })
        );
    }
}
