use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Alphabet, AutomataError, Nfa, Word};

/// Complete deterministic automaton.
///
/// Every constructor returns a total transition function; a non-accepting sink
/// is added whenever a transition is missing. After [`Dfa::minimize`] the
/// automaton is Myhill–Nerode minimal and its states are numbered in
/// shortlex-BFS order from the initial state, so two minimal DFAs are equal
/// as values exactly when they accept the same language.
#[derive(Clone, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    /// Row-major `states × letters`.
    delta: Vec<usize>,
    minimal: bool,
}

/// Structural equality of the tables; the cached minimality flag is ignored.
impl PartialEq for Dfa {
    fn eq(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.accepting == other.accepting
            && self.delta == other.delta
    }
}

impl Eq for Dfa {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BooleanOp {
    Union,
    Intersection,
    Difference,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of a language comparison. `Differ` carries the shortlex-least word
/// in the symmetric difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    Differ(Word),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

impl Dfa {
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<usize>,
    ) -> Dfa {
        debug_assert_eq!(delta.len(), accepting.len() * alphabet.len());
        Dfa {
            alphabet,
            initial,
            accepting,
            delta,
            minimal: false,
        }
    }

    /// Builds a DFA from an explicit table, validating every entry.
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Dfa, AutomataError> {
        let n = accepting.len();
        if delta.len() != n || initial >= n {
            return Err(AutomataError::InvalidDfa("state count mismatch".into()));
        }
        let mut flat = Vec::with_capacity(n * alphabet.len());
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(AutomataError::InvalidDfa("row width differs from alphabet".into()));
            }
            if let Some(&bad) = row.iter().find(|&&q| q >= n) {
                return Err(AutomataError::InvalidDfa(format!("target state {bad} out of range")));
            }
            flat.extend_from_slice(row);
        }
        Ok(Dfa::from_parts(alphabet, initial, accepting, flat))
    }

    /// The empty language: a single rejecting sink.
    pub fn empty(alphabet: &Alphabet) -> Dfa {
        let mut d = Dfa::from_parts(alphabet.clone(), 0, vec![false], vec![0; alphabet.len()]);
        d.minimal = true;
        d
    }

    /// All of `A*`.
    pub fn universal(alphabet: &Alphabet) -> Dfa {
        let mut d = Dfa::from_parts(alphabet.clone(), 0, vec![true], vec![0; alphabet.len()]);
        d.minimal = true;
        d
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.alphabet.len() + letter]
    }

    pub fn run_indices(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &a| self.next(q, a))
    }

    /// State reached from `from` after reading `word`.
    pub fn run_from(&self, from: usize, word: &Word) -> Result<usize, AutomataError> {
        let idx = self.alphabet.indices(word)?;
        Ok(self.run_indices(from, &idx))
    }

    pub fn accepts(&self, word: &Word) -> Result<bool, AutomataError> {
        Ok(self.accepting[self.run_from(self.initial, word)?])
    }

    fn check_alphabet(&self, other: &Dfa) -> Result<(), AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    /// Minimal DFA with canonical shortlex-BFS numbering.
    pub fn minimize(&self) -> Dfa {
        if self.minimal {
            return self.clone();
        }
        let k = self.alphabet.len();
        let order = self.bfs_order();
        let mut class_of = vec![usize::MAX; self.states()];
        // Moore refinement over reachable states only
        let mut classes: Vec<usize> = order
            .iter()
            .map(|&q| usize::from(self.accepting[q]))
            .collect();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut count = classes.iter().copied().max().map_or(0, |m| m + 1);
        loop {
            let mut sig_index: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next_classes = Vec::with_capacity(order.len());
            for (i, &q) in order.iter().enumerate() {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(classes[i]);
                for a in 0..k {
                    sig.push(classes[pos[&self.next(q, a)]]);
                }
                let fresh = sig_index.len();
                next_classes.push(*sig_index.entry(sig).or_insert(fresh));
            }
            let new_count = sig_index.len();
            classes = next_classes;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        for (i, &q) in order.iter().enumerate() {
            class_of[q] = classes[i];
        }
        // representative automaton over classes, then canonical renumbering
        let mut delta = vec![0; count * k];
        let mut accepting = vec![false; count];
        for &q in &order {
            let c = class_of[q];
            accepting[c] = self.accepting[q];
            for a in 0..k {
                delta[c * k + a] = class_of[self.next(q, a)];
            }
        }
        let quotient = Dfa::from_parts(self.alphabet.clone(), class_of[self.initial], accepting, delta);
        let mut canon = quotient.renumbered();
        canon.minimal = true;
        canon
    }

    /// Reachable states in shortlex-BFS order.
    fn bfs_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for a in 0..self.alphabet.len() {
                let r = self.next(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
            i += 1;
        }
        order
    }

    /// Keeps reachable states only, numbered in shortlex-BFS order.
    fn renumbered(&self) -> Dfa {
        let k = self.alphabet.len();
        let order = self.bfs_order();
        let mut new_id = vec![usize::MAX; self.states()];
        for (i, &q) in order.iter().enumerate() {
            new_id[q] = i;
        }
        let mut delta = Vec::with_capacity(order.len() * k);
        for &q in &order {
            for a in 0..k {
                delta.push(new_id[self.next(q, a)]);
            }
        }
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Minimal DFA of the reversed language.
    pub fn reverse(&self) -> Dfa {
        let mut nfa = Nfa::new(self.alphabet.clone(), self.states());
        for q in 0..self.states() {
            for a in 0..self.alphabet.len() {
                nfa.add_edge(self.next(q, a), a, q);
            }
            if self.accepting[q] {
                nfa.initials.push(q);
            }
        }
        nfa.accepting[self.initial] = true;
        nfa.determinize().minimize()
    }

    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.minimal = false;
        for acc in &mut d.accepting {
            *acc = !*acc;
        }
        d.minimize()
    }

    fn product(&self, other: &Dfa, keep: impl Fn(bool, bool) -> bool) -> Dfa {
        let k = self.alphabet.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert((self.initial, other.initial), 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for a in 0..k {
                let succ = (self.next(p, a), other.next(q, a));
                let id = *index.entry(succ).or_insert_with(|| {
                    pairs.push(succ);
                    pairs.len() - 1
                });
                delta.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| keep(self.accepting[p], other.accepting[q]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta).minimize()
    }

    /// Boolean combination; `other` must be `None` exactly for complement.
    pub fn boolean_op(&self, other: Option<&Dfa>, op: BooleanOp) -> Result<Dfa, AutomataError> {
        match (op, other) {
            (BooleanOp::Complement, None) => Ok(self.complement()),
            (BooleanOp::Complement, Some(_)) => Err(AutomataError::Operand(
                "complement takes a single operand".into(),
            )),
            (_, None) => Err(AutomataError::Operand("binary operation needs two operands".into())),
            (op, Some(b)) => {
                self.check_alphabet(b)?;
                Ok(match op {
                    BooleanOp::Union => self.product(b, |x, y| x || y),
                    BooleanOp::Intersection => self.product(b, |x, y| x && y),
                    BooleanOp::Difference => self.product(b, |x, y| x && !y),
                    BooleanOp::Complement => unreachable!(),
                })
            }
        }
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.boolean_op(Some(other), BooleanOp::Union)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.boolean_op(Some(other), BooleanOp::Intersection)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.boolean_op(Some(other), BooleanOp::Difference)
    }

    /// Decides `L(self) = L(other)`, returning the shortlex-least
    /// distinguishing word otherwise.
    pub fn equivalent(&self, other: &Dfa) -> Result<Equivalence, AutomataError> {
        self.check_alphabet(other)?;
        let k = self.alphabet.len();
        let start = (self.initial, other.initial);
        // pair -> (predecessor pair, letter) on a shortest path from the start
        type Pair = (usize, usize);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                let mut letters = Vec::new();
                let mut cur = (p, q);
                while let Some(((pp, pq), a)) = parent[&cur] {
                    letters.push(a);
                    cur = (pp, pq);
                }
                letters.reverse();
                return Ok(Equivalence::Differ(self.alphabet.word_from_indices(&letters)));
            }
            for a in 0..k {
                let succ = (self.next(p, a), other.next(q, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(succ) {
                    e.insert(Some(((p, q), a)));
                    queue.push_back(succ);
                }
            }
        }
        Ok(Equivalence::Equal)
    }

    /// `L = L^r`.
    pub fn is_reversible(&self) -> bool {
        self.minimize() == self.reverse()
    }

    /// Left quotient `w⁻¹L` or right quotient `Lw⁻¹`.
    pub fn quotient(&self, word: &Word, side: Side) -> Result<Dfa, AutomataError> {
        let idx = self.alphabet.indices(word)?;
        let mut d = self.clone();
        d.minimal = false;
        match side {
            Side::Left => d.initial = self.run_indices(self.initial, &idx),
            Side::Right => {
                for q in 0..self.states() {
                    d.accepting[q] = self.accepting[self.run_indices(q, &idx)];
                }
            }
        }
        Ok(d.minimize())
    }

    /// `u⁻¹Lv⁻¹ ∪ (vʳ)⁻¹L(uʳ)⁻¹`.
    pub fn bidirectional_quotient(&self, u: &Word, v: &Word) -> Result<Dfa, AutomataError> {
        let forward = self.quotient(u, Side::Left)?.quotient(v, Side::Right)?;
        let backward = self
            .quotient(&v.reversed(), Side::Left)?
            .quotient(&u.reversed(), Side::Right)?;
        forward.union(&backward)
    }

    /// Accepted words of length at most `max_len`, in shortlex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let k = self.alphabet.len();
        let n = self.states();
        // live[r][q]: some word of length exactly r leads from q to acceptance
        let mut live = vec![self.accepting.clone()];
        for r in 1..=max_len {
            let prev = &live[r - 1];
            let row = (0..n).map(|q| (0..k).any(|a| prev[self.next(q, a)])).collect();
            live.push(row);
        }
        let mut out = Vec::new();
        let mut buf = Vec::new();
        for len in 0..=max_len {
            self.enumerate_len(self.initial, len, &live, &mut buf, &mut out);
        }
        out
    }

    fn enumerate_len(
        &self,
        q: usize,
        remaining: usize,
        live: &[Vec<bool>],
        buf: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        if !live[remaining][q] {
            return;
        }
        if remaining == 0 {
            out.push(self.alphabet.word_from_indices(buf));
            return;
        }
        for a in 0..self.alphabet.len() {
            buf.push(a);
            self.enumerate_len(self.next(q, a), remaining - 1, live, buf, out);
            buf.pop();
        }
    }

    pub fn to_json(&self) -> String {
        let k = self.alphabet.len();
        let file = DfaFile {
            alphabet: self.alphabet.to_string(),
            states: self.states(),
            initial: self.initial,
            accepting: (0..self.states()).filter(|&q| self.accepting[q]).collect(),
            transitions: (0..self.states())
                .flat_map(|q| {
                    (0..k).map(move |a| (q, a))
                })
                .map(|(q, a)| (q, self.alphabet.letter(a).to_string(), self.next(q, a)))
                .collect(),
        };
        serde_json::to_string(&file).expect("dfa serializes")
    }

    /// Loads the JSON DFA format. Missing transitions go to a fresh sink.
    pub fn from_json(text: &str) -> Result<Dfa, AutomataError> {
        let file: DfaFile =
            serde_json::from_str(text).map_err(|e| AutomataError::Json(e.to_string()))?;
        let alphabet = Alphabet::parse(&file.alphabet)?;
        let n = file.states;
        let k = alphabet.len();
        if n == 0 || file.initial >= n {
            return Err(AutomataError::InvalidDfa("initial state out of range".into()));
        }
        let mut table: Vec<Option<usize>> = vec![None; n * k];
        for (from, letter, to) in &file.transitions {
            let mut chars = letter.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(AutomataError::InvalidDfa(format!("`{letter}` is not a single letter")));
            };
            let a = alphabet.index_of(c).ok_or(AutomataError::ForeignLetter(c))?;
            if *from >= n || *to >= n {
                return Err(AutomataError::InvalidDfa(format!("transition {from} -{c}-> {to} out of range")));
            }
            match table[from * k + a] {
                Some(prev) if prev != *to => {
                    return Err(AutomataError::InvalidDfa(format!(
                        "state {from} has two {c}-transitions"
                    )))
                }
                _ => table[from * k + a] = Some(*to),
            }
        }
        let mut accepting = vec![false; n];
        for &q in &file.accepting {
            if q >= n {
                return Err(AutomataError::InvalidDfa(format!("accepting state {q} out of range")));
            }
            accepting[q] = true;
        }
        let needs_sink = table.iter().any(Option::is_none);
        let sink = n;
        let mut delta: Vec<usize> = table.iter().map(|t| t.unwrap_or(sink)).collect();
        if needs_sink {
            accepting.push(false);
            delta.extend(std::iter::repeat_n(sink, k));
        }
        Ok(Dfa::from_parts(alphabet, file.initial, accepting, delta))
    }
}

#[derive(Serialize, Deserialize)]
struct DfaFile {
    alphabet: String,
    states: usize,
    initial: usize,
    accepting: Vec<usize>,
    transitions: Vec<(usize, String, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Regex;

    fn compile(re: &str, alphabet: &str) -> Dfa {
        let a = Alphabet::parse(alphabet).unwrap();
        Regex::parse(re, &a).unwrap().compile(&a).unwrap()
    }

    fn words(list: &[Word]) -> Vec<String> {
        list.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn ab_star_membership() {
        let d = compile("(ab)*", "ab");
        for w in ["", "ab", "abab"] {
            assert!(d.accepts(&Word::from(w)).unwrap(), "{w}");
        }
        for w in ["a", "ba", "aba"] {
            assert!(!d.accepts(&Word::from(w)).unwrap(), "{w}");
        }
        assert_eq!(d.states(), 3);
        assert_eq!(words(&d.enumerate(4)), ["ε", "ab", "abab"]);
    }

    #[test]
    fn empty_regex_is_single_sink() {
        let d = compile("#", "ab");
        assert_eq!(d.states(), 1);
        assert!(d.enumerate(5).is_empty());
        assert_eq!(d, Dfa::empty(d.alphabet()));
        assert_eq!(compile("(a+b)*", "ab").states(), 1);
    }

    #[test]
    fn foreign_letter_is_an_error() {
        let d = compile("(ab)*", "ab");
        assert_eq!(d.accepts(&Word::from("abc")), Err(AutomataError::ForeignLetter('c')));
    }

    #[test]
    fn equivalence_witness_is_shortlex_least() {
        let a = compile("(ab)*", "ab");
        let b = compile("(ba)*", "ab");
        assert_eq!(a.equivalent(&b).unwrap(), Equivalence::Differ(Word::from("ab")));
        let c = compile("(ab)*(ab)*", "ab");
        assert!(a.equivalent(&c).unwrap().is_equal());
        let other = compile("(ab)*", "abc");
        assert!(matches!(a.equivalent(&other), Err(AutomataError::AlphabetMismatch { .. })));
    }

    #[test]
    fn quotients_of_the_abc_language() {
        let l = compile("(abc)*+(cba)*", "abc");
        assert!(l.is_reversible());
        let left = l.quotient(&Word::from("a"), Side::Left).unwrap();
        assert_eq!(left, compile("bc(abc)*", "abc"));
        assert!(!left.is_reversible());
        let right = l.quotient(&Word::from("a"), Side::Right).unwrap();
        assert_eq!(right, compile("(cba)*cb", "abc"));
        assert_eq!(l.quotient(&Word::empty(), Side::Left).unwrap(), l);
    }

    #[test]
    fn json_round_trip_and_completion() {
        let text = r#"{"alphabet":"ab","states":2,"initial":0,"accepting":[1],"transitions":[[0,"a",1],[1,"b",0]]}"#;
        let d = Dfa::from_json(text).unwrap();
        assert_eq!(d.states(), 3);
        assert_eq!(d.minimize(), compile("(ab)*a", "ab"));
        let back = Dfa::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"alphabet":"ab","states":1,"initial":0,"accepting":[],"transitions":[[0,"a",0],[0,"a",1]]}"#;
        assert!(Dfa::from_json(bad).is_err());
    }
}
