use std::collections::{HashMap, VecDeque};

use crate::automata::{Dfa, Word};

use super::semigroup::{FiniteSemigroup, Involution};
use super::InvolutionError;

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// The syntactic monoid of a language, realised as the transition monoid of
/// its minimal DFA.
#[derive(Clone, Debug)]
pub struct SyntacticData {
    pub monoid: FiniteSemigroup,
    /// State transformation of each element.
    pub transformations: Vec<Vec<usize>>,
    /// Shortlex-least word mapping to each element; element 0 is the identity.
    pub witnesses: Vec<Word>,
    /// The accepting set `P`: elements whose words lie in the language.
    pub accepting: Vec<bool>,
    /// Elements that are images of nonempty words, ascending.
    pub semigroup_elements: Vec<usize>,
    pub dfa: Dfa,
    index: HashMap<Vec<usize>, usize>,
}

impl SyntacticData {
    /// Image of a word in the monoid.
    pub fn eval(&self, word: &Word) -> Result<usize, InvolutionError> {
        let letters = self.dfa.alphabet().indices(word)?;
        let gens = self.monoid.generators();
        Ok(letters.iter().fold(0, |m, &a| self.monoid.mul(m, gens[a].1)))
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    pub fn element_of(&self, transformation: &[usize]) -> Option<usize> {
        self.index.get(transformation).copied()
    }

    pub fn is_accepting(&self, m: usize) -> bool {
        self.accepting[m]
    }
}

pub fn syntactic_monoid(dfa: &Dfa) -> Result<SyntacticData, InvolutionError> {
    syntactic_monoid_capped(dfa, DEFAULT_ELEMENT_CAP)
}

pub fn syntactic_monoid_capped(dfa: &Dfa, cap: usize) -> Result<SyntacticData, InvolutionError> {
    let dfa = if dfa.is_minimal() { dfa.clone() } else { dfa.minimize() };
    let states = dfa.states();
    let sigma = dfa.alphabet().len();
    let identity: Vec<usize> = (0..states).collect();

    let mut transformations = vec![identity.clone()];
    let mut witnesses = vec![Word::empty()];
    let mut index = HashMap::from([(identity, 0)]);
    // right action of each letter, filled in BFS order
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < transformations.len() {
        let mut row = Vec::with_capacity(sigma);
        for a in 0..sigma {
            let next: Vec<usize> = transformations[head].iter().map(|&q| dfa.next(q, a)).collect();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if transformations.len() >= cap {
                        return Err(InvolutionError::ElementCap { cap });
                    }
                    let id = transformations.len();
                    index.insert(next.clone(), id);
                    transformations.push(next);
                    let letter = Word::new(vec![dfa.alphabet().letter(a)]);
                    witnesses.push(witnesses[head].concat(&letter));
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
        head += 1;
    }

    let n = transformations.len();
    let mut mult = vec![0; n * n];
    for x in 0..n {
        // x·y: apply x, then y
        for y in 0..n {
            let composed: Vec<usize> = transformations[x].iter().map(|&q| transformations[y][q]).collect();
            mult[x * n + y] = index[&composed];
        }
    }
    let generators: Vec<(char, usize)> =
        (0..sigma).map(|a| (dfa.alphabet().letter(a), right[0][a])).collect();
    let monoid = FiniteSemigroup::from_table(n, mult, Some(0), generators.clone(), witnesses.clone())?;

    let accepting = transformations.iter().map(|t| dfa.is_accepting(t[dfa.initial()])).collect();

    let mut in_semigroup = vec![false; n];
    let mut queue: VecDeque<usize> = generators.iter().map(|&(_, g)| g).collect();
    while let Some(x) = queue.pop_front() {
        if std::mem::replace(&mut in_semigroup[x], true) {
            continue;
        }
        queue.extend(right[x].iter().copied().filter(|&y| !in_semigroup[y]));
    }
    let semigroup_elements = (0..n).filter(|&x| in_semigroup[x]).collect();

    Ok(SyntacticData {
        monoid,
        transformations,
        witnesses,
        accepting,
        semigroup_elements,
        dfa,
        index,
    })
}

/// The subsemigroup of images of nonempty words. Elements are ordered by
/// their shortlex-least nonempty witness, which also serves as their name.
pub fn syntactic_semigroup(s: &SyntacticData) -> FiniteSemigroup {
    let m = &s.monoid;
    let n = m.size();
    // BFS over nonempty words in shortlex order
    let mut first: Vec<Option<Word>> = vec![None; n];
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &(a, g) in m.generators() {
        if first[g].is_none() {
            first[g] = Some(Word::new(vec![a]));
            order.push(g);
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(a, g) in m.generators() {
            let y = m.mul(x, g);
            if first[y].is_none() {
                let w = first[x].as_ref().expect("visited").concat(&Word::new(vec![a]));
                first[y] = Some(w);
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut local = vec![usize::MAX; n];
    for (i, &x) in order.iter().enumerate() {
        local[x] = i;
    }
    let size = order.len();
    let mut mult = Vec::with_capacity(size * size);
    for &x in &order {
        for &y in &order {
            mult.push(local[m.mul(x, y)]);
        }
    }
    let identity = m.identity().map(|e| local[e]).filter(|&e| e != usize::MAX);
    let generators = m.generators().iter().map(|&(a, g)| (a, local[g])).collect();
    let names = order.iter().map(|&x| first[x].clone().expect("visited")).collect();
    FiniteSemigroup::from_table(size, mult, identity, generators, names)
        .expect("subsemigroup of a valid monoid")
        .with_origin(order)
}

/// The reversal involution `[x]* = [xʳ]` on the syntactic monoid.
pub fn involution_from_reverse(s: &SyntacticData) -> Result<Involution, InvolutionError> {
    if !s.dfa.is_reversible() {
        return Err(InvolutionError::NotReversible);
    }
    let star = s
        .witnesses
        .iter()
        .map(|w| s.eval(&w.reversed()))
        .collect::<Result<Vec<_>, _>>()?;
    let inv = Involution::new(&s.monoid, star)?;
    if !accepting_star_closed(s, &inv) {
        return Err(InvolutionError::InvolutionInconsistent("P* ≠ P".into()));
    }
    Ok(inv)
}

pub fn accepting_star_closed(s: &SyntacticData, star: &Involution) -> bool {
    (0..s.size()).all(|m| s.accepting[m] == s.accepting[star.star(m)])
}

/// Groups all words of length `≤ max_len` by the state transformation they
/// induce on the minimal DFA, by direct simulation. Classes appear in order
/// of their shortlex-least member; members are in shortlex order.
pub fn brute_force_congruence(dfa: &Dfa, max_len: usize) -> Vec<Vec<Word>> {
    let dfa = dfa.minimize();
    let alphabet = dfa.alphabet().clone();
    let mut classes: Vec<Vec<Word>> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for w in alphabet.words_up_to(max_len) {
        let letters = alphabet.indices(&w).expect("word over the alphabet");
        let key: Vec<usize> = (0..dfa.states()).map(|q| dfa.run_indices(q, &letters)).collect();
        match seen.get(&key) {
            Some(&c) => classes[c].push(w),
            None => {
                seen.insert(key, classes.len());
                classes.push(vec![w]);
            }
        }
    }
    classes
}
