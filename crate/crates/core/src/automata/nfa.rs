use std::collections::{HashMap, VecDeque};

use super::{Alphabet, Dfa};

/// Nondeterministic automaton without ε-transitions. Only used as an
/// intermediate between regexes or reversed DFAs and the subset construction.
#[derive(Clone, Debug)]
pub struct Nfa {
    pub alphabet: Alphabet,
    pub initials: Vec<usize>,
    pub accepting: Vec<bool>,
    /// `delta[state][letter]` is the sorted successor set.
    pub delta: Vec<Vec<Vec<usize>>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            initials: Vec::new(),
            accepting: vec![false; states],
            delta: vec![vec![Vec::new(); k]; states],
        }
    }

    pub fn states(&self) -> usize {
        self.delta.len()
    }

    pub fn add_edge(&mut self, from: usize, letter: usize, to: usize) {
        let succ = &mut self.delta[from][letter];
        if let Err(i) = succ.binary_search(&to) {
            succ.insert(i, to);
        }
    }

    /// Subset construction restricted to reachable subsets. The empty subset,
    /// when reachable, becomes the sink.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut start = self.initials.clone();
        start.sort_unstable();
        start.dedup();

        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let mut next: Vec<usize> = subsets[s]
                    .iter()
                    .flat_map(|&q| self.delta[q][a].iter().copied())
                    .collect();
                next.sort_unstable();
                next.dedup();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        subsets.push(next.clone());
                        index.insert(next, id);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            // states are discovered in queue order, so rows line up with ids
            delta.extend(row);
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta)
    }
}
