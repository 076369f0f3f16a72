//! Deciding whether a regular language is a union of `≈ₖᵗ` or `≈rₖᵗ`
//! classes for fixed `(k, t)`.
//!
//! Words of length `≥ k` are tracked by a deterministic *profile automaton*
//! whose state holds the prefix of length `k−1`, the last `k−1` letters and
//! the saturated count of every factor of length exactly `k`. Counts of
//! shorter factors are recovered from these: every occurrence of a factor `v`
//! with `|v| < k` either extends one letter to the right or is a suffix, so
//! `♯(w,v) = Σₐ ♯(w,va) + [w ends with v]`, and saturation at `t` commutes
//! with the sum.
//!
//! The product of the profile automaton with the minimal DFA is explored
//! breadth-first. Each reached product state is grouped by its (canonical)
//! profile; a group holding both an accepting and a rejecting DFA state
//! yields two equivalent words split by the language.

use std::collections::HashMap;

use crate::automata::{Alphabet, Dfa, Word};

use super::{LrttProfile, LttProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Ltt,
    Lrtt,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ltt" => Ok(Mode::Ltt),
            "lrtt" => Ok(Mode::Lrtt),
            other => Err(format!("unknown mode `{other}` (expected ltt or lrtt)")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Ltt => "ltt",
            Mode::Lrtt => "lrtt",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnionVerdict {
    Yes,
    /// Two equivalent words, the first accepted iff the second is rejected.
    No(Word, Word),
    /// The product-state cap was reached after exploring this many states.
    Aborted(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { k: usize, t: usize },
    NotFound,
    Aborted,
}

pub const DEFAULT_STATE_CAP: usize = 2_000_000;

// Fact tables beyond this many length-k factors are refused as aborted.
const MAX_FACTORS: usize = 1 << 16;

/// Profile automaton for fixed `(k, t)` over an alphabet.
#[derive(Clone, Debug)]
pub struct ProfileAutomaton {
    alphabet: Alphabet,
    k: usize,
    t: usize,
    sigma: usize,
    /// `sigma^(k-1)`: number of windows.
    windows: usize,
}

/// A state of the profile automaton, reached by a word of length `≥ k−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProfileState {
    pub prefix: u32,
    pub window: u32,
    /// Saturated counts of length-`k` factors, indexed in base `|A|`.
    pub counts: Vec<u8>,
}

impl ProfileAutomaton {
    pub fn new(alphabet: &Alphabet, k: usize, t: usize) -> ProfileAutomaton {
        assert!(k >= 1 && t >= 1 && t <= u8::MAX as usize, "need k ≥ 1 and 1 ≤ t ≤ 255");
        let sigma = alphabet.len();
        ProfileAutomaton {
            alphabet: alphabet.clone(),
            k,
            t,
            sigma,
            windows: sigma.pow(k as u32 - 1),
        }
    }

    fn factors(&self) -> usize {
        self.windows * self.sigma
    }

    fn encode(&self, letters: &[usize]) -> u32 {
        letters.iter().fold(0, |acc, &a| acc * self.sigma as u32 + a as u32)
    }

    fn decode(&self, mut code: usize, len: usize) -> Vec<usize> {
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = code % self.sigma;
            code /= self.sigma;
        }
        out
    }

    /// State after reading a word of length exactly `k − 1`.
    pub fn start(&self, letters: &[usize]) -> ProfileState {
        debug_assert_eq!(letters.len(), self.k - 1);
        let code = self.encode(letters);
        ProfileState {
            prefix: code,
            window: code,
            counts: vec![0; self.factors()],
        }
    }

    pub fn step(&self, state: &ProfileState, letter: usize) -> ProfileState {
        let mut next = state.clone();
        self.step_in_place(&mut next, letter);
        next
    }

    fn step_in_place(&self, state: &mut ProfileState, letter: usize) {
        let factor = state.window as usize * self.sigma + letter;
        let c = &mut state.counts[factor];
        *c = (*c + 1).min(self.t as u8);
        state.window = (factor % self.windows) as u32;
    }

    /// Runs the automaton on a word of length `≥ k`.
    pub fn run(&self, word: &[usize]) -> Option<ProfileState> {
        if word.len() < self.k {
            return None;
        }
        let mut s = self.start(&word[..self.k - 1]);
        for &a in &word[self.k - 1..] {
            self.step_in_place(&mut s, a);
        }
        Some(s)
    }

    /// Saturated counts of every factor of length `1..=k`; entry `j−1` is
    /// indexed by base-`|A|` codes of length-`j` factors.
    fn all_counts(&self, state: &ProfileState) -> Vec<Vec<u8>> {
        let t = self.t as u16;
        let mut levels = vec![state.counts.clone()];
        let suffix = self.decode(state.window as usize, self.k - 1);
        for j in (1..self.k).rev() {
            let longer = levels.last().expect("level k present");
            let ends_with = self.encode(&suffix[self.k - 1 - j..]) as usize;
            let size = self.sigma.pow(j as u32);
            let level: Vec<u8> = (0..size)
                .map(|v| {
                    let s: u16 = (0..self.sigma).map(|a| longer[v * self.sigma + a] as u16).sum::<u16>()
                        + u16::from(v == ends_with);
                    s.min(t) as u8
                })
                .collect();
            levels.push(level);
        }
        levels.reverse();
        levels
    }

    fn reverse_code(&self, code: usize, len: usize) -> usize {
        let mut d = self.decode(code, len);
        d.reverse();
        self.encode(&d) as usize
    }

    fn word(&self, code: usize, len: usize) -> Word {
        self.alphabet.word_from_indices(&self.decode(code, len))
    }

    pub fn ltt_profile(&self, state: &ProfileState) -> LttProfile {
        let mut counts = std::collections::BTreeMap::new();
        for (j, level) in self.all_counts(state).iter().enumerate() {
            for (v, &c) in level.iter().enumerate() {
                if c > 0 {
                    counts.insert(self.word(v, j + 1), c as usize);
                }
            }
        }
        LttProfile {
            k: self.k,
            t: self.t,
            prefix: self.word(state.prefix as usize, self.k - 1),
            suffix: self.word(state.window as usize, self.k - 1),
            counts,
        }
    }

    pub fn lrtt_profile(&self, state: &ProfileState) -> LrttProfile {
        let p = self.ltt_profile(state);
        let mut counts = std::collections::BTreeMap::new();
        for (v, c) in &p.counts {
            let key = super::canonical_factor(v);
            let e = counts.entry(key).or_insert(0);
            *e = (*e + c).min(self.t);
        }
        let a = p.prefix;
        let b = p.suffix.reversed();
        LrttProfile {
            k: self.k,
            t: self.t,
            boundary: if b < a { (b, a) } else { (a, b) },
            counts,
        }
    }

    /// Compact grouping key: equal keys iff equal (canonical) profiles.
    fn class_key(&self, state: &ProfileState, mode: Mode) -> Vec<u8> {
        match mode {
            Mode::Ltt => {
                let mut key = Vec::with_capacity(8 + state.counts.len());
                key.extend_from_slice(&state.prefix.to_le_bytes());
                key.extend_from_slice(&state.window.to_le_bytes());
                key.extend_from_slice(&state.counts);
                key
            }
            Mode::Lrtt => {
                let t = self.t as u16;
                let levels = self.all_counts(state);
                let x = state.prefix as usize;
                let y = self.reverse_code(state.window as usize, self.k - 1);
                let (lo, hi) = (x.min(y) as u32, x.max(y) as u32);
                let mut key = Vec::new();
                key.extend_from_slice(&lo.to_le_bytes());
                key.extend_from_slice(&hi.to_le_bytes());
                for (j, level) in levels.iter().enumerate() {
                    for (v, &c) in level.iter().enumerate() {
                        let r = self.reverse_code(v, j + 1);
                        if v < r {
                            key.push(((c as u16 + level[r] as u16).min(t)) as u8);
                        } else if v == r {
                            key.push(c);
                        }
                    }
                }
                key
            }
        }
    }
}

/// Interned product states stored back to back in one byte arena.
struct StateTable {
    stride: usize,
    data: Vec<u8>,
    slots: Vec<u32>,
    len: usize,
}

impl StateTable {
    fn new(stride: usize) -> Self {
        StateTable {
            stride,
            data: Vec::new(),
            slots: vec![0; 1024],
            len: 0,
        }
    }

    fn hash(bytes: &[u8]) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            h = (h ^ u64::from_le_bytes(buf)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            h ^= h >> 29;
        }
        h
    }

    fn get(&self, id: usize) -> &[u8] {
        &self.data[id * self.stride..(id + 1) * self.stride]
    }

    /// Returns `(id, inserted)`.
    fn intern(&mut self, key: &[u8]) -> (usize, bool) {
        if (self.len + 1) * 2 > self.slots.len() {
            self.grow();
        }
        let mask = self.slots.len() - 1;
        let mut i = Self::hash(key) as usize & mask;
        loop {
            match self.slots[i] {
                0 => {
                    let id = self.len;
                    self.data.extend_from_slice(key);
                    self.slots[i] = id as u32 + 1;
                    self.len += 1;
                    return (id, true);
                }
                s if self.get(s as usize - 1) == key => return (s as usize - 1, false),
                _ => i = (i + 1) & mask,
            }
        }
    }

    fn grow(&mut self) {
        let size = self.slots.len() * 2;
        let mut slots = vec![0u32; size];
        for id in 0..self.len {
            let mut i = Self::hash(self.get(id)) as usize & (size - 1);
            while slots[i] != 0 {
                i = (i + 1) & (size - 1);
            }
            slots[i] = id as u32 + 1;
        }
        self.slots = slots;
    }
}

struct Group {
    accepting: Option<usize>,
    rejecting: Option<usize>,
}

/// [`is_union_of_classes_capped`] with the default state cap.
pub fn is_union_of_classes(dfa: &Dfa, k: usize, t: usize, mode: Mode) -> UnionVerdict {
    is_union_of_classes_capped(dfa, k, t, mode, DEFAULT_STATE_CAP)
}

/// Decides whether membership in `L(dfa)` is constant on every class of
/// `≈ₖᵗ` (`Mode::Ltt`) or `≈rₖᵗ` (`Mode::Lrtt`).
pub fn is_union_of_classes_capped(
    dfa: &Dfa,
    k: usize,
    t: usize,
    mode: Mode,
    state_cap: usize,
) -> UnionVerdict {
    assert!(k >= 1 && t >= 1, "k and t must be positive");
    let dfa = dfa.minimize();
    let alphabet = dfa.alphabet().clone();
    let sigma = alphabet.len();

    // Short words: singleton classes, or {w, wʳ} in lrtt mode.
    if mode == Mode::Lrtt {
        for len in 0..k {
            for w in alphabet.words_of_length(len) {
                let r = w.reversed();
                if r != w && accepts(&dfa, &w) != accepts(&dfa, &r) {
                    return UnionVerdict::No(w, r);
                }
            }
        }
    }

    if t > u8::MAX as usize
        || sigma
            .checked_pow(k as u32)
            .is_none_or(|n| n > MAX_FACTORS)
    {
        return UnionVerdict::Aborted(0);
    }
    let pa = ProfileAutomaton::new(&alphabet, k, t);
    let stride = 12 + pa.factors();
    let mut table = StateTable::new(stride);
    let mut parent: Vec<(u32, u8)> = Vec::new();
    let starts = alphabet.words_of_length(k - 1);
    let mut key = vec![0u8; stride];

    let write_key = |key: &mut [u8], q: u32, s: &ProfileState| {
        key[0..4].copy_from_slice(&q.to_le_bytes());
        key[4..8].copy_from_slice(&s.prefix.to_le_bytes());
        key[8..12].copy_from_slice(&s.window.to_le_bytes());
        key[12..].copy_from_slice(&s.counts);
    };
    let read_key = |key: &[u8]| -> (usize, ProfileState) {
        let q = u32::from_le_bytes(key[0..4].try_into().expect("4 bytes")) as usize;
        let prefix = u32::from_le_bytes(key[4..8].try_into().expect("4 bytes"));
        let window = u32::from_le_bytes(key[8..12].try_into().expect("4 bytes"));
        (q, ProfileState { prefix, window, counts: key[12..].to_vec() })
    };

    for w in &starts {
        let idx = alphabet.indices(w).expect("generated over the alphabet");
        let q = dfa.run_indices(dfa.initial(), &idx) as u32;
        write_key(&mut key, q, &pa.start(&idx));
        table.intern(&key);
        parent.push((u32::MAX, 0));
    }
    let n_starts = table.len;

    let reconstruct = |id: usize, parent: &[(u32, u8)]| -> Word {
        let mut letters = Vec::new();
        let mut cur = id;
        while cur >= n_starts {
            let (p, a) = parent[cur];
            letters.push(a as usize);
            cur = p as usize;
        }
        letters.reverse();
        starts[cur].concat(&alphabet.word_from_indices(&letters))
    };

    let mut groups: HashMap<Vec<u8>, Group> = HashMap::new();
    let mut id = 0;
    while id < table.len {
        let (q, state) = read_key(table.get(id));
        for a in 0..sigma {
            let next = pa.step(&state, a);
            let nq = dfa.next(q, a) as u32;
            write_key(&mut key, nq, &next);
            let (nid, fresh) = table.intern(&key);
            if !fresh {
                continue;
            }
            parent.push((id as u32, a as u8));
            if table.len > state_cap {
                return UnionVerdict::Aborted(table.len);
            }
            let group = groups.entry(pa.class_key(&next, mode)).or_insert(Group {
                accepting: None,
                rejecting: None,
            });
            let accepted = dfa.is_accepting(nq as usize);
            let other = if accepted { group.rejecting } else { group.accepting };
            if let Some(other) = other {
                return UnionVerdict::No(reconstruct(other, &parent), reconstruct(nid, &parent));
            }
            if accepted {
                group.accepting = Some(nid);
            } else {
                group.rejecting = Some(nid);
            }
        }
        id += 1;
    }
    UnionVerdict::Yes
}

fn accepts(dfa: &Dfa, w: &Word) -> bool {
    dfa.accepts(w).expect("word over the dfa alphabet")
}

/// Least `(k, t)` in lexicographic order (k outer) with a `Yes` verdict.
pub fn search_params(dfa: &Dfa, k_max: usize, t_max: usize, mode: Mode) -> SearchOutcome {
    search_params_capped(dfa, k_max, t_max, mode, DEFAULT_STATE_CAP)
}

pub fn search_params_capped(
    dfa: &Dfa,
    k_max: usize,
    t_max: usize,
    mode: Mode,
    state_cap: usize,
) -> SearchOutcome {
    let mut aborted = false;
    for k in 1..=k_max {
        for t in 1..=t_max {
            match is_union_of_classes_capped(dfa, k, t, mode, state_cap) {
                UnionVerdict::Yes => return SearchOutcome::Found { k, t },
                UnionVerdict::No(..) => {}
                UnionVerdict::Aborted(_) => aborted = true,
            }
        }
    }
    if aborted {
        SearchOutcome::Aborted
    } else {
        SearchOutcome::NotFound
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::ltt::{lrtt_profile, ltt_profile, LrttClass, LttClass};

    #[test]
    fn ab_star_is_locally_testable() {
        let ab = Alphabet::parse("ab").unwrap();
        let d = compile("(ab)*", &ab).unwrap();
        assert_eq!(is_union_of_classes(&d, 2, 1, Mode::Ltt), UnionVerdict::Yes);
        assert!(matches!(is_union_of_classes(&d, 1, 3, Mode::Ltt), UnionVerdict::No(..)));
        assert_eq!(search_params(&d, 3, 3, Mode::Ltt), SearchOutcome::Found { k: 2, t: 1 });
    }

    #[test]
    fn automaton_matches_direct_profiles() {
        let ab = Alphabet::parse("abc").unwrap();
        for (k, t) in [(1, 1), (2, 2), (3, 2)] {
            let pa = ProfileAutomaton::new(&ab, k, t);
            for w in ab.words_up_to(6) {
                let idx = ab.indices(&w).unwrap();
                match (pa.run(&idx), ltt_profile(&w, k, t), lrtt_profile(&w, k, t)) {
                    (None, LttClass::Short(_), LrttClass::Short(_)) => {}
                    (Some(s), LttClass::Profile(p), LrttClass::Profile(r)) => {
                        assert_eq!(pa.ltt_profile(&s), p, "{w}");
                        assert_eq!(pa.lrtt_profile(&s), r, "{w}");
                    }
                    _ => panic!("length mismatch on {w}"),
                }
            }
        }
    }

    #[test]
    fn tiny_cap_aborts() {
        let ab = Alphabet::parse("ab").unwrap();
        let d = compile("(ab)*", &ab).unwrap();
        assert!(matches!(
            is_union_of_classes_capped(&d, 3, 3, Mode::Ltt, 5),
            UnionVerdict::Aborted(_)
        ));
    }
}
