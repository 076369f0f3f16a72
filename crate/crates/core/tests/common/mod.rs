//! Oracles shared by the integration tests. Nothing here goes through the
//! automata or profile machinery of the crate, so agreement is meaningful.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use revlang::automata::Word;

/// Regex AST for the oracle matcher.
#[derive(Clone, Debug)]
pub enum Re {
    Eps,
    Lit(char),
    Alt(Box<Re>, Box<Re>),
    Cat(Box<Re>, Box<Re>),
    Star(Box<Re>),
}

impl Re {
    pub fn render(&self) -> String {
        match self {
            Re::Eps => "_".into(),
            Re::Lit(c) => c.to_string(),
            Re::Alt(a, b) => format!("({}+{})", a.render(), b.render()),
            Re::Cat(a, b) => format!("({}{})", a.render(), b.render()),
            Re::Star(a) => format!("({})*", a.render()),
        }
    }

    /// End positions reachable by matching `self` from `start`.
    fn ends(&self, w: &[char], start: usize) -> Vec<usize> {
        let mut out = match self {
            Re::Eps => vec![start],
            Re::Lit(c) => {
                if w.get(start) == Some(c) {
                    vec![start + 1]
                } else {
                    vec![]
                }
            }
            Re::Alt(a, b) => {
                let mut v = a.ends(w, start);
                v.extend(b.ends(w, start));
                v
            }
            Re::Cat(a, b) => a.ends(w, start).into_iter().flat_map(|m| b.ends(w, m)).collect(),
            Re::Star(a) => {
                let mut seen = vec![start];
                let mut frontier = vec![start];
                while let Some(p) = frontier.pop() {
                    for q in a.ends(w, p) {
                        if !seen.contains(&q) {
                            seen.push(q);
                            frontier.push(q);
                        }
                    }
                }
                seen
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn matches(&self, w: &Word) -> bool {
        self.ends(w.letters(), 0).contains(&w.len())
    }
}

pub fn random_re(rng: &mut StdRng, letters: &[char], depth: u32) -> Re {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.1) {
            Re::Eps
        } else {
            Re::Lit(letters[rng.gen_range(0..letters.len())])
        };
    }
    match rng.gen_range(0..3) {
        0 => Re::Alt(Box::new(random_re(rng, letters, depth - 1)), Box::new(random_re(rng, letters, depth - 1))),
        1 => Re::Cat(Box::new(random_re(rng, letters, depth - 1)), Box::new(random_re(rng, letters, depth - 1))),
        _ => Re::Star(Box::new(random_re(rng, letters, depth - 1))),
    }
}

/// All words over `letters` of length at most `max_len`, shortest first,
/// then lexicographic in the order of `letters`.
pub fn words(letters: &[char], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<char>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in letters {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}

pub fn w(s: &str) -> Word {
    Word::from(s)
}

/// Occurrences of `v` or its reverse, counted over start positions.
pub fn naive_count_rev(w: &Word, v: &Word) -> usize {
    let (w, v) = (w.letters(), v.letters());
    let r: Vec<char> = v.iter().rev().copied().collect();
    (0..=w.len().saturating_sub(v.len()))
        .filter(|&i| w.len() >= v.len() && (w[i..i + v.len()] == *v || w[i..i + v.len()] == *r))
        .count()
}

pub fn naive_count(w: &Word, v: &Word) -> usize {
    let (w, v) = (w.letters(), v.letters());
    if w.len() < v.len() {
        return 0;
    }
    (0..=w.len() - v.len()).filter(|&i| w[i..i + v.len()] == *v).count()
}

fn all_factors(w: &Word, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=k.min(w.len()) {
        for i in 0..=w.len() - len {
            out.push(w.factor(i, len));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `u ≈ₖᵗ v` straight from the definition.
pub fn naive_ltt_equiv(u: &Word, v: &Word, k: usize, t: usize) -> bool {
    if u.len() < k || v.len() < k {
        return u == v;
    }
    if u.prefix(k - 1) != v.prefix(k - 1) || u.suffix(k - 1) != v.suffix(k - 1) {
        return false;
    }
    let mut fs = all_factors(u, k);
    fs.extend(all_factors(v, k));
    fs.iter().all(|f| naive_count(u, f).min(t) == naive_count(v, f).min(t))
}

/// `u ≈rₖᵗ v` straight from the definition.
pub fn naive_lrtt_equiv(u: &Word, v: &Word, k: usize, t: usize) -> bool {
    if u.len() < k || v.len() < k {
        return *u == *v || *u == v.reversed();
    }
    let bu = [u.prefix(k - 1), u.suffix(k - 1).reversed()];
    let bv = [v.prefix(k - 1), v.suffix(k - 1).reversed()];
    let same_boundary = (bu[0] == bv[0] && bu[1] == bv[1]) || (bu[0] == bv[1] && bu[1] == bv[0]);
    if !same_boundary {
        return false;
    }
    let mut fs = all_factors(u, k);
    fs.extend(all_factors(v, k));
    fs.iter().all(|f| naive_count_rev(u, f).min(t) == naive_count_rev(v, f).min(t))
}

pub fn is_scattered_subword(u: &Word, w: &Word) -> bool {
    let mut it = w.letters().iter();
    u.letters().iter().all(|c| it.any(|d| d == c))
}
