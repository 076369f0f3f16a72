use std::collections::BTreeMap;
use std::fmt;

use crate::automata::Word;

use super::LttError;

/// `♯(w, v)`: number of occurrences of the factor `v` in `w`, overlaps included.
pub fn count_factor(w: &Word, v: &Word) -> Result<usize, LttError> {
    if v.is_empty() {
        return Err(LttError::EmptyFactor);
    }
    Ok(w.letters()
        .windows(v.len())
        .filter(|win| *win == v.letters())
        .count())
}

/// `♯ʳ(w, v)`: number of positions where `v` or `vʳ` occurs. A position
/// matching both (palindromic `v`) counts once.
pub fn count_factor_rev(w: &Word, v: &Word) -> Result<usize, LttError> {
    if v.is_empty() {
        return Err(LttError::EmptyFactor);
    }
    let rv = v.reversed();
    Ok(w.letters()
        .windows(v.len())
        .filter(|win| *win == v.letters() || *win == rv.letters())
        .count())
}

/// Canonical representative of `{v, vʳ}`: the lexicographically smaller one.
pub fn canonical_factor(v: &Word) -> Word {
    let r = v.reversed();
    if r < *v {
        r
    } else {
        v.clone()
    }
}

/// Data that determines the `≈ₖᵗ` class of a word of length at least `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LttProfile {
    pub k: usize,
    pub t: usize,
    pub prefix: Word,
    pub suffix: Word,
    /// Nonzero counts of factors of length `1..=k`, saturated at `t`.
    pub counts: BTreeMap<Word, usize>,
}

/// `≈ₖᵗ` class of a word: short words are alone in their class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LttClass {
    Short(Word),
    Profile(LttProfile),
}

/// The class `{w, wʳ}` of a word shorter than `k`, stored as a sorted pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShortWordClass {
    pub words: (Word, Word),
}

impl ShortWordClass {
    pub fn of(w: &Word) -> Self {
        ShortWordClass {
            words: sorted_pair(w.clone(), w.reversed()),
        }
    }
}

/// Data that determines the `≈rₖᵗ` class of a word of length at least `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrttProfile {
    pub k: usize,
    pub t: usize,
    /// `{prefix_{k-1}(w), reverse(suffix_{k-1}(w))}` as a sorted pair.
    pub boundary: (Word, Word),
    /// Nonzero `♯ʳ` counts keyed by [`canonical_factor`], saturated at `t`.
    pub counts: BTreeMap<Word, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LrttClass {
    Short(ShortWordClass),
    Profile(LrttProfile),
}

fn sorted_pair(a: Word, b: Word) -> (Word, Word) {
    if b < a {
        (b, a)
    } else {
        (a, b)
    }
}

pub fn ltt_profile(w: &Word, k: usize, t: usize) -> LttClass {
    assert!(k >= 1 && t >= 1, "k and t must be positive");
    if w.len() < k {
        return LttClass::Short(w.clone());
    }
    let mut counts = BTreeMap::new();
    for len in 1..=k {
        for win in w.letters().windows(len) {
            let c = counts.entry(Word::new(win.to_vec())).or_insert(0);
            *c = (*c + 1).min(t);
        }
    }
    LttClass::Profile(LttProfile {
        k,
        t,
        prefix: w.prefix(k - 1),
        suffix: w.suffix(k - 1),
        counts,
    })
}

pub fn lrtt_profile(w: &Word, k: usize, t: usize) -> LrttClass {
    assert!(k >= 1 && t >= 1, "k and t must be positive");
    if w.len() < k {
        return LrttClass::Short(ShortWordClass::of(w));
    }
    let mut counts = BTreeMap::new();
    for len in 1..=k {
        for win in w.letters().windows(len) {
            let key = canonical_factor(&Word::new(win.to_vec()));
            let c = counts.entry(key).or_insert(0);
            *c = (*c + 1).min(t);
        }
    }
    LrttClass::Profile(LrttProfile {
        k,
        t,
        boundary: sorted_pair(w.prefix(k - 1), w.suffix(k - 1).reversed()),
        counts,
    })
}

/// `u ≈ₖᵗ w`.
pub fn ltt_equiv(u: &Word, w: &Word, k: usize, t: usize) -> bool {
    ltt_profile(u, k, t) == ltt_profile(w, k, t)
}

/// `u ≈rₖᵗ w`.
pub fn lrtt_equiv(u: &Word, w: &Word, k: usize, t: usize) -> bool {
    lrtt_profile(u, k, t) == lrtt_profile(w, k, t)
}

impl fmt::Display for LttClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LttClass::Short(w) => writeln!(f, "short: {{{w}}}"),
            LttClass::Profile(p) => {
                writeln!(f, "prefix: {}", p.prefix)?;
                writeln!(f, "suffix: {}", p.suffix)?;
                for (v, c) in &p.counts {
                    writeln!(f, "{v}:{c}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for LrttClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrttClass::Short(s) => writeln!(f, "short: {{{}, {}}}", s.words.0, s.words.1),
            LrttClass::Profile(p) => {
                writeln!(f, "boundary: {{{}, {}}}", p.boundary.0, p.boundary.1)?;
                for (v, c) in &p.counts {
                    writeln!(f, "{v}:{c}")?;
                }
                Ok(())
            }
        }
    }
}
