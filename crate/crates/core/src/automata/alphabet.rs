use std::fmt;

use super::AutomataError;

/// A finite, ordered alphabet of single-character letters.
///
/// The declaration order is the letter order used for shortlex enumeration,
/// canonical state numbering and witness selection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, AutomataError> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(AutomataError::EmptyAlphabet);
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(AutomataError::DuplicateLetter(*c));
            }
            if matches!(c, '(' | ')' | '*' | '+' | '_' | '#') || c.is_whitespace() {
                return Err(AutomataError::ReservedLetter(*c));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Parses an alphabet declaration such as `"abc"`.
    pub fn parse(text: &str) -> Result<Self, AutomataError> {
        Alphabet::new(text.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// Maps a word to letter indices, failing on the first foreign letter.
    pub fn indices(&self, word: &Word) -> Result<Vec<usize>, AutomataError> {
        word.letters()
            .iter()
            .map(|&c| self.index_of(c).ok_or(AutomataError::ForeignLetter(c)))
            .collect()
    }

    pub fn check(&self, word: &Word) -> Result<(), AutomataError> {
        self.indices(word).map(|_| ())
    }

    pub fn word_from_indices(&self, indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| self.letters[i]).collect())
    }

    /// All words of exactly `len` letters, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; len];
        loop {
            out.push(self.word_from_indices(&idx));
            // odometer increment, rightmost digit fastest
            let mut pos = len;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < self.letters.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|n| self.words_of_length(n)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word. The empty word is displayed as `ε`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<char>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn suffix(&self, n: usize) -> Word {
        let n = n.min(self.0.len());
        Word(self.0[self.0.len() - n..].to_vec())
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Shortlex comparison: shorter words first, then lexicographic by the
    /// given alphabet order.
    pub fn shortlex_cmp(&self, other: &Word, alphabet: &Alphabet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let key = |c: &char| alphabet.index_of(*c).unwrap_or(usize::MAX);
            self.0.iter().map(key).cmp(other.0.iter().map(key))
        })
    }

    /// Parses a bare word; `_` and the empty string both denote ε.
    pub fn parse(text: &str) -> Word {
        if text == "_" || text == "ε" {
            Word::empty()
        } else {
            Word(text.chars().collect())
        }
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
