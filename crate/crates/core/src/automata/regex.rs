//! Regular expressions over a declared alphabet.
//!
//! Syntax: a letter stands for itself, `+` is union, juxtaposition is
//! concatenation, `*` is Kleene star, `()` groups, `_` is the empty word and
//! `#` the empty language. Star binds tighter than concatenation, which binds
//! tighter than union. Whitespace is ignored.

use std::collections::BTreeSet;
use std::fmt;

use super::{Alphabet, AutomataError, Dfa, Nfa};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(char),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    /// Concatenation of the letters of `word`, or ε for the empty word.
    pub fn literal(word: &str) -> Regex {
        word.chars()
            .map(Regex::Letter)
            .reduce(Regex::concat)
            .unwrap_or(Regex::Epsilon)
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex, AutomataError> {
        let tokens: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: text.len(),
            alphabet,
        };
        let r = parser.union()?;
        if let Some(&(offset, c)) = parser.tokens.get(parser.pos) {
            return Err(AutomataError::Syntax {
                offset,
                message: format!("unexpected `{c}`"),
            });
        }
        Ok(r)
    }

    /// Builds the position (Glushkov) automaton: one state per letter
    /// occurrence plus an initial state, no ε-transitions.
    pub fn glushkov(&self, alphabet: &Alphabet) -> Result<Nfa, AutomataError> {
        let mut letters = Vec::new();
        let mut follow: Vec<BTreeSet<usize>> = Vec::new();
        let info = linearize(self, &mut letters, &mut follow);
        let n = letters.len() + 1;
        let mut nfa = Nfa::new(alphabet.clone(), n);
        nfa.initials.push(0);
        for &p in &info.first {
            let a = alphabet
                .index_of(letters[p])
                .ok_or(AutomataError::ForeignLetter(letters[p]))?;
            nfa.add_edge(0, a, p + 1);
        }
        for (q, succ) in follow.iter().enumerate() {
            for &p in succ {
                let a = alphabet
                    .index_of(letters[p])
                    .ok_or(AutomataError::ForeignLetter(letters[p]))?;
                nfa.add_edge(q + 1, a, p + 1);
            }
        }
        for &p in &info.last {
            nfa.accepting[p + 1] = true;
        }
        nfa.accepting[0] = info.nullable;
        Ok(nfa)
    }

    /// Minimal canonical DFA of the expression.
    pub fn compile(&self, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
        Ok(self.glushkov(alphabet)?.determinize().minimize())
    }
}

struct Linear {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

fn linearize(r: &Regex, letters: &mut Vec<char>, follow: &mut Vec<BTreeSet<usize>>) -> Linear {
    match r {
        Regex::Empty => Linear {
            nullable: false,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        Regex::Epsilon => Linear {
            nullable: true,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        Regex::Letter(c) => {
            let p = letters.len();
            letters.push(*c);
            follow.push(BTreeSet::new());
            Linear {
                nullable: false,
                first: BTreeSet::from([p]),
                last: BTreeSet::from([p]),
            }
        }
        Regex::Union(a, b) => {
            let a = linearize(a, letters, follow);
            let b = linearize(b, letters, follow);
            Linear {
                nullable: a.nullable || b.nullable,
                first: &a.first | &b.first,
                last: &a.last | &b.last,
            }
        }
        Regex::Concat(a, b) => {
            let a = linearize(a, letters, follow);
            let b = linearize(b, letters, follow);
            for &l in &a.last {
                follow[l].extend(b.first.iter().copied());
            }
            Linear {
                nullable: a.nullable && b.nullable,
                first: if a.nullable { &a.first | &b.first } else { a.first },
                last: if b.nullable { &a.last | &b.last } else { b.last },
            }
        }
        Regex::Star(a) => {
            let a = linearize(a, letters, follow);
            for &l in &a.last {
                follow[l].extend(a.first.iter().copied());
            }
            Linear {
                nullable: true,
                first: a.first,
                last: a.last,
            }
        }
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error(&self, message: &str) -> AutomataError {
        AutomataError::Syntax {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn union(&mut self) -> Result<Regex, AutomataError> {
        let mut r = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            r = Regex::union(r, self.concat()?);
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex, AutomataError> {
        let mut r = self.starred()?;
        while matches!(self.peek(), Some(c) if c != '+' && c != ')' && c != '*') {
            r = Regex::concat(r, self.starred()?);
        }
        Ok(r)
    }

    fn starred(&mut self) -> Result<Regex, AutomataError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, AutomataError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some('_') => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            Some('#') => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            Some(c) if self.alphabet.contains(c) => {
                self.pos += 1;
                Ok(Regex::Letter(c))
            }
            Some(c) if matches!(c, ')' | '*' | '+') => Err(self.error(&format!("unexpected `{c}`"))),
            Some(c) => Err(AutomataError::ForeignLetter(c)),
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // precedence: 0 union, 1 concat, 2 star/atom
        fn go(r: &Regex, ctx: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let own = match r {
                Regex::Union(..) => 0,
                Regex::Concat(..) => 1,
                _ => 2,
            };
            if own < ctx {
                write!(f, "(")?;
            }
            match r {
                Regex::Empty => write!(f, "#")?,
                Regex::Epsilon => write!(f, "_")?,
                Regex::Letter(c) => write!(f, "{c}")?,
                Regex::Union(a, b) => {
                    go(a, 0, f)?;
                    write!(f, "+")?;
                    go(b, 0, f)?;
                }
                Regex::Concat(a, b) => {
                    go(a, 1, f)?;
                    go(b, 1, f)?;
                }
                Regex::Star(a) => {
                    go(a, 3, f)?;
                    write!(f, "*")?;
                }
            }
            if own < ctx {
                write!(f, ")")?;
            }
            Ok(())
        }
        go(self, 0, f)
    }
}
