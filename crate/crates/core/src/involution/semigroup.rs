use std::collections::BTreeSet;

use crate::automata::Word;

use super::InvolutionError;

/// A finite semigroup given by its multiplication table.
///
/// Elements are `0..size`. `names` holds a word representing each element
/// and `origin` its index in the monoid it was cut out of (the identity map
/// for a monoid built from scratch).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    mult: Vec<usize>,
    identity: Option<usize>,
    generators: Vec<(char, usize)>,
    names: Vec<Word>,
    origin: Vec<usize>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table, checking closure,
    /// associativity and the claimed identity exhaustively.
    pub fn from_table(
        size: usize,
        mult: Vec<usize>,
        identity: Option<usize>,
        generators: Vec<(char, usize)>,
        names: Vec<Word>,
    ) -> Result<FiniteSemigroup, InvolutionError> {
        let s = FiniteSemigroup {
            size,
            mult,
            identity,
            generators,
            names,
            origin: (0..size).collect(),
        };
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn with_origin(mut self, origin: Vec<usize>) -> FiniteSemigroup {
        self.origin = origin;
        self
    }

    fn validate(&self) -> Result<(), InvolutionError> {
        let n = self.size;
        let bad = |m: String| Err(InvolutionError::InvalidTable(m));
        if self.mult.len() != n * n {
            return bad(format!("table has {} entries, expected {}", self.mult.len(), n * n));
        }
        if self.names.len() != n {
            return bad(format!("{} names for {n} elements", self.names.len()));
        }
        if let Some(&v) = self.mult.iter().find(|&&v| v >= n) {
            return bad(format!("entry {v} out of range"));
        }
        if let Some(&(a, g)) = self.generators.iter().find(|(_, g)| *g >= n) {
            return bad(format!("generator {a} maps to {g}, out of range"));
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return bad(format!("not associative at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        if let Some(e) = self.identity {
            if e >= n || (0..n).any(|x| self.mul(e, x) != x || self.mul(x, e) != x) {
                return bad(format!("{e} is not a two-sided identity"));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.size + y]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn generators(&self) -> &[(char, usize)] {
        &self.generators
    }

    pub fn name(&self, x: usize) -> &Word {
        &self.names[x]
    }

    pub fn names(&self) -> &[Word] {
        &self.names
    }

    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// `x^n` for `n ≥ 1`.
    pub fn pow(&self, x: usize, n: usize) -> usize {
        assert!(n >= 1, "semigroup powers start at 1");
        (1..n).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn product(&self, xs: &[usize]) -> usize {
        let (&first, rest) = xs.split_first().expect("nonempty product");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }
}

/// An involutive anti-automorphism, as a permutation of the elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    star: Vec<usize>,
}

impl Involution {
    /// Checks `x** = x`, `(xy)* = y*x*` and `1* = 1` exhaustively.
    pub fn new(s: &FiniteSemigroup, star: Vec<usize>) -> Result<Involution, InvolutionError> {
        let n = s.size();
        let bad = |m: String| Err(InvolutionError::InvolutionInconsistent(m));
        if star.len() != n || star.iter().any(|&x| x >= n) {
            return bad("star table does not fit the semigroup".into());
        }
        if let Some(x) = (0..n).find(|&x| star[star[x]] != x) {
            return bad(format!("({x}*)* ≠ {x}"));
        }
        for x in 0..n {
            for y in 0..n {
                if star[s.mul(x, y)] != s.mul(star[y], star[x]) {
                    return bad(format!("({x}·{y})* ≠ {y}*·{x}*"));
                }
            }
        }
        if let Some(e) = s.identity() {
            if star[e] != e {
                return bad("1* ≠ 1".into());
            }
        }
        Ok(Involution { star })
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.star
    }

    /// The involution on a subsemigroup cut out of the monoid this one acts on.
    pub fn restrict(&self, sub: &FiniteSemigroup) -> Result<Involution, InvolutionError> {
        let origin = sub.origin();
        let star = origin
            .iter()
            .map(|&m| {
                let image = self.star[m];
                origin.iter().position(|&o| o == image).ok_or_else(|| {
                    InvolutionError::InvolutionInconsistent(format!(
                        "subsemigroup is not closed under star ({m}* = {image})"
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Involution::new(sub, star)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Aperiodicity {
    Yes,
    /// Least element with `xⁿ ≠ xⁿ⁺¹`, `n` the size of the semigroup.
    No(usize),
}

impl Aperiodicity {
    pub fn holds(&self) -> bool {
        matches!(self, Aperiodicity::Yes)
    }
}

/// Outcome of `e x f y e z f = e z f y e x f` over idempotents `e, f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LttIdentity {
    Holds,
    Fails { e: usize, f: usize, x: usize, y: usize, z: usize },
}

impl LttIdentity {
    pub fn holds(&self) -> bool {
        matches!(self, LttIdentity::Holds)
    }
}

/// Outcome of `e x e* = e x* e*` over idempotents `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionIdentity {
    Holds,
    Fails { e: usize, x: usize },
}

impl InvolutionIdentity {
    pub fn holds(&self) -> bool {
        matches!(self, InvolutionIdentity::Holds)
    }
}

pub fn idempotents(s: &FiniteSemigroup) -> Vec<usize> {
    (0..s.size()).filter(|&e| s.mul(e, e) == e).collect()
}

pub fn is_aperiodic(s: &FiniteSemigroup) -> Aperiodicity {
    let n = s.size().max(1);
    match (0..s.size()).find(|&x| {
        let p = s.pow(x, n);
        p != s.mul(p, x)
    }) {
        Some(x) => Aperiodicity::No(x),
        None => Aperiodicity::Yes,
    }
}

/// Exhaustive check; the reported counterexample is the least `(e,f,x,y,z)`
/// in lexicographic element order.
pub fn check_ltt_identity(s: &FiniteSemigroup) -> LttIdentity {
    let n = s.size();
    let ids = idempotents(s);
    for &e in &ids {
        for &f in &ids {
            // exf ranges over eSf and only fSe matters for y, since
            // p y q = p (f y e) q when p ∈ eSf and q ∈ eSf.
            let esf: Vec<usize> = (0..n)
                .map(|x| s.mul(s.mul(e, x), f))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let fse: BTreeSet<usize> = (0..n).map(|y| s.mul(s.mul(f, y), e)).collect();
            let fails = esf.iter().any(|&p| {
                esf.iter().any(|&q| fse.iter().any(|&y| s.mul(s.mul(p, y), q) != s.mul(s.mul(q, y), p)))
            });
            if !fails {
                continue;
            }
            for x in 0..n {
                let exf = s.mul(s.mul(e, x), f);
                for y in 0..n {
                    for z in 0..n {
                        let ezf = s.mul(s.mul(e, z), f);
                        if s.mul(s.mul(exf, y), ezf) != s.mul(s.mul(ezf, y), exf) {
                            return LttIdentity::Fails { e, f, x, y, z };
                        }
                    }
                }
            }
            unreachable!("eSf check found a failure the scan did not");
        }
    }
    LttIdentity::Holds
}

pub fn check_involution_identity(s: &FiniteSemigroup, star: &Involution) -> InvolutionIdentity {
    for e in idempotents(s) {
        let es = star.star(e);
        for x in 0..s.size() {
            let lhs = s.product(&[e, x, es]);
            let rhs = s.product(&[e, star.star(x), es]);
            if lhs != rhs {
                return InvolutionIdentity::Fails { e, x };
            }
        }
    }
    InvolutionIdentity::Holds
}
