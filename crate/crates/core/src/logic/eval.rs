//! Model checking of formulas on finite words.
//!
//! Formulas are compiled to a slot-indexed tree before evaluation. Runs of
//! first-order quantifiers of the same kind are evaluated as one block: the
//! conjuncts (for `∃`) or disjuncts (for `∀`) of the block body are checked as
//! soon as all the block variables they mention are bound, which prunes the
//! search without changing the semantics.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Formula, LogicError};
use crate::automata::{Alphabet, Word};

/// Maximum word lengths accepted by the evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalLimits {
    /// Cap for formulas without set quantifiers.
    pub fo_max_len: usize,
    /// Cap for formulas with at least one set quantifier (at most 63).
    pub so_max_len: usize,
}

impl Default for EvalLimits {
    fn default() -> Self {
        EvalLimits {
            fo_max_len: 12,
            so_max_len: 8,
        }
    }
}

impl EvalLimits {
    fn cap_for(&self, f: &Formula) -> usize {
        if f.set_quantifiers() > 0 {
            self.so_max_len.min(63)
        } else {
            self.fo_max_len
        }
    }
}

/// Assignment of free variables. Positions are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    pub positions: BTreeMap<String, usize>,
    pub sets: BTreeMap<String, BTreeSet<usize>>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, position: usize) -> Self {
        self.positions.insert(var.to_string(), position);
        self
    }

    pub fn with_set(mut self, var: &str, set: impl IntoIterator<Item = usize>) -> Self {
        self.sets.insert(var.to_string(), set.into_iter().collect());
        self
    }
}

enum Node {
    Lab(char, usize),
    Less(usize, usize),
    Succ(usize, usize),
    Bet(usize, usize, usize),
    Nbr(usize, usize),
    Eq(usize, usize),
    In(usize, usize),
    And(Vec<Node>),
    Or(Vec<Node>),
    Not(Box<Node>),
    /// `levels[i]` holds the conjuncts checkable once `vars[..i]` are bound.
    Exists { vars: Vec<usize>, levels: Vec<Vec<Node>> },
    /// Same shape as `Exists`, with disjuncts.
    Forall { vars: Vec<usize>, levels: Vec<Vec<Node>> },
    ExistsSet(usize, Box<Node>),
    ForallSet(usize, Box<Node>),
}

/// A formula prepared for repeated evaluation.
pub struct Compiled {
    root: Node,
    fo_slots: HashMap<String, usize>,
    so_slots: HashMap<String, usize>,
    free: BTreeSet<String>,
    cap: usize,
}

struct Slots {
    fo: HashMap<String, usize>,
    so: HashMap<String, usize>,
}

impl Slots {
    fn fo(&mut self, name: &str) -> usize {
        let n = self.fo.len();
        *self.fo.entry(name.to_string()).or_insert(n)
    }

    fn so(&mut self, name: &str) -> usize {
        let n = self.so.len();
        *self.so.entry(name.to_string()).or_insert(n)
    }
}

fn flatten_and(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::And(fs) => fs.iter().for_each(|g| flatten_and(g, out)),
        other => out.push(other.clone()),
    }
}

fn flatten_or(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::Or(fs) => fs.iter().for_each(|g| flatten_or(g, out)),
        other => out.push(other.clone()),
    }
}

fn compile_block(f: &Formula, existential: bool, slots: &mut Slots) -> Node {
    let mut names = Vec::new();
    let mut body = f;
    while let (Formula::Exists(x, g), true) | (Formula::Forall(x, g), false) = (body, existential) {
        names.push(x.clone());
        body = g;
    }
    let mut parts = Vec::new();
    if existential {
        flatten_and(body, &mut parts);
    } else {
        flatten_or(body, &mut parts);
    }
    let mut levels: Vec<Vec<Formula>> = (0..=names.len()).map(|_| Vec::new()).collect();
    for part in parts {
        let free = part.free_vars();
        // innermost binder wins when a name is rebound inside the block
        let level = names
            .iter()
            .enumerate()
            .filter(|(_, n)| free.contains(*n))
            .map(|(i, _)| i + 1)
            .max()
            .unwrap_or(0);
        levels[level].push(part);
    }
    let vars = names.iter().map(|n| slots.fo(n)).collect();
    let levels = levels
        .into_iter()
        .map(|parts| parts.iter().map(|p| compile_node(p, slots)).collect())
        .collect();
    if existential {
        Node::Exists { vars, levels }
    } else {
        Node::Forall { vars, levels }
    }
}

fn compile_node(f: &Formula, slots: &mut Slots) -> Node {
    match f {
        Formula::Lab(a, x) => Node::Lab(*a, slots.fo(x)),
        Formula::Less(x, y) => Node::Less(slots.fo(x), slots.fo(y)),
        Formula::Succ(x, y) => Node::Succ(slots.fo(x), slots.fo(y)),
        Formula::Bet(x, y, z) => Node::Bet(slots.fo(x), slots.fo(y), slots.fo(z)),
        Formula::Nbr(x, y) => Node::Nbr(slots.fo(x), slots.fo(y)),
        Formula::Eq(x, y) => Node::Eq(slots.fo(x), slots.fo(y)),
        Formula::In(x, s) => Node::In(slots.fo(x), slots.so(s)),
        Formula::And(fs) => Node::And(fs.iter().map(|g| compile_node(g, slots)).collect()),
        Formula::Or(fs) => Node::Or(fs.iter().map(|g| compile_node(g, slots)).collect()),
        Formula::Not(g) => Node::Not(Box::new(compile_node(g, slots))),
        Formula::Exists(..) => compile_block(f, true, slots),
        Formula::Forall(..) => compile_block(f, false, slots),
        Formula::ExistsSet(x, g) => {
            let s = slots.so(x);
            Node::ExistsSet(s, Box::new(compile_node(g, slots)))
        }
        Formula::ForallSet(x, g) => {
            let s = slots.so(x);
            Node::ForallSet(s, Box::new(compile_node(g, slots)))
        }
    }
}

struct Ctx<'a> {
    word: &'a [char],
    pos: Vec<usize>,
    sets: Vec<u64>,
}

impl Ctx<'_> {
    fn eval(&mut self, node: &Node) -> bool {
        match node {
            Node::Lab(a, x) => self.word[self.pos[*x] - 1] == *a,
            Node::Less(x, y) => self.pos[*x] < self.pos[*y],
            Node::Succ(x, y) => self.pos[*x] + 1 == self.pos[*y],
            Node::Bet(x, y, z) => {
                let (x, y, z) = (self.pos[*x], self.pos[*y], self.pos[*z]);
                (x < y && y < z) || (z < y && y < x)
            }
            Node::Nbr(x, y) => self.pos[*x].abs_diff(self.pos[*y]) == 1,
            Node::Eq(x, y) => self.pos[*x] == self.pos[*y],
            Node::In(x, s) => self.sets[*s] >> (self.pos[*x] - 1) & 1 == 1,
            Node::And(parts) => parts.iter().all(|p| self.eval(p)),
            Node::Or(parts) => parts.iter().any(|p| self.eval(p)),
            Node::Not(g) => !self.eval(g),
            Node::Exists { vars, levels } => self.exists_from(0, vars, levels),
            Node::Forall { vars, levels } => self.forall_from(0, vars, levels),
            Node::ExistsSet(s, g) => {
                let saved = self.sets[*s];
                let n = self.word.len();
                let found = (0..1u64 << n).any(|mask| {
                    self.sets[*s] = mask;
                    self.eval(g)
                });
                self.sets[*s] = saved;
                found
            }
            Node::ForallSet(s, g) => {
                let saved = self.sets[*s];
                let n = self.word.len();
                let all = (0..1u64 << n).all(|mask| {
                    self.sets[*s] = mask;
                    self.eval(g)
                });
                self.sets[*s] = saved;
                all
            }
        }
    }

    fn exists_from(&mut self, level: usize, vars: &[usize], levels: &[Vec<Node>]) -> bool {
        if !levels[level].iter().all(|p| self.eval(p)) {
            return false;
        }
        if level == vars.len() {
            return true;
        }
        let slot = vars[level];
        let saved = self.pos[slot];
        let mut found = false;
        for p in 1..=self.word.len() {
            self.pos[slot] = p;
            if self.exists_from(level + 1, vars, levels) {
                found = true;
                break;
            }
        }
        self.pos[slot] = saved;
        found
    }

    fn forall_from(&mut self, level: usize, vars: &[usize], levels: &[Vec<Node>]) -> bool {
        if levels[level].iter().any(|p| self.eval(p)) {
            return true;
        }
        if level == vars.len() {
            return false;
        }
        let slot = vars[level];
        let saved = self.pos[slot];
        let mut all = true;
        for p in 1..=self.word.len() {
            self.pos[slot] = p;
            if !self.forall_from(level + 1, vars, levels) {
                all = false;
                break;
            }
        }
        self.pos[slot] = saved;
        all
    }
}

impl Compiled {
    pub fn new(f: &Formula, limits: EvalLimits) -> Compiled {
        let f = &f.alpha_renamed();
        let mut slots = Slots {
            fo: HashMap::new(),
            so: HashMap::new(),
        };
        let root = compile_node(f, &mut slots);
        Compiled {
            root,
            fo_slots: slots.fo,
            so_slots: slots.so,
            free: f.free_vars(),
            cap: limits.cap_for(f),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn evaluate(&self, word: &Word, valuation: &Valuation) -> Result<bool, LogicError> {
        let n = word.len();
        if n > self.cap {
            return Err(LogicError::CapExceeded { length: n, cap: self.cap });
        }
        let mut ctx = Ctx {
            word: word.letters(),
            pos: vec![0; self.fo_slots.len()],
            sets: vec![0; self.so_slots.len()],
        };
        for var in &self.free {
            if let Some(&slot) = self.fo_slots.get(var) {
                let p = *valuation
                    .positions
                    .get(var)
                    .ok_or_else(|| LogicError::Unassigned(var.clone()))?;
                if p == 0 || p > n {
                    return Err(LogicError::PositionOutOfRange { var: var.clone(), position: p, length: n });
                }
                ctx.pos[slot] = p;
            } else if let Some(&slot) = self.so_slots.get(var) {
                let set = valuation
                    .sets
                    .get(var)
                    .ok_or_else(|| LogicError::Unassigned(var.clone()))?;
                let mut mask = 0u64;
                for &p in set {
                    if p == 0 || p > n || p > 64 {
                        return Err(LogicError::PositionOutOfRange { var: var.clone(), position: p, length: n });
                    }
                    mask |= 1 << (p - 1);
                }
                ctx.sets[slot] = mask;
            }
        }
        Ok(ctx.eval(&self.root))
    }
}

/// Truth value of `f` on `word` under `valuation`, with default limits.
pub fn evaluate(word: &Word, f: &Formula, valuation: &Valuation) -> Result<bool, LogicError> {
    Compiled::new(f, EvalLimits::default()).evaluate(word, valuation)
}

/// Words of length at most `max_len` satisfying the sentence `f`, shortlex.
pub fn language_of(
    f: &Formula,
    alphabet: &Alphabet,
    max_len: usize,
    limits: EvalLimits,
) -> Result<Vec<Word>, LogicError> {
    if !f.is_sentence() {
        return Err(LogicError::NotSentence(f.free_vars().into_iter().collect()));
    }
    let compiled = Compiled::new(f, limits);
    if max_len > compiled.cap {
        return Err(LogicError::CapExceeded { length: max_len, cap: compiled.cap });
    }
    let empty = Valuation::new();
    let mut out = Vec::new();
    for w in alphabet.words_up_to(max_len) {
        if compiled.evaluate(&w, &empty)? {
            out.push(w);
        }
    }
    Ok(out)
}
