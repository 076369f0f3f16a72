use std::collections::BTreeSet;
use std::fmt;

use super::LogicError;

/// First-order and monadic second-order formulas over word structures.
///
/// Lowercase variable names range over positions, uppercase names over sets
/// of positions. Atoms cover every predicate used in this crate; which of them
/// a formula actually uses is reported by [`Formula::signature`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Lab(char, String),
    Less(String, String),
    Succ(String, String),
    Bet(String, String, String),
    Nbr(String, String),
    Eq(String, String),
    In(String, String),
    /// Empty conjunction is `true`.
    And(Vec<Formula>),
    /// Empty disjunction is `false`.
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    ExistsSet(String, Box<Formula>),
    ForallSet(String, Box<Formula>),
}

/// Which binary/ternary predicates occur in a formula. Label atoms are always
/// allowed and not tracked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub less: bool,
    pub succ: bool,
    pub bet: bool,
    pub nbr: bool,
    pub eq: bool,
    pub member: bool,
    pub second_order: bool,
}

impl Signature {
    /// True when only `<`, `=` and set membership occur.
    pub fn is_order_only(&self) -> bool {
        !self.succ && !self.bet && !self.nbr
    }

    /// True when only `bet`, `N`, `=` and set membership occur.
    pub fn is_undirected(&self) -> bool {
        !self.less && !self.succ
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.less, "<"),
            (self.succ, "succ"),
            (self.bet, "bet"),
            (self.nbr, "N"),
            (self.eq, "="),
            (self.member, "in"),
        ];
        let used: Vec<&str> = names.iter().filter(|(b, _)| *b).map(|(_, n)| *n).collect();
        let logic = if self.second_order { "mso" } else { "fo" };
        write!(f, "{logic}({})", used.join(", "))
    }
}

pub fn is_set_var(name: &str) -> bool {
    name.chars().next().is_some_and(char::is_uppercase)
}

// Constructors used by the formula builders.
pub fn lab(a: char, x: &str) -> Formula {
    Formula::Lab(a, x.into())
}
pub fn less(x: &str, y: &str) -> Formula {
    Formula::Less(x.into(), y.into())
}
pub fn bet(x: &str, y: &str, z: &str) -> Formula {
    Formula::Bet(x.into(), y.into(), z.into())
}
pub fn nbr(x: &str, y: &str) -> Formula {
    Formula::Nbr(x.into(), y.into())
}
pub fn eq(x: &str, y: &str) -> Formula {
    Formula::Eq(x.into(), y.into())
}
pub fn neq(x: &str, y: &str) -> Formula {
    not(eq(x, y))
}
pub fn member(x: &str, set: &str) -> Formula {
    Formula::In(x.into(), set.into())
}
pub fn and(parts: Vec<Formula>) -> Formula {
    Formula::And(parts)
}
pub fn or(parts: Vec<Formula>) -> Formula {
    Formula::Or(parts)
}
pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}
pub fn implies(a: Formula, b: Formula) -> Formula {
    or(vec![not(a), b])
}
pub fn exists(x: &str, f: Formula) -> Formula {
    Formula::Exists(x.into(), Box::new(f))
}
pub fn forall(x: &str, f: Formula) -> Formula {
    Formula::Forall(x.into(), Box::new(f))
}
pub fn exists_set(x: &str, f: Formula) -> Formula {
    Formula::ExistsSet(x.into(), Box::new(f))
}
pub fn forall_set(x: &str, f: Formula) -> Formula {
    Formula::ForallSet(x.into(), Box::new(f))
}
/// `∃x₁ … ∃xₙ f`, outermost first.
pub fn exists_all<S: AsRef<str>>(vars: &[S], f: Formula) -> Formula {
    vars.iter().rev().fold(f, |acc, x| exists(x.as_ref(), acc))
}
pub fn truth() -> Formula {
    and(Vec::new())
}
pub fn falsity() -> Formula {
    or(Vec::new())
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        let mut note = |v: &'a String, bound: &Vec<&'a str>| {
            if !bound.contains(&v.as_str()) {
                out.insert(v.clone());
            }
        };
        match self {
            Formula::Lab(_, x) => note(x, bound),
            Formula::Less(x, y)
            | Formula::Succ(x, y)
            | Formula::Nbr(x, y)
            | Formula::Eq(x, y)
            | Formula::In(x, y) => {
                note(x, bound);
                note(y, bound);
            }
            Formula::Bet(x, y, z) => {
                note(x, bound);
                note(y, bound);
                note(z, bound);
            }
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free(bound, out);
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Exists(x, f)
            | Formula::Forall(x, f)
            | Formula::ExistsSet(x, f)
            | Formula::ForallSet(x, f) => {
                bound.push(x);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Signature::default();
        self.visit(&mut |f| match f {
            Formula::Less(..) => sig.less = true,
            Formula::Succ(..) => sig.succ = true,
            Formula::Bet(..) => sig.bet = true,
            Formula::Nbr(..) => sig.nbr = true,
            Formula::Eq(..) => sig.eq = true,
            Formula::In(..) => sig.member = true,
            Formula::ExistsSet(..) | Formula::ForallSet(..) => sig.second_order = true,
            _ => {}
        });
        sig
    }

    /// Number of second-order quantifiers.
    pub fn set_quantifiers(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if matches!(f, Formula::ExistsSet(..) | Formula::ForallSet(..)) {
                n += 1;
            }
        });
        n
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|g| g.visit(f)),
            Formula::Not(g)
            | Formula::Exists(_, g)
            | Formula::Forall(_, g)
            | Formula::ExistsSet(_, g)
            | Formula::ForallSet(_, g) => g.visit(f),
            _ => {}
        }
    }

    /// All variable names, bound or free.
    pub fn var_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Lab(_, x) => {
                out.insert(x.clone());
            }
            Formula::Less(x, y)
            | Formula::Succ(x, y)
            | Formula::Nbr(x, y)
            | Formula::Eq(x, y)
            | Formula::In(x, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
            Formula::Bet(x, y, z) => {
                out.extend([x.clone(), y.clone(), z.clone()]);
            }
            Formula::Exists(x, _)
            | Formula::Forall(x, _)
            | Formula::ExistsSet(x, _)
            | Formula::ForallSet(x, _) => {
                out.insert(x.clone());
            }
            _ => {}
        });
        out
    }

    /// Renames bound variables so that every binder introduces a name used by
    /// no other binder and by no free variable.
    pub fn alpha_renamed(&self) -> Formula {
        let mut used: BTreeSet<String> = self.free_vars();
        let mut scope: Vec<(String, String)> = Vec::new();
        self.rename(&mut used, &mut scope)
    }

    fn rename(&self, used: &mut BTreeSet<String>, scope: &mut Vec<(String, String)>) -> Formula {
        let look = |x: &String, scope: &Vec<(String, String)>| -> String {
            scope
                .iter()
                .rev()
                .find(|(from, _)| from == x)
                .map_or_else(|| x.clone(), |(_, to)| to.clone())
        };
        let bind = |x: &String,
                    body: &Formula,
                    used: &mut BTreeSet<String>,
                    scope: &mut Vec<(String, String)>|
         -> (String, Formula) {
            let fresh = fresh_name(x, used);
            used.insert(fresh.clone());
            scope.push((x.clone(), fresh.clone()));
            let body = body.rename(used, scope);
            scope.pop();
            (fresh, body)
        };
        match self {
            Formula::Lab(a, x) => Formula::Lab(*a, look(x, scope)),
            Formula::Less(x, y) => Formula::Less(look(x, scope), look(y, scope)),
            Formula::Succ(x, y) => Formula::Succ(look(x, scope), look(y, scope)),
            Formula::Nbr(x, y) => Formula::Nbr(look(x, scope), look(y, scope)),
            Formula::Eq(x, y) => Formula::Eq(look(x, scope), look(y, scope)),
            Formula::In(x, y) => Formula::In(look(x, scope), look(y, scope)),
            Formula::Bet(x, y, z) => Formula::Bet(look(x, scope), look(y, scope), look(z, scope)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename(used, scope)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename(used, scope)).collect()),
            Formula::Not(f) => Formula::Not(Box::new(f.rename(used, scope))),
            Formula::Exists(x, f) => {
                let (x, f) = bind(x, f, used, scope);
                Formula::Exists(x, Box::new(f))
            }
            Formula::Forall(x, f) => {
                let (x, f) = bind(x, f, used, scope);
                Formula::Forall(x, Box::new(f))
            }
            Formula::ExistsSet(x, f) => {
                let (x, f) = bind(x, f, used, scope);
                Formula::ExistsSet(x, Box::new(f))
            }
            Formula::ForallSet(x, f) => {
                let (x, f) = bind(x, f, used, scope);
                Formula::ForallSet(x, Box::new(f))
            }
        }
    }

    /// Replaces every atom for which `f` returns `Some`.
    pub fn map_atoms(&self, f: &impl Fn(&Formula) -> Option<Formula>) -> Formula {
        match self {
            Formula::And(fs) => Formula::And(fs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Not(g) => Formula::Not(Box::new(g.map_atoms(f))),
            Formula::Exists(x, g) => Formula::Exists(x.clone(), Box::new(g.map_atoms(f))),
            Formula::Forall(x, g) => Formula::Forall(x.clone(), Box::new(g.map_atoms(f))),
            Formula::ExistsSet(x, g) => Formula::ExistsSet(x.clone(), Box::new(g.map_atoms(f))),
            Formula::ForallSet(x, g) => Formula::ForallSet(x.clone(), Box::new(g.map_atoms(f))),
            atom => f(atom).unwrap_or_else(|| atom.clone()),
        }
    }
}

/// `base` if unused, otherwise `base_1`, `base_2`, …
pub fn fresh_name(base: &str, used: &BTreeSet<String>) -> String {
    if !used.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| !used.contains(n))
        .expect("infinite supply of names")
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lab(a, x) => write!(f, "(lab {a} {x})"),
            Formula::Less(x, y) => write!(f, "(< {x} {y})"),
            Formula::Succ(x, y) => write!(f, "(succ {x} {y})"),
            Formula::Bet(x, y, z) => write!(f, "(bet {x} {y} {z})"),
            Formula::Nbr(x, y) => write!(f, "(N {x} {y})"),
            Formula::Eq(x, y) => write!(f, "(= {x} {y})"),
            Formula::In(x, y) => write!(f, "(in {x} {y})"),
            Formula::And(fs) | Formula::Or(fs) => {
                let op = if matches!(self, Formula::And(_)) { "and" } else { "or" };
                write!(f, "({op}")?;
                for g in fs {
                    write!(f, " {g}")?;
                }
                write!(f, ")")
            }
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::Exists(x, g) => write!(f, "(exists {x} {g})"),
            Formula::Forall(x, g) => write!(f, "(forall {x} {g})"),
            Formula::ExistsSet(x, g) => write!(f, "(existsS {x} {g})"),
            Formula::ForallSet(x, g) => write!(f, "(forallS {x} {g})"),
        }
    }
}

enum Sexp {
    Atom(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn offset(&self) -> usize {
        match self {
            Sexp::Atom(_, o) | Sexp::List(_, o) => *o,
        }
    }
}

fn tokenize(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut cur: Option<(usize, String)> = None;
    let mut in_comment = false;
    for (i, c) in text.char_indices() {
        if in_comment {
            in_comment = c != '\n';
            continue;
        }
        if c == ';' || c.is_whitespace() || c == '(' || c == ')' {
            if let Some(tok) = cur.take() {
                out.push(tok);
            }
            if c == ';' {
                in_comment = true;
            } else if !c.is_whitespace() {
                out.push((i, c.to_string()));
            }
        } else {
            cur.get_or_insert_with(|| (i, String::new())).1.push(c);
        }
    }
    out.extend(cur);
    out
}

fn read_sexp(tokens: &[(usize, String)], pos: &mut usize, end: usize) -> Result<Sexp, LogicError> {
    let Some((offset, tok)) = tokens.get(*pos) else {
        return Err(LogicError::Syntax { offset: end, message: "unexpected end of input".into() });
    };
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos) {
                    None => {
                        return Err(LogicError::Syntax { offset: end, message: "missing `)`".into() })
                    }
                    Some((_, t)) if t == ")" => {
                        *pos += 1;
                        return Ok(Sexp::List(items, *offset));
                    }
                    _ => items.push(read_sexp(tokens, pos, end)?),
                }
            }
        }
        ")" => Err(LogicError::Syntax { offset: *offset, message: "unexpected `)`".into() }),
        _ => Ok(Sexp::Atom(tok.clone(), *offset)),
    }
}

/// Parses the S-expression syntax and alpha-renames bound variables.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let sexp = read_sexp(&tokens, &mut pos, text.len())?;
    if let Some((offset, _)) = tokens.get(pos) {
        return Err(LogicError::Syntax { offset: *offset, message: "trailing input".into() });
    }
    Ok(to_formula(&sexp)?.alpha_renamed())
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(char::is_alphabetic)
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn fo_var(s: &Sexp) -> Result<String, LogicError> {
    match s {
        Sexp::Atom(name, offset) if is_ident(name) => {
            if is_set_var(name) {
                Err(LogicError::Sort { offset: *offset, message: format!("`{name}` is a set variable where a position is expected") })
            } else {
                Ok(name.clone())
            }
        }
        other => Err(LogicError::Syntax { offset: other.offset(), message: "expected a position variable".into() }),
    }
}

fn so_var(s: &Sexp) -> Result<String, LogicError> {
    match s {
        Sexp::Atom(name, offset) if is_ident(name) => {
            if is_set_var(name) {
                Ok(name.clone())
            } else {
                Err(LogicError::Sort { offset: *offset, message: format!("`{name}` is a position variable where a set is expected") })
            }
        }
        other => Err(LogicError::Syntax { offset: other.offset(), message: "expected a set variable".into() }),
    }
}

fn to_formula(s: &Sexp) -> Result<Formula, LogicError> {
    let (items, offset) = match s {
        Sexp::List(items, offset) => (items, *offset),
        Sexp::Atom(tok, offset) => {
            return Err(LogicError::Syntax { offset: *offset, message: format!("expected `(`, found `{tok}`") })
        }
    };
    let Some(Sexp::Atom(head, _)) = items.first() else {
        return Err(LogicError::Syntax { offset, message: "expected an operator".into() });
    };
    let args = &items[1..];
    let arity = |n: usize| -> Result<(), LogicError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(LogicError::Arity { offset, op: head.clone(), expected: n, found: args.len() })
        }
    };
    Ok(match head.as_str() {
        "lab" => {
            arity(2)?;
            let letter = match &args[0] {
                Sexp::Atom(a, _) if a.chars().count() == 1 => a.chars().next().unwrap_or_default(),
                other => {
                    return Err(LogicError::Syntax { offset: other.offset(), message: "expected a single letter".into() })
                }
            };
            Formula::Lab(letter, fo_var(&args[1])?)
        }
        "<" => {
            arity(2)?;
            Formula::Less(fo_var(&args[0])?, fo_var(&args[1])?)
        }
        "succ" => {
            arity(2)?;
            Formula::Succ(fo_var(&args[0])?, fo_var(&args[1])?)
        }
        "N" => {
            arity(2)?;
            Formula::Nbr(fo_var(&args[0])?, fo_var(&args[1])?)
        }
        "=" => {
            arity(2)?;
            Formula::Eq(fo_var(&args[0])?, fo_var(&args[1])?)
        }
        "bet" => {
            arity(3)?;
            Formula::Bet(fo_var(&args[0])?, fo_var(&args[1])?, fo_var(&args[2])?)
        }
        "in" => {
            arity(2)?;
            Formula::In(fo_var(&args[0])?, so_var(&args[1])?)
        }
        "and" => Formula::And(args.iter().map(to_formula).collect::<Result<_, _>>()?),
        "or" => Formula::Or(args.iter().map(to_formula).collect::<Result<_, _>>()?),
        "not" => {
            arity(1)?;
            not(to_formula(&args[0])?)
        }
        "exists" | "forall" => {
            arity(2)?;
            let x = fo_var(&args[0])?;
            let body = Box::new(to_formula(&args[1])?);
            if head == "exists" {
                Formula::Exists(x, body)
            } else {
                Formula::Forall(x, body)
            }
        }
        "existsS" | "forallS" => {
            arity(2)?;
            let x = so_var(&args[0])?;
            let body = Box::new(to_formula(&args[1])?);
            if head == "existsS" {
                Formula::ExistsSet(x, body)
            } else {
                Formula::ForallSet(x, body)
            }
        }
        other => {
            return Err(LogicError::Syntax { offset, message: format!("unknown operator `{other}`") })
        }
    })
}
