//! Command-line front end. [`run_cli`] is pure apart from reading input
//! files, so it can be driven directly from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::automata::{compile, Alphabet, AutomataError, Dfa, Equivalence, Side, Word};
use crate::classify::{self, classify_with, render_report, ClassifyError, ClassifyOptions};
use crate::fixtures;
use crate::involution::{
    accepting_star_closed, check_involution_identity, check_ltt_identity, idempotents,
    involution_from_reverse, is_aperiodic, syntactic_monoid_capped, syntactic_semigroup,
    Aperiodicity, InvolutionError, InvolutionIdentity, LttIdentity, DEFAULT_ELEMENT_CAP,
};
use crate::logic::{
    build_count_formula, build_endpoints_formula, build_lrtt_class_formula, build_subword_formula,
    build_word_formula, language_of, parse_formula, relativize, Compiled, EvalLimits,
    Formula, LogicError, RelativizeMode, Valuation,
};
use crate::ltt::{
    is_union_of_classes_capped, lrtt_equiv, lrtt_profile, ltt_equiv, ltt_profile,
    search_params_capped, LttError, Mode, SearchOutcome, UnionVerdict, DEFAULT_STATE_CAP,
};

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<AutomataError> for CliError {
    fn from(e: AutomataError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<LogicError> for CliError {
    fn from(e: LogicError) -> Self {
        match e {
            LogicError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LttError> for CliError {
    fn from(e: LttError) -> Self {
        match e {
            LttError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<InvolutionError> for CliError {
    fn from(e: InvolutionError) -> Self {
        match e {
            InvolutionError::ElementCap { .. } => CliError::Cap(e.to_string()),
            InvolutionError::NotReversible | InvolutionError::Automata(_) => CliError::Usage(e.to_string()),
            InvolutionError::InvolutionInconsistent(_) | InvolutionError::InvalidTable(_) => {
                CliError::Internal(e.to_string())
            }
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Bounds => CliError::Usage(e.to_string()),
            ClassifyError::Involution(e) => e.into(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "revlang", version, about = "Reversible regular languages and their logical fragments")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Ltt,
    Lrtt,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Ltt => Mode::Ltt,
            ModeArg::Lrtt => Mode::Lrtt,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RelModeArg {
    Mso,
    Prenex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    Reversible,
    Aperiodic,
    LttIdentity,
    InvIdentity,
}

/// Where the language comes from: exactly one of a regex (with its
/// alphabet), a DFA file, or a named fixture.
#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
struct LangSource {
    /// Inline regex; requires --alphabet.
    #[arg(long, requires = "alphabet")]
    regex: Option<String>,
    /// DFA in the JSON format.
    #[arg(long)]
    dfa: Option<PathBuf>,
    /// One of the built-in example languages.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args, Debug)]
struct Lang {
    #[command(flatten)]
    source: LangSource,
    /// Letters of the alphabet, e.g. `abc`.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args, Debug)]
struct Caps {
    /// Longest word for first-order evaluation.
    #[arg(long, default_value_t = EvalLimits::default().fo_max_len)]
    fo_cap: usize,
    /// Longest word for evaluation with set quantifiers (at most 63).
    #[arg(long, default_value_t = EvalLimits::default().so_max_len as u64,
          value_parser = clap::value_parser!(u64).range(0..=63))]
    so_cap: u64,
}

impl Caps {
    fn limits(&self) -> EvalLimits {
        EvalLimits { fo_max_len: self.fo_cap, so_max_len: self.so_cap as usize }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the whole pipeline and report every fragment.
    Classify {
        #[command(flatten)]
        lang: Lang,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// Run a single check.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[command(flatten)]
        lang: Lang,
    },
    /// Print the syntactic monoid: elements, table, involution, idempotents.
    Monoid {
        #[command(flatten)]
        lang: Lang,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// Decide u ≈ₖᵗ w or u ≈rₖᵗ w.
    Equiv {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        w1: String,
        w2: String,
    },
    /// Print the (L)TT profile of a word.
    Profile {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        w: String,
    },
    /// Evaluate a sentence on a word.
    Eval {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// List the words up to a length that satisfy a sentence.
    Lang {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        maxlen: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Rewrite a sentence over < into one over bet and N.
    Relativize {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, value_enum)]
        mode: RelModeArg,
    },
    /// Print one of the formula constructions.
    BuildFormula {
        #[command(subcommand)]
        which: BuildKind,
    },
    /// List the words of the language up to a length, in shortlex order.
    Enumerate {
        #[command(flatten)]
        lang: Lang,
        #[arg(long)]
        maxlen: usize,
    },
    /// Left or right quotient by a word.
    Quotient {
        #[command(flatten)]
        lang: Lang,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Print the words up to this length instead of the DFA.
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// The bidirectional quotient u⁻¹Lv⁻¹ ∪ (vʳ)⁻¹L(uʳ)⁻¹.
    Birquotient {
        #[command(flatten)]
        lang: Lang,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Decide whether the language is a union of classes for fixed (k, t).
    UnionClasses {
        #[command(flatten)]
        lang: Lang,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Least (k, t) within bounds for which the language is a union of classes.
    SearchParams {
        #[command(flatten)]
        lang: Lang,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BuildKind {
    /// ♯ʳ(w, v) ≥ m.
    Count {
        #[arg(long)]
        v: String,
        #[arg(long)]
        m: usize,
    },
    /// Exactly {v, vʳ}.
    Word {
        #[arg(long)]
        v: String,
    },
    /// {prefix, reversed suffix} = {x, y}.
    Endpoints {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// The ≈rₖᵗ class of a word.
    Class {
        #[arg(long)]
        w: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        alphabet: String,
    },
    /// u or uʳ as a scattered subword.
    Subword {
        #[arg(long)]
        u: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli) {
        Ok(stdout) => CliOutput { code: EXIT_OK, stdout, stderr: String::new() },
        Err(e) => CliOutput { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_formula(path: &PathBuf) -> Result<Formula> {
    Ok(parse_formula(&read(path)?)?)
}

fn load_lang(lang: &Lang) -> Result<Dfa> {
    let src = &lang.source;
    let dfa = if let Some(re) = &src.regex {
        let letters = lang.alphabet.as_deref().expect("clap enforces --alphabet");
        compile(re, &Alphabet::parse(letters)?)?
    } else if let Some(path) = &src.dfa {
        Dfa::from_json(&read(path)?)?
    } else {
        let name = src.fixture.as_deref().expect("clap enforces one source");
        fixtures::by_name(name).ok_or_else(|| {
            let names: Vec<&str> = fixtures::all().into_iter().map(|(n, _)| n).collect();
            CliError::Usage(format!("unknown fixture `{name}` (known: {})", names.join(", ")))
        })?
    };
    if let (Some(letters), None) = (&lang.alphabet, &src.regex) {
        let declared = Alphabet::parse(letters)?;
        if declared != *dfa.alphabet() {
            return Err(AutomataError::AlphabetMismatch {
                left: declared.to_string(),
                right: dfa.alphabet().to_string(),
            }
            .into());
        }
    }
    Ok(dfa.minimize())
}

fn word_in(dfa: &Dfa, text: &str) -> Result<Word> {
    let w = Word::parse(text);
    dfa.alphabet().check(&w)?;
    Ok(w)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json_line(value: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&value).expect("json value serializes"))
}

fn words_out(words: &[Word], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_line(json!(words.iter().map(|w| w.to_string()).collect::<Vec<_>>())),
        OutputFormat::Text => words.iter().map(|w| format!("{w}\n")).collect(),
    }
}

fn dfa_out(dfa: &Dfa, maxlen: Option<usize>, format: OutputFormat) -> String {
    match maxlen {
        Some(n) => words_out(&dfa.enumerate(n), format),
        None => format!("{}\n", dfa.to_json()),
    }
}

fn run(cli: &Cli) -> Result<String> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { lang, k_max, t_max, state_cap, element_cap } => {
            let dfa = load_lang(lang)?;
            let opts = ClassifyOptions { k_max: *k_max, t_max: *t_max, state_cap: *state_cap, element_cap: *element_cap };
            let report = classify_with(&dfa, opts)?;
            let fmt = match format {
                OutputFormat::Text => classify::Format::Text,
                OutputFormat::Json => classify::Format::Json,
            };
            Ok(render_report(&report, fmt))
        }
        Command::Check { what, lang } => check(*what, &load_lang(lang)?, format),
        Command::Monoid { lang, element_cap } => monoid(&load_lang(lang)?, *element_cap, format),
        Command::Equiv { mode, k, t, w1, w2 } => {
            positive(*k, *t)?;
            let (u, w) = (Word::parse(w1), Word::parse(w2));
            let eq = match Mode::from(*mode) {
                Mode::Ltt => ltt_equiv(&u, &w, *k, *t),
                Mode::Lrtt => lrtt_equiv(&u, &w, *k, *t),
            };
            Ok(match format {
                OutputFormat::Text => format!("equivalent: {}\n", yes_no(eq)),
                OutputFormat::Json => json_line(json!({ "equivalent": eq })),
            })
        }
        Command::Profile { mode, k, t, w } => {
            positive(*k, *t)?;
            let w = Word::parse(w);
            match (Mode::from(*mode), format) {
                (Mode::Ltt, OutputFormat::Text) => Ok(ltt_profile(&w, *k, *t).to_string()),
                (Mode::Lrtt, OutputFormat::Text) => Ok(lrtt_profile(&w, *k, *t).to_string()),
                (Mode::Ltt, OutputFormat::Json) => Ok(json_line(match ltt_profile(&w, *k, *t) {
                    crate::ltt::LttClass::Short(s) => json!({ "short": [s.to_string()] }),
                    crate::ltt::LttClass::Profile(p) => json!({
                        "prefix": p.prefix.to_string(),
                        "suffix": p.suffix.to_string(),
                        "counts": p.counts.iter().map(|(v, c)| (v.to_string(), *c)).collect::<std::collections::BTreeMap<_, _>>(),
                    }),
                })),
                (Mode::Lrtt, OutputFormat::Json) => Ok(json_line(match lrtt_profile(&w, *k, *t) {
                    crate::ltt::LrttClass::Short(s) => {
                        json!({ "short": [s.words.0.to_string(), s.words.1.to_string()] })
                    }
                    crate::ltt::LrttClass::Profile(p) => json!({
                        "boundary": [p.boundary.0.to_string(), p.boundary.1.to_string()],
                        "counts": p.counts.iter().map(|(v, c)| (v.to_string(), *c)).collect::<std::collections::BTreeMap<_, _>>(),
                    }),
                })),
            }
        }
        Command::Eval { formula, word, caps } => {
            let f = load_formula(formula)?;
            let w = Word::parse(word);
            let compiled = Compiled::new(&f, caps.limits());
            let value = compiled.evaluate(&w, &Valuation::new())?;
            Ok(match format {
                OutputFormat::Text => format!("{value}\n"),
                OutputFormat::Json => json_line(json!({ "value": value })),
            })
        }
        Command::Lang { formula, alphabet, maxlen, caps } => {
            let f = load_formula(formula)?;
            let words = language_of(&f, &Alphabet::parse(alphabet)?, *maxlen, caps.limits())?;
            Ok(words_out(&words, format))
        }
        Command::Relativize { formula, mode } => {
            let f = load_formula(formula)?;
            let mode = match mode {
                RelModeArg::Mso => RelativizeMode::Mso,
                RelModeArg::Prenex => RelativizeMode::Prenex,
            };
            formula_out(&relativize(&f, mode)?, format)
        }
        Command::BuildFormula { which } => {
            let f = match which {
                BuildKind::Count { v, m } => build_count_formula(&Word::parse(v), *m)?,
                BuildKind::Word { v } => build_word_formula(&Word::parse(v))?,
                BuildKind::Endpoints { x, y } => build_endpoints_formula(&Word::parse(x), &Word::parse(y))?,
                BuildKind::Class { w, k, t, alphabet } => {
                    build_lrtt_class_formula(&Word::parse(w), *k, *t, &Alphabet::parse(alphabet)?)?
                }
                BuildKind::Subword { u } => build_subword_formula(&Word::parse(u))?,
            };
            formula_out(&f, format)
        }
        Command::Enumerate { lang, maxlen } => Ok(words_out(&load_lang(lang)?.enumerate(*maxlen), format)),
        Command::Quotient { lang, word, side, maxlen } => {
            let dfa = load_lang(lang)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let q = dfa.quotient(&word_in(&dfa, word)?, side)?;
            Ok(dfa_out(&q, *maxlen, format))
        }
        Command::Birquotient { lang, u, v, maxlen } => {
            let dfa = load_lang(lang)?;
            let q = dfa.bidirectional_quotient(&word_in(&dfa, u)?, &word_in(&dfa, v)?)?;
            Ok(dfa_out(&q, *maxlen, format))
        }
        Command::UnionClasses { lang, mode, k, t, state_cap } => {
            positive(*k, *t)?;
            let dfa = load_lang(lang)?;
            match is_union_of_classes_capped(&dfa, *k, *t, (*mode).into(), *state_cap) {
                UnionVerdict::Yes => Ok(match format {
                    OutputFormat::Text => "union: yes\n".to_string(),
                    OutputFormat::Json => json_line(json!({ "verdict": "yes", "witness": null })),
                }),
                UnionVerdict::No(a, b) => Ok(match format {
                    OutputFormat::Text => format!("union: no (equivalent, split by membership: {a} / {b})\n"),
                    OutputFormat::Json => json_line(json!({ "verdict": "no", "witness": [a.to_string(), b.to_string()] })),
                }),
                UnionVerdict::Aborted(n) => Err(CliError::Cap(format!("aborted after {n} product states"))),
            }
        }
        Command::SearchParams { lang, mode, k_max, t_max, state_cap } => {
            positive(*k_max, *t_max)?;
            let dfa = load_lang(lang)?;
            match search_params_capped(&dfa, *k_max, *t_max, (*mode).into(), *state_cap) {
                SearchOutcome::Found { k, t } => Ok(match format {
                    OutputFormat::Text => format!("params: k={k} t={t}\n"),
                    OutputFormat::Json => json_line(json!({ "verdict": "found", "params": [k, t] })),
                }),
                SearchOutcome::NotFound => Ok(match format {
                    OutputFormat::Text => format!("params: none with k ≤ {k_max}, t ≤ {t_max}\n"),
                    OutputFormat::Json => json_line(json!({ "verdict": "none", "params": null })),
                }),
                SearchOutcome::Aborted => Err(CliError::Cap("search aborted at the state cap".into())),
            }
        }
    }
}

fn positive(k: usize, t: usize) -> Result<()> {
    if k == 0 || t == 0 {
        return Err(CliError::Usage("k and t must be positive".into()));
    }
    Ok(())
}

fn formula_out(f: &Formula, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Text => format!("{f}\n"),
        OutputFormat::Json => json_line(json!({ "formula": f.to_string(), "signature": f.signature().to_string() })),
    })
}

fn check(what: CheckKind, dfa: &Dfa, format: OutputFormat) -> Result<String> {
    let (name, verdict, detail): (&str, &str, Option<String>) = match what {
        CheckKind::Reversible => match dfa.equivalent(&dfa.reverse())? {
            Equivalence::Equal => ("reversible", "yes", None),
            Equivalence::Differ(w) => ("reversible", "no", Some(format!("in exactly one of L, Lʳ: {w}"))),
        },
        CheckKind::Aperiodic => {
            let syn = syntactic_monoid_capped(dfa, DEFAULT_ELEMENT_CAP)?;
            match is_aperiodic(&syn.monoid) {
                Aperiodicity::Yes => ("aperiodic", "yes", None),
                Aperiodicity::No(x) => ("aperiodic", "no", Some(format!("xⁿ ≠ xⁿ⁺¹ for x = [{}]", syn.witnesses[x]))),
            }
        }
        CheckKind::LttIdentity => {
            let semi = syntactic_semigroup(&syntactic_monoid_capped(dfa, DEFAULT_ELEMENT_CAP)?);
            match check_ltt_identity(&semi) {
                LttIdentity::Holds => ("ltt-identity", "holds", None),
                LttIdentity::Fails { e, f, x, y, z } => {
                    let names: Vec<String> = [e, f, x, y, z].iter().map(|&i| format!("[{}]", semi.name(i))).collect();
                    ("ltt-identity", "fails", Some(format!("e,f,x,y,z = {}", names.join(", "))))
                }
            }
        }
        CheckKind::InvIdentity => {
            let syn = syntactic_monoid_capped(dfa, DEFAULT_ELEMENT_CAP)?;
            let semi = syntactic_semigroup(&syn);
            let star = involution_from_reverse(&syn)?.restrict(&semi)?;
            match check_involution_identity(&semi, &star) {
                InvolutionIdentity::Holds => ("inv-identity", "holds", None),
                InvolutionIdentity::Fails { e, x } => (
                    "inv-identity",
                    "fails",
                    Some(format!("e,x = [{}], [{}]", semi.name(e), semi.name(x))),
                ),
            }
        }
    };
    Ok(match format {
        OutputFormat::Text => match detail {
            Some(d) => format!("{name}: {verdict} ({d})\n"),
            None => format!("{name}: {verdict}\n"),
        },
        OutputFormat::Json => json_line(json!({ "check": name, "verdict": verdict, "detail": detail })),
    })
}

fn monoid(dfa: &Dfa, element_cap: usize, format: OutputFormat) -> Result<String> {
    let syn = syntactic_monoid_capped(dfa, element_cap)?;
    let semi = syntactic_semigroup(&syn);
    let m = &syn.monoid;
    let n = m.size();
    let star = if dfa.is_reversible() { Some(involution_from_reverse(&syn)?) } else { None };
    let ids = idempotents(m);
    let aperiodic = is_aperiodic(m).holds();
    let ltt_identity = check_ltt_identity(&semi).holds();
    let inv_identity = match &star {
        Some(s) => Some(check_involution_identity(&semi, &s.restrict(&semi)?).holds()),
        None => None,
    };
    let star_closed = star.as_ref().map(|s| accepting_star_closed(&syn, s));
    let in_semigroup = |x: usize| syn.semigroup_elements.binary_search(&x).is_ok();

    if format == OutputFormat::Json {
        let elements: Vec<_> = (0..n)
            .map(|x| {
                json!({
                    "index": x,
                    "witness": syn.witnesses[x].to_string(),
                    "accepting": syn.accepting[x],
                    "in_semigroup": in_semigroup(x),
                })
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| m.mul(x, y)).collect()).collect();
        return Ok(json_line(json!({
            "size": n,
            "semigroup_size": semi.size(),
            "elements": elements,
            "table": table,
            "star": star.as_ref().map(|s| s.table().to_vec()),
            "idempotents": ids,
            "aperiodic": aperiodic,
            "ltt_identity": ltt_identity,
            "involution_identity": inv_identity,
            "p_star_closed": star_closed,
        })));
    }

    let mut out = String::new();
    let width = n.saturating_sub(1).to_string().len();
    let name_width = syn.witnesses.iter().map(|w| w.len()).max().unwrap_or(1).max(1);
    writeln!(out, "elements: {n} (semigroup: {})", semi.size()).expect("write to string");
    for x in 0..n {
        let mut flags = Vec::new();
        if syn.accepting[x] {
            flags.push("accepting");
        }
        if !in_semigroup(x) {
            flags.push("identity only");
        }
        let w = syn.witnesses[x].to_string();
        let line = format!("  {x:>width$}  {w:<name_width$}  {}", flags.join(", "));
        writeln!(out, "{}", line.trim_end()).expect("write to string");
    }
    writeln!(out, "table:").expect("write to string");
    let header: Vec<String> = (0..n).map(|y| format!("{y:>width$}")).collect();
    writeln!(out, "  {:>width$} | {}", "", header.join(" ")).expect("write to string");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| format!("{:>width$}", m.mul(x, y))).collect();
        writeln!(out, "  {x:>width$} | {}", row.join(" ")).expect("write to string");
    }
    if let Some(s) = &star {
        let pairs: Vec<String> = (0..n).map(|x| format!("{x}→{}", s.star(x))).collect();
        writeln!(out, "star: {}", pairs.join(" ")).expect("write to string");
    }
    let id_names: Vec<String> = ids.iter().map(|&e| syn.witnesses[e].to_string()).collect();
    writeln!(out, "idempotents: {}", id_names.join(", ")).expect("write to string");
    let opt = |b: Option<bool>| b.map_or("n/a (not reversible)", yes_no);
    writeln!(out, "aperiodic: {}", yes_no(aperiodic)).expect("write to string");
    writeln!(out, "ltt-identity: {}", if ltt_identity { "holds" } else { "fails" }).expect("write to string");
    writeln!(out, "inv-identity: {}", inv_identity.map_or("n/a (not reversible)", |b| if b { "holds" } else { "fails" }))
        .expect("write to string");
    writeln!(out, "P star-closed: {}", opt(star_closed)).expect("write to string");
    Ok(out)
}
