//! The full decision pipeline for one language, and its report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{Dfa, Equivalence};
use crate::involution::{
    check_involution_identity, check_ltt_identity, idempotents, involution_from_reverse,
    is_aperiodic, syntactic_monoid_capped, syntactic_semigroup, Aperiodicity, InvolutionError,
    InvolutionIdentity, LttIdentity, DEFAULT_ELEMENT_CAP,
};
use crate::ltt::{search_params_capped, Mode, SearchOutcome, DEFAULT_STATE_CAP};

pub const CONVERSE_OPEN: &str = "converse direction open";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub k_max: usize,
    pub t_max: usize,
    pub state_cap: usize,
    pub element_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            k_max: 3,
            t_max: 3,
            state_cap: DEFAULT_STATE_CAP,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("search bounds must be positive")]
    Bounds,
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LttVerdict {
    pub definable: bool,
    pub params: Option<(usize, usize)>,
}

/// Why a language is not FO(N)-definable. Each reason is a failed necessary
/// condition, so a `No` verdict is always proved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    NotReversible,
    NotLtt,
    InvolutionIdentityFails,
}

impl NoReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NoReason::NotReversible => "not-reversible",
            NoReason::NotLtt => "not-ltt",
            NoReason::InvolutionIdentityFails => "involution-identity-fails",
        }
    }

    fn parse(s: &str) -> Option<NoReason> {
        [NoReason::NotReversible, NoReason::NotLtt, NoReason::InvolutionIdentityFails]
            .into_iter()
            .find(|r| r.as_str() == s)
    }
}

/// FO(N) verdict: `Yes` carries LRTT parameters as a certificate; `Unknown`
/// means every necessary condition holds but no parameters were found
/// within the search bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FoNRepr", try_from = "FoNRepr")]
pub enum FoNVerdict {
    Yes { k: usize, t: usize },
    No(NoReason),
    Unknown { detail: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FoNRepr {
    verdict: String,
    params: Option<(usize, usize)>,
    reason: Option<String>,
}

impl From<FoNVerdict> for FoNRepr {
    fn from(v: FoNVerdict) -> Self {
        match v {
            FoNVerdict::Yes { k, t } => FoNRepr { verdict: "yes".into(), params: Some((k, t)), reason: None },
            FoNVerdict::No(r) => FoNRepr { verdict: "no".into(), params: None, reason: Some(r.as_str().into()) },
            FoNVerdict::Unknown { detail } => FoNRepr { verdict: "unknown".into(), params: None, reason: Some(detail) },
        }
    }
}

impl TryFrom<FoNRepr> for FoNVerdict {
    type Error = String;

    fn try_from(r: FoNRepr) -> Result<Self, Self::Error> {
        match (r.verdict.as_str(), r.params, r.reason) {
            ("yes", Some((k, t)), None) => Ok(FoNVerdict::Yes { k, t }),
            ("no", None, Some(reason)) => NoReason::parse(&reason)
                .map(FoNVerdict::No)
                .ok_or_else(|| format!("unknown reason `{reason}`")),
            ("unknown", None, Some(detail)) => Ok(FoNVerdict::Unknown { detail }),
            (v, ..) => Err(format!("malformed fo_n verdict `{v}`")),
        }
    }
}

/// Supporting data for the verdicts. Monoid elements are named by their
/// shortlex-least representative word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    /// Shortlex-least word in exactly one of `L` and `Lʳ`.
    pub reversal_witness: Option<String>,
    /// Element `x` with `xⁿ ≠ xⁿ⁺¹`.
    pub aperiodicity_witness: Option<String>,
    /// `[e, f, x, y, z]` violating `exfyezf = ezfyexf`.
    pub ltt_identity_counterexample: Option<Vec<String>>,
    /// `[e, x]` violating `exe* = ex*e*`.
    pub involution_identity_counterexample: Option<Vec<String>>,
    pub semigroup_size: usize,
    pub idempotents: usize,
    pub ltt_search: Option<String>,
    pub lrtt_search: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub reversible: bool,
    pub mso_bet: bool,
    pub fo_bet: bool,
    pub aperiodic: bool,
    pub ltt: LttVerdict,
    pub fo_n: FoNVerdict,
    pub monoid_size: usize,
    pub evidence: Evidence,
}

impl ClassificationReport {
    /// Checks the implications that must hold between the verdicts.
    pub fn consistency_errors(&self) -> Vec<&'static str> {
        let mut errors = Vec::new();
        if self.mso_bet != self.reversible {
            errors.push("mso(bet) must equal reversibility");
        }
        if self.fo_bet != (self.reversible && self.aperiodic) {
            errors.push("fo(bet) must equal reversible ∧ aperiodic");
        }
        if self.ltt.definable && !self.aperiodic {
            errors.push("ltt implies aperiodic");
        }
        if self.ltt.params.is_some() && !self.ltt.definable {
            errors.push("ltt parameters without ltt verdict");
        }
        if let FoNVerdict::Yes { .. } = self.fo_n {
            if !(self.reversible && self.ltt.definable && self.evidence.involution_identity_counterexample.is_none()) {
                errors.push("fo(N) yes requires reversible, ltt and the involution identity");
            }
        }
        errors
    }
}

fn describe(outcome: SearchOutcome, k_max: usize, t_max: usize) -> String {
    match outcome {
        SearchOutcome::Found { k, t } => format!("found k={k} t={t}"),
        SearchOutcome::NotFound => format!("none with k ≤ {k_max}, t ≤ {t_max}"),
        SearchOutcome::Aborted => format!("aborted (state cap) with k ≤ {k_max}, t ≤ {t_max}"),
    }
}

pub fn classify(dfa: &Dfa, k_max: usize, t_max: usize) -> Result<ClassificationReport, ClassifyError> {
    classify_with(dfa, ClassifyOptions { k_max, t_max, ..ClassifyOptions::default() })
}

pub fn classify_with(dfa: &Dfa, opts: ClassifyOptions) -> Result<ClassificationReport, ClassifyError> {
    if opts.k_max == 0 || opts.t_max == 0 {
        return Err(ClassifyError::Bounds);
    }
    let dfa = dfa.minimize();
    let mut evidence = Evidence::default();

    let reversible = match dfa.equivalent(&dfa.reverse()).expect("same alphabet") {
        Equivalence::Equal => true,
        Equivalence::Differ(w) => {
            evidence.reversal_witness = Some(w.to_string());
            false
        }
    };

    let syn = syntactic_monoid_capped(&dfa, opts.element_cap)?;
    let semi = syntactic_semigroup(&syn);
    evidence.semigroup_size = semi.size();
    evidence.idempotents = idempotents(&semi).len();
    let name = |x: usize| semi.name(x).to_string();

    let aperiodic = match is_aperiodic(&syn.monoid) {
        Aperiodicity::Yes => true,
        Aperiodicity::No(x) => {
            evidence.aperiodicity_witness = Some(syn.witnesses[x].to_string());
            false
        }
    };
    let identity = check_ltt_identity(&semi);
    if let LttIdentity::Fails { e, f, x, y, z } = identity {
        evidence.ltt_identity_counterexample = Some([e, f, x, y, z].map(name).to_vec());
    }
    let ltt_definable = aperiodic && identity.holds();
    let mut ltt_params = None;
    if ltt_definable {
        let outcome = search_params_capped(&dfa, opts.k_max, opts.t_max, Mode::Ltt, opts.state_cap);
        evidence.ltt_search = Some(describe(outcome, opts.k_max, opts.t_max));
        if let SearchOutcome::Found { k, t } = outcome {
            ltt_params = Some((k, t));
        }
    }

    let mut involution_ok = false;
    if reversible {
        let star = involution_from_reverse(&syn)?.restrict(&semi)?;
        match check_involution_identity(&semi, &star) {
            InvolutionIdentity::Holds => involution_ok = true,
            InvolutionIdentity::Fails { e, x } => {
                evidence.involution_identity_counterexample = Some(vec![name(e), name(x)]);
            }
        }
    }

    let fo_n = if !reversible {
        FoNVerdict::No(NoReason::NotReversible)
    } else if !ltt_definable {
        FoNVerdict::No(NoReason::NotLtt)
    } else if !involution_ok {
        FoNVerdict::No(NoReason::InvolutionIdentityFails)
    } else {
        let outcome = search_params_capped(&dfa, opts.k_max, opts.t_max, Mode::Lrtt, opts.state_cap);
        let text = describe(outcome, opts.k_max, opts.t_max);
        evidence.lrtt_search = Some(text.clone());
        match outcome {
            SearchOutcome::Found { k, t } => FoNVerdict::Yes { k, t },
            _ => FoNVerdict::Unknown { detail: format!("{CONVERSE_OPEN}; lrtt search: {text}") },
        }
    };

    Ok(ClassificationReport {
        reversible,
        mso_bet: reversible,
        fo_bet: reversible && aperiodic,
        aperiodic,
        ltt: LttVerdict { definable: ltt_definable, params: ltt_params },
        fo_n,
        monoid_size: syn.size(),
        evidence,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_report(r: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn render_text(r: &ClassificationReport) -> String {
    let ev = &r.evidence;
    let mut out = String::new();
    let mut line = |label: &str, verdict: String, note: Option<String>| {
        match note {
            Some(n) => writeln!(out, "{label:<12} {verdict}  [{n}]"),
            None => writeln!(out, "{label:<12} {verdict}"),
        }
        .expect("write to string");
    };
    line(
        "reversible",
        yes_no(r.reversible).into(),
        ev.reversal_witness.as_ref().map(|w| format!("in exactly one of L, Lʳ: {w}")),
    );
    line("mso(bet)", yes_no(r.mso_bet).into(), None);
    line("fo(bet)", yes_no(r.fo_bet).into(), None);
    line(
        "aperiodic",
        yes_no(r.aperiodic).into(),
        ev.aperiodicity_witness.as_ref().map(|x| format!("xⁿ ≠ xⁿ⁺¹ for x = [{x}]")),
    );
    let ltt = match r.ltt.params {
        Some((k, t)) => format!("yes (k={k}, t={t})"),
        None => yes_no(r.ltt.definable).into(),
    };
    line(
        "fo(+1)/ltt",
        ltt,
        ev.ltt_identity_counterexample
            .as_ref()
            .map(|c| format!("identity fails at e,f,x,y,z = {}", c.join(", ")))
            .or_else(|| ev.ltt_search.clone()),
    );
    let fo_n = match &r.fo_n {
        FoNVerdict::Yes { k, t } => format!("yes (k={k}, t={t})"),
        FoNVerdict::No(reason) => format!("no ({})", reason.as_str()),
        FoNVerdict::Unknown { detail } => format!("unknown ({detail})"),
    };
    line(
        "fo(N)",
        fo_n,
        ev.involution_identity_counterexample
            .as_ref()
            .map(|c| format!("exe* ≠ ex*e* at e,x = {}", c.join(", "))),
    );
    line(
        "monoid",
        format!("{} elements", r.monoid_size),
        Some(format!("semigroup {}, idempotents {}", ev.semigroup_size, ev.idempotents)),
    );
    out
}

pub fn parse_report(json: &str) -> Result<ClassificationReport, serde_json::Error> {
    serde_json::from_str(json)
}
