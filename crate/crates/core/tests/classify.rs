mod common;

use common::{naive_lrtt_equiv, naive_ltt_equiv, random_re, words};
use rand::{rngs::StdRng, SeedableRng};
use revlang::automata::{compile, Alphabet, Dfa, Word};
use revlang::classify::*;
use revlang::fixtures;
use revlang::logic::{evaluate, parse_formula, relativize, RelativizeMode, Valuation};

/// Membership is constant on every class of the naive relation, over all
/// words up to `max`.
fn constant_on_classes(d: &Dfa, max: usize, equiv: impl Fn(&Word, &Word) -> bool) -> bool {
    let mut reps: Vec<(Word, bool)> = Vec::new();
    for x in words(d.alphabet().letters(), max) {
        let acc = d.accepts(&x).unwrap();
        match reps.iter().find(|(y, _)| equiv(y, &x)) {
            Some(&(_, a)) if a != acc => return false,
            Some(_) => {}
            None => reps.push((x, acc)),
        }
    }
    true
}

#[test]
fn reference_languages() {
    let r = classify(&fixtures::ab_star(), 3, 3).unwrap();
    assert!(!r.reversible && !r.mso_bet && !r.fo_bet);
    assert_eq!(r.ltt, LttVerdict { definable: true, params: Some((2, 1)) });
    assert_eq!(r.fo_n, FoNVerdict::No(NoReason::NotReversible));
    assert!(r.evidence.reversal_witness.is_some());

    let r = classify(&fixtures::even_length(), 3, 3).unwrap();
    assert!(r.reversible && r.mso_bet && !r.aperiodic && !r.fo_bet && !r.ltt.definable);
    assert_eq!(r.fo_n, FoNVerdict::No(NoReason::NotLtt));
    assert_eq!(r.evidence.aperiodicity_witness.as_deref(), Some("a"));

    let r = classify(&fixtures::ab_ba_counts(), 3, 3).unwrap();
    assert!(r.reversible && r.aperiodic && r.ltt.definable && r.fo_bet);
    assert_eq!(r.fo_n, FoNVerdict::No(NoReason::InvolutionIdentityFails));
    assert!(r.evidence.involution_identity_counterexample.is_some());

    let r = classify(&fixtures::aba_star_or_a_star_ba(), 4, 3).unwrap();
    assert_eq!(r.fo_n, FoNVerdict::Yes { k: 3, t: 2 });

    let r = classify(&fixtures::c_a_c_b_c(), 3, 3).unwrap();
    assert!(r.aperiodic && !r.ltt.definable);
    assert_eq!(r.evidence.ltt_identity_counterexample.as_ref().unwrap().len(), 5);
}

#[test]
fn bounded_search_failure_is_unknown() {
    // with bounds too small to certify aba*+a*ba nothing is proven either way
    let r = classify(&fixtures::aba_star_or_a_star_ba(), 2, 3).unwrap();
    match &r.fo_n {
        FoNVerdict::Unknown { detail } => assert!(detail.contains(CONVERSE_OPEN)),
        other => panic!("expected unknown, got {other:?}"),
    }
    let text = render_report(&r, Format::Text);
    assert!(text.contains("converse direction open"));
    assert_eq!(classify(&fixtures::ab_star(), 0, 1).unwrap_err(), ClassifyError::Bounds);
}

#[test]
fn fixtures_are_consistent() {
    for (name, d) in fixtures::all() {
        let opts = ClassifyOptions { state_cap: 200_000, ..ClassifyOptions::default() };
        let r = classify_with(&d, opts).unwrap();
        assert!(r.consistency_errors().is_empty(), "{name}: {:?}", r.consistency_errors());
        if r.fo_bet {
            assert!(r.mso_bet);
        }
        if matches!(r.fo_n, FoNVerdict::Yes { .. }) {
            assert!(r.mso_bet && r.ltt.definable, "{name}");
        }
    }
}

#[test]
fn random_regex_reports_are_consistent() {
    let mut rng = StdRng::seed_from_u64(99);
    let mut done = 0;
    while done < 100 {
        let re = random_re(&mut rng, &['a', 'b'], 4);
        let d = compile(&re.render(), &Alphabet::parse("ab").unwrap()).unwrap();
        if d.states() > 6 {
            continue;
        }
        done += 1;
        let opts = ClassifyOptions { state_cap: 200_000, ..ClassifyOptions::default() };
        let r = classify_with(&d, opts).unwrap();
        let label = re.render();
        assert!(r.consistency_errors().is_empty(), "{label}: {:?}", r.consistency_errors());

        let closed = words(&['a', 'b'], 8).iter().all(|x| re.matches(x) == re.matches(&x.reversed()));
        assert_eq!(r.reversible, closed, "{label}");
        if let Some((k, t)) = r.ltt.params {
            assert!(constant_on_classes(&d, 7, |x, y| naive_ltt_equiv(x, y, k, t)), "{label} ltt ({k},{t})");
        }
        if let FoNVerdict::Yes { k, t } = r.fo_n {
            assert!(constant_on_classes(&d, 7, |x, y| naive_lrtt_equiv(x, y, k, t)), "{label} lrtt ({k},{t})");
        }
        let json = render_report(&r, Format::Json);
        let back = parse_report(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(render_report(&back, Format::Json), json);
    }
}

#[test]
fn relativized_fo_sentences_define_the_language() {
    let mut checked = 0;
    for fx in fixtures::order_sentences() {
        let f = parse_formula(fx.text).unwrap();
        if f.set_quantifiers() > 0 {
            continue;
        }
        let r = classify(&fx.dfa, 2, 2).unwrap();
        if !r.fo_bet {
            continue;
        }
        checked += 1;
        let chi = relativize(&f, RelativizeMode::Mso).unwrap();
        assert!(chi.signature().is_undirected() && chi.set_quantifiers() == 0);
        let letters = fx.alphabet.letters().to_vec();
        for x in words(&letters, 7).into_iter().filter(|x| !x.is_empty()) {
            assert_eq!(evaluate(&x, &chi, &Valuation::new()).unwrap(), fx.dfa.accepts(&x).unwrap(), "{} on {x}", fx.name);
        }
    }
    assert!(checked >= 2);
}

#[test]
fn text_report_lines() {
    let r = classify(&fixtures::ab_ba_counts(), 3, 3).unwrap();
    let text = render_report(&r, Format::Text);
    for label in ["reversible", "mso(bet)", "fo(bet)", "aperiodic", "fo(+1)/ltt", "fo(N)", "monoid"] {
        assert_eq!(text.lines().filter(|l| l.starts_with(label)).count(), 1, "{label}\n{text}");
    }
    assert!(text.contains("no (involution-identity-fails)"));
    let json: serde_json::Value = serde_json::from_str(&render_report(&r, Format::Json)).unwrap();
    assert_eq!(json["fo_n"]["verdict"], "no");
    assert_eq!(json["fo_n"]["reason"], "involution-identity-fails");
    assert_eq!(json["fo_n"]["params"], serde_json::Value::Null);
    assert_eq!(json["ltt"]["params"], serde_json::json!([2, 3]));
    assert_eq!(json["monoid_size"], 65);
}
