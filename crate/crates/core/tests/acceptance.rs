//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.
//! Runs without the libtest harness; exits nonzero if anything fails.

mod common;

use std::time::{Duration, Instant};

use common::{naive_count_rev, naive_lrtt_equiv, naive_ltt_equiv, random_re, w, words};
use rand::{rngs::StdRng, Rng, SeedableRng};
use revlang::automata::{compile, Alphabet, Dfa, Side, Word};
use revlang::classify::{classify, FoNVerdict, NoReason};
use revlang::fixtures;
use revlang::involution::*;
use revlang::logic::*;
use revlang::ltt::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn dfa(re: &str, letters: &str) -> Dfa {
    compile(re, &Alphabet::parse(letters).unwrap()).unwrap()
}

fn holds(f: &Formula, x: &Word) -> bool {
    evaluate(x, f, &Valuation::new()).unwrap()
}

fn reversibility() -> Outcome {
    let l = fixtures::abc_or_cba();
    ensure!(l.is_reversible(), "(abc)*+(cba)* should be reversible");
    let q = l.quotient(&w("a"), Side::Left).map_err(|e| e.to_string())?;
    ensure!(q.equivalent(&dfa("bc(abc)*", "abc")).unwrap().is_equal(), "a⁻¹L ≠ bc(abc)*");
    ensure!(!q.is_reversible(), "a⁻¹L should not be reversible");
    Ok("L reversible; a⁻¹L = bc(abc)* not reversible".into())
}

fn equivalence_facts() -> Outcome {
    ensure!(ltt_equiv(&w("ababab"), &w("abab"), 2, 1), "ababab ≈₂¹ abab");
    ensure!(!ltt_equiv(&w("abab"), &w("abbab"), 2, 1), "abab ≉₂¹ abbab");
    ensure!(!ltt_equiv(&w("ababab"), &w("abab"), 2, 2), "ababab ≉₂² abab");
    ensure!(lrtt_equiv(&w("ab"), &w("ba"), 2, 1), "ab ≈r₂¹ ba");
    ensure!(!lrtt_equiv(&w("aba"), &w("baa"), 2, 1), "aba ≉r₂¹ baa");
    let mut rng = StdRng::seed_from_u64(1);
    let letters = ['a', 'b', 'c'];
    for _ in 0..1000 {
        let len = rng.gen_range(0..=16);
        let x = Word::new((0..len).map(|_| letters[rng.gen_range(0..3)]).collect());
        for k in 1..=3 {
            for t in 1..=3 {
                ensure!(lrtt_equiv(&x, &x.reversed(), k, t), "{x} ≉r{k}{t} its reverse");
                ensure!(naive_lrtt_equiv(&x, &x.reversed(), k, t), "oracle: {x} vs reverse");
            }
        }
    }
    Ok("5 stated facts; 1000 random words ≈r their reverse for (k,t) ≤ (3,3)".into())
}

fn ab_star_classes() -> Outcome {
    let l = fixtures::ab_star();
    ensure!(is_union_of_classes(&l, 2, 1, Mode::Ltt) == UnionVerdict::Yes, "(ab)* not a union of ≈₂¹ classes");
    let all = words(&['a', 'b'], 8);
    let mut classes: Vec<Vec<Word>> = Vec::new();
    for x in all.iter().filter(|x| l.accepts(x).unwrap()) {
        match classes.iter_mut().find(|c| naive_ltt_equiv(&c[0], x, 2, 1)) {
            Some(c) => c.push(x.clone()),
            None => classes.push(vec![x.clone()]),
        }
    }
    // each class met by L, restricted to length ≤ 8, lies inside L
    for c in &classes {
        let full: Vec<&Word> = all.iter().filter(|y| naive_ltt_equiv(&c[0], y, 2, 1)).collect();
        ensure!(full.len() == c.len(), "class of {} leaves (ab)*", c[0]);
    }
    let expected = vec![vec![w("")], vec![w("ab")], vec![w("abab"), w("ababab"), w("abababab")]];
    ensure!(classes == expected, "classes {classes:?}");
    Ok("classes {ε}, {ab}, abab(ab)* up to length 8".into())
}

fn c_a_c_b_c() -> Outcome {
    let l = fixtures::c_a_c_b_c();
    let s = syntactic_monoid(&l).map_err(|e| e.to_string())?;
    ensure!(is_aperiodic(&s.monoid).holds(), "should be aperiodic");
    ensure!(!check_ltt_identity(&syntactic_semigroup(&s)).holds(), "LTT identity should fail");
    for k in 1..=3 {
        for t in 1..=3 {
            match is_union_of_classes(&l, k, t, Mode::Ltt) {
                UnionVerdict::No(x, y) => {
                    ensure!(naive_ltt_equiv(&x, &y, k, t), "({k},{t}) witness {x}/{y} not equivalent");
                    ensure!(l.accepts(&x).unwrap() != l.accepts(&y).unwrap(), "({k},{t}) witness not split");
                }
                other => return Err(format!("({k},{t}): {other:?}")),
            }
        }
    }
    Ok("aperiodic, identity fails, 9 verified ltt witnesses".into())
}

fn ab_ba_counts() -> Outcome {
    let l = fixtures::ab_ba_counts();
    ensure!(l.is_reversible(), "should be reversible");
    ensure!(is_union_of_classes(&l, 2, 3, Mode::Ltt) == UnionVerdict::Yes, "ltt union at (2,3)");
    let s = syntactic_monoid(&l).map_err(|e| e.to_string())?;
    let sg = syntactic_semigroup(&s);
    let star = involution_from_reverse(&s).and_then(|i| i.restrict(&sg)).map_err(|e| e.to_string())?;
    let InvolutionIdentity::Fails { e, x } = check_involution_identity(&sg, &star) else {
        return Err("involution identity should fail".into());
    };
    let fail = format!("exe* ≠ ex*e* at e = [{}], x = [{}]", sg.name(e), sg.name(x));
    for k in 1..=3 {
        for t in 1..=3 {
            match is_union_of_classes(&l, k, t, Mode::Lrtt) {
                UnionVerdict::No(x, y) => {
                    ensure!(naive_lrtt_equiv(&x, &y, k, t), "({k},{t}) witness {x}/{y} not equivalent");
                    ensure!(l.accepts(&x).unwrap() != l.accepts(&y).unwrap(), "({k},{t}) witness not split");
                }
                other => return Err(format!("lrtt ({k},{t}): {other:?}")),
            }
        }
    }
    let r = classify(&l, 3, 3).map_err(|e| e.to_string())?;
    ensure!(r.fo_n == FoNVerdict::No(NoReason::InvolutionIdentityFails), "fo_n = {:?}", r.fo_n);
    Ok(format!("{fail}; 9 verified lrtt witnesses; fo(N) = no"))
}

fn aba_star() -> Outcome {
    let l = fixtures::aba_star_or_a_star_ba();
    let SearchOutcome::Found { k, t } = search_params(&l, 4, 3, Mode::Lrtt) else {
        return Err("lrtt search found nothing".into());
    };
    let r = classify(&l, 4, 3).map_err(|e| e.to_string())?;
    ensure!(r.fo_n == FoNVerdict::Yes { k, t }, "fo_n = {:?}", r.fo_n);
    let s = syntactic_monoid(&l).map_err(|e| e.to_string())?;
    let sg = syntactic_semigroup(&s);
    let star = involution_from_reverse(&s).and_then(|i| i.restrict(&sg)).map_err(|e| e.to_string())?;
    ensure!(check_involution_identity(&sg, &star).holds(), "involution identity should hold");
    let mut reps: Vec<(Word, bool)> = Vec::new();
    for x in words(&['a', 'b'], 9) {
        let acc = l.accepts(&x).unwrap();
        match reps.iter().find(|(y, _)| naive_lrtt_equiv(y, &x, k, t)) {
            Some((y, a)) => ensure!(*a == acc, "{y} ≈r {x} but membership differs"),
            None => reps.push((x, acc)),
        }
    }
    Ok(format!("(k,t) = ({k},{t}); {} classes over words ≤ 9 are uniform", reps.len()))
}

fn relativization() -> Outcome {
    let fixtures = fixtures::order_sentences();
    ensure!(fixtures.len() == 5, "expected 5 sentences");
    let mut notes = Vec::new();
    for fx in &fixtures {
        let f = parse_formula(fx.text).map_err(|e| e.to_string())?;
        ensure!(f.signature().is_order_only(), "{} is not over <", fx.name);
        let chi = relativize(&f, RelativizeMode::Mso).map_err(|e| e.to_string())?;
        ensure!(chi.signature().is_undirected(), "{}: relativized sentence uses <", fx.name);
        let rel = language_of(&chi, &fx.alphabet, 7, EvalLimits::default()).map_err(|e| e.to_string())?;
        let orig = language_of(&f, &fx.alphabet, 7, EvalLimits::default()).map_err(|e| e.to_string())?;
        let sym: Vec<Word> = fx
            .alphabet
            .words_up_to(7)
            .into_iter()
            .filter(|x| !x.is_empty() && (holds(&f, x) || holds(&f, &x.reversed())))
            .collect();
        // ∃e has no witness on ε, so ε is compared separately
        ensure!(!rel.contains(&Word::empty()), "{}: relativized sentence holds on ε", fx.name);
        ensure!(rel == sym, "{}: relativized language differs from the symmetrization", fx.name);
        let orig_nonempty: Vec<Word> = orig.iter().filter(|x| !x.is_empty()).cloned().collect();
        ensure!((rel == orig_nonempty) == fx.dfa.is_reversible(), "{}: equality with L(f) vs reversibility", fx.name);
        if orig.contains(&Word::empty()) {
            notes.push(fx.name);
        }
    }
    Ok(format!("5 sentences, lengths 1..7; ε ∈ L(f) only for {notes:?}"))
}

fn builders() -> Outcome {
    let sample = words(&['a', 'b'], 7);
    let mut count = 0;
    for v in words(&['a', 'b'], 3).into_iter().skip(1) {
        for m in 1..=3 {
            let f = build_count_formula(&v, m).map_err(|e| e.to_string())?;
            for x in &sample {
                ensure!(holds(&f, x) == (naive_count_rev(x, &v) >= m), "φ_{v}^≥{m} on {x}");
            }
            count += 1;
        }
    }
    let alphabet = Alphabet::parse("ab").unwrap();
    let mut classes = 0;
    for (k, t) in [(2, 1), (3, 1)] {
        let mut seen: Vec<Word> = Vec::new();
        for rep in &sample {
            if seen.iter().any(|s| lrtt_equiv(s, rep, k, t)) {
                continue;
            }
            seen.push(rep.clone());
            let f = build_lrtt_class_formula(rep, k, t, &alphabet).map_err(|e| e.to_string())?;
            for x in &sample {
                ensure!(holds(&f, x) == lrtt_equiv(rep, x, k, t), "class of {rep} ({k},{t}) on {x}");
            }
        }
        classes += seen.len();
    }
    Ok(format!("{count} count formulas, {classes} class formulas on words ≤ 7"))
}

fn monoid_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 10 {
        let re = random_re(&mut rng, &['a', 'b'], 4);
        let d = dfa(&re.render(), "ab");
        if d.states() > 6 {
            continue;
        }
        tested += 1;
        let s = syntactic_monoid(&d).map_err(|e| e.to_string())?;
        let longest = s.witnesses.iter().map(Word::len).max().unwrap();
        let classes = brute_force_congruence(&d, longest + 1);
        ensure!(classes.len() == s.size(), "{}: {} classes vs {} elements", re.render(), classes.len(), s.size());
        let mut used = vec![false; s.size()];
        for c in &classes {
            let m = s.eval(&c[0]).unwrap();
            ensure!(!used[m], "{}: element shared by two classes", re.render());
            used[m] = true;
            ensure!(c.iter().all(|x| s.eval(x).unwrap() == m), "{}: class split", re.render());
        }
    }
    let ab = syntactic_monoid(&fixtures::ab_star()).unwrap();
    ensure!(ab.size() == 6, "M((ab)*) has {} elements", ab.size());
    let even = syntactic_monoid(&fixtures::even_length()).unwrap();
    ensure!(even.size() == 2 && !is_aperiodic(&even.monoid).holds(), "M(even-length)");
    Ok("10 random regexes agree; |M((ab)*)| = 6; M(even) = Z/2".into())
}

fn involution_axioms() -> Outcome {
    let mut names = Vec::new();
    for (name, d) in fixtures::all().into_iter().filter(|(_, d)| d.is_reversible()) {
        let s = syntactic_monoid(&d).map_err(|e| e.to_string())?;
        let inv = involution_from_reverse(&s).map_err(|e| format!("{name}: {e}"))?;
        for x in 0..s.size() {
            ensure!(inv.star(inv.star(x)) == x, "{name}: star not involutive");
            for y in 0..s.size() {
                let lhs = inv.star(s.monoid.mul(x, y));
                ensure!(lhs == s.monoid.mul(inv.star(y), inv.star(x)), "{name}: not an anti-automorphism");
            }
        }
        ensure!(accepting_star_closed(&s, &inv), "{name}: P* ≠ P");
        names.push(name);
    }
    ensure!(names.len() >= 5, "only {} reversible fixtures", names.len());
    let bad = syntactic_monoid(&fixtures::bc_abc_star()).unwrap();
    ensure!(involution_from_reverse(&bad).err() == Some(InvolutionError::NotReversible), "bc(abc)* accepted");
    Ok(format!("{} reversible fixtures; bc(abc)* rejected", names.len()))
}

fn macros() -> Outcome {
    let n = expand_macro(MacroKind::NFromBet);
    let b = expand_macro(MacroKind::BetFromN);
    let mut checks = 0usize;
    for x in words(&['a', 'b'], 6).into_iter().filter(|x| !x.is_empty()) {
        let len = x.len();
        for p in 1..=len {
            for q in 1..=len {
                let v = Valuation::new().with("x", p).with("y", q);
                ensure!(evaluate(&x, &n, &v).unwrap() == (p.abs_diff(q) == 1), "N({p},{q}) on {x}");
                for r in 1..=len {
                    let between = (p < q && q < r) || (r < q && q < p);
                    let v = v.clone().with("z", r);
                    ensure!(evaluate(&x, &b, &v).unwrap() == between, "bet({p},{q},{r}) on {x}");
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} bet valuations and all N valuations agree"))
}

fn pumping() -> Outcome {
    let l = fixtures::aba_star_or_a_star_ba();
    let SearchOutcome::Found { k, t } = search_params(&l, 4, 3, Mode::Lrtt) else {
        return Err("no lrtt parameters".into());
    };
    let s = syntactic_monoid(&l).map_err(|e| e.to_string())?;
    let sg = syntactic_semigroup(&s);
    let contexts = words(&['a', 'b'], 3);
    let mut pairs = 0;
    for e in idempotents(&sg) {
        let uk = sg.name(e).repeat(k);
        for x in 0..sg.size() {
            let sw = sg.name(x);
            let left = uk.concat(sw).concat(&uk.reversed());
            let right = uk.concat(&sw.reversed()).concat(&uk.reversed());
            for a in &contexts {
                for b in &contexts {
                    let (p, q) = (a.concat(&left).concat(b), a.concat(&right).concat(b));
                    ensure!(lrtt_equiv(&p, &q, k, t) && naive_lrtt_equiv(&p, &q, k, t), "{p} ≉r {q}");
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("({k},{t}): {pairs} context pairs equivalent"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("reversibility and quotient", 1, reversibility),
        ("stated equivalence facts", 5, equivalence_facts),
        ("(ab)* classes", 5, ab_star_classes),
        ("c*ac*bc* is not ltt", 30, c_a_c_b_c),
        ("ab/ba counting language is not fo(N)", 60, ab_ba_counts),
        ("aba*+a*ba is fo(N)", 60, aba_star),
        ("relativization", 60, relativization),
        ("formula builders", 90, builders),
        ("syntactic monoid oracle", 30, monoid_oracle),
        ("involution axioms", 30, involution_axioms),
        ("macro interdefinability", 30, macros),
        ("pumping construction", 30, pumping),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > Duration::from_secs(limit) => Err(format!("took longer than {limit} s")),
            r => r,
        };
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {name} ({:.2} s, limit {limit} s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} of 12 criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
