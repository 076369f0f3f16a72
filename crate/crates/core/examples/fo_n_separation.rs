//! A reversible, locally threshold testable language that no FO(N) sentence
//! defines: ♯ab = 2 ∧ ♯ba = 1, or ♯ab = 1 ∧ ♯ba = 2, over {a, b, c}.

use revlang::automata::Word;
use revlang::fixtures;
use revlang::involution::{
    check_involution_identity, involution_from_reverse, syntactic_monoid, syntactic_semigroup,
    InvolutionIdentity,
};
use revlang::ltt::{is_union_of_classes, lrtt_equiv, Mode, UnionVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lang = fixtures::ab_ba_counts();
    let k = 2;
    let c = "c".repeat(k);
    let inside = Word::from(format!("{c}ab{c}ba{c}ab{c}").as_str());
    let outside = Word::from(format!("{c}ab{c}ab{c}ab{c}").as_str());
    println!("{inside} ∈ L: {}", lang.accepts(&inside)?);
    println!("{outside} ∈ L: {}", lang.accepts(&outside)?);
    println!("the two are ≈r[k=3,t=2]-equivalent: {}", lrtt_equiv(&inside, &outside, 3, 2));

    println!("reversible: {}", lang.is_reversible());
    println!("union of ≈[2,3] classes: {:?}", is_union_of_classes(&lang, 2, 3, Mode::Ltt));
    for (k, t) in [(2, 3), (3, 3)] {
        if let UnionVerdict::No(u, v) = is_union_of_classes(&lang, k, t, Mode::Lrtt) {
            println!("not a union of ≈r[{k},{t}] classes: {u} ≈r {v}, split by L");
        }
    }

    let syn = syntactic_monoid(&lang)?;
    let semi = syntactic_semigroup(&syn);
    let star = involution_from_reverse(&syn)?.restrict(&semi)?;
    if let InvolutionIdentity::Fails { e, x } = check_involution_identity(&semi, &star) {
        println!(
            "e x e* ≠ e x* e* with e = [{}], x = [{}] in a semigroup of {} elements",
            semi.name(e),
            semi.name(x),
            semi.size()
        );
    }
    Ok(())
}
