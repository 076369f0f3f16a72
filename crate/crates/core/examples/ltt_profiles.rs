//! Threshold-testable profiles, and deciding whether a language is a union
//! of their classes.

use revlang::automata::Word;
use revlang::fixtures;
use revlang::ltt::{
    count_factor, count_factor_rev, is_union_of_classes, lrtt_equiv, lrtt_profile, ltt_equiv,
    ltt_profile, search_params, Mode, UnionVerdict,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Word::from("abbab");
    println!("♯(abbab, bb) = {}", count_factor(&w, &Word::from("bb"))?);
    println!("♯ʳ(abab, ab) = {}", count_factor_rev(&Word::from("abab"), &Word::from("ab"))?);

    for (u, v, k, t) in [("ababab", "abab", 2, 1), ("abab", "abbab", 2, 1), ("ababab", "abab", 2, 2)] {
        println!("{u} ≈[k={k},t={t}] {v}: {}", ltt_equiv(&Word::from(u), &Word::from(v), k, t));
    }
    println!("ab ≈r ba: {}", lrtt_equiv(&Word::from("ab"), &Word::from("ba"), 2, 1));
    println!("aba ≈r baa: {}", lrtt_equiv(&Word::from("aba"), &Word::from("baa"), 2, 1));

    let blocks = Word::from("cccabcccbacccabccc");
    println!("\nlrtt profile of {blocks} at k=3, t=2:");
    print!("{}", lrtt_profile(&blocks, 3, 2));

    // (ab)* is the union of three ≈[2,1] classes
    let ab_star = fixtures::ab_star();
    println!("\n(ab)* union of ≈[2,1] classes: {:?}", is_union_of_classes(&ab_star, 2, 1, Mode::Ltt));
    let mut classes: Vec<(String, Vec<String>)> = Vec::new();
    for w in ab_star.enumerate(8) {
        let key = ltt_profile(&w, 2, 1).to_string();
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, ws)) => ws.push(w.to_string()),
            None => classes.push((key, vec![w.to_string()])),
        }
    }
    for (_, ws) in &classes {
        println!("  class: {}", ws.join(" "));
    }

    let c_a_c_b_c = fixtures::c_a_c_b_c();
    if let UnionVerdict::No(u, v) = is_union_of_classes(&c_a_c_b_c, 2, 2, Mode::Ltt) {
        let (inside, outside) = if c_a_c_b_c.accepts(&u)? { (u, v) } else { (v, u) };
        println!("\nc*ac*bc* is not a union of ≈[2,2] classes: {inside} ∈ L, {outside} ∉ L");
    }

    let aba = fixtures::aba_star_or_a_star_ba();
    println!("aba*+a*ba, least lrtt parameters up to (4,3): {:?}", search_params(&aba, 4, 3, Mode::Lrtt));
    Ok(())
}
