//! Parsing and evaluating sentences, relativizing order to betweenness, and
//! the neighbour-based formula constructions.

use revlang::automata::{Alphabet, Word};
use revlang::fixtures;
use revlang::logic::{
    build_count_formula, build_subword_formula, evaluate, expand_macro, language_of,
    parse_formula, relativize, EvalLimits, MacroKind, RelativizeMode, Valuation,
};

fn show(words: &[Word]) -> String {
    words.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ab = Alphabet::parse("ab")?;
    let even = parse_formula(fixtures::EVEN_LENGTH_NBR)?;
    println!("even-length sentence uses {}", even.signature());
    for w in ["ab", "aba", "abba"] {
        println!("  {w}: {}", evaluate(&Word::from(w), &even, &Valuation::new())?);
    }

    let both = parse_formula(fixtures::BOTH_LETTERS)?;
    let chi = relativize(&both, RelativizeMode::Mso)?;
    println!("\nrelativized (uses {}):\n  {chi}", chi.signature());
    let limits = EvalLimits::default();
    println!("same language up to length 5: {}", language_of(&both, &ab, 5, limits)? == language_of(&chi, &ab, 5, limits)?);

    let first_a = parse_formula(fixtures::FIRST_LETTER_A)?;
    let chi = relativize(&first_a, RelativizeMode::Prenex)?;
    println!("\naA* relativized in prenex mode defines aA* ∪ A*a:");
    println!("  {}", show(&language_of(&chi, &ab, 3, limits)?));

    let sub = build_subword_formula(&Word::from("abc"))?;
    println!("\nsubword abc or cba: {sub}");
    println!("  acbc: {}", evaluate(&Word::from("acbc"), &sub, &Valuation::new())?);

    let twice = build_count_formula(&Word::from("ab"), 2)?;
    println!("\n♯ʳ(w, ab) ≥ 2 up to length 4: {}", show(&language_of(&twice, &ab, 4, limits)?));

    println!("\nN(x,y) from bet: {}", expand_macro(MacroKind::NFromBet));
    Ok(())
}
