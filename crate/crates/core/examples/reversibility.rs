//! Reversible languages are not closed under one-sided quotients, but they
//! are closed under bidirectional quotients.

use revlang::automata::{compile, Alphabet, Side, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let abc = Alphabet::parse("abc")?;
    let lang = compile("(abc)*+(cba)*", &abc)?;
    println!("L = (abc)*+(cba)*, {} states, reversible: {}", lang.states(), lang.is_reversible());

    let left = lang.quotient(&Word::from("a"), Side::Left)?;
    let expected = compile("bc(abc)*", &abc)?;
    println!("a⁻¹L = bc(abc)*: {}", left == expected);
    println!("a⁻¹L reversible: {}", left.is_reversible());
    if let revlang::automata::Equivalence::Differ(w) = left.equivalent(&left.reverse())? {
        println!("  shortest word telling a⁻¹L and its reverse apart: {w}");
    }

    let both = lang.bidirectional_quotient(&Word::from("a"), &Word::from("c"))?;
    println!("a⁻¹Lc⁻¹ ∪ c⁻¹La⁻¹ reversible: {}", both.is_reversible());
    let words: Vec<String> = both.enumerate(7).iter().map(ToString::to_string).collect();
    println!("  words up to length 7: {}", words.join(" "));
    Ok(())
}
