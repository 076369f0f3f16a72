//! Syntactic monoids, the reversal involution, and the identity checks.

use revlang::fixtures;
use revlang::involution::{
    check_involution_identity, check_ltt_identity, idempotents, involution_from_reverse,
    is_aperiodic, syntactic_monoid, syntactic_semigroup,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = syntactic_monoid(&fixtures::ab_star())?;
    println!("M((ab)*) has {} elements:", s.size());
    for (i, w) in s.witnesses.iter().enumerate() {
        println!("  {i}: {w}{}", if s.accepting[i] { "  (in P)" } else { "" });
    }
    let names: Vec<String> = idempotents(&s.monoid).iter().map(|&e| s.witnesses[e].to_string()).collect();
    println!("idempotents: {}", names.join(", "));
    println!("aperiodic: {}", is_aperiodic(&s.monoid).holds());
    println!("ltt identity: {:?}", check_ltt_identity(&syntactic_semigroup(&s)));

    let even = syntactic_monoid(&fixtures::even_length())?;
    println!("\nM(even length) has {} elements, aperiodic: {}", even.size(), is_aperiodic(&even.monoid).holds());

    let rev = syntactic_monoid(&fixtures::abc_or_cba())?;
    let star = involution_from_reverse(&rev)?;
    println!("\nM((abc)*+(cba)*): {} elements, involution:", rev.size());
    for (i, w) in rev.witnesses.iter().enumerate() {
        println!("  [{w}]* = [{}]", rev.witnesses[star.star(i)]);
    }
    let semi = syntactic_semigroup(&rev);
    println!("e x e* = e x* e*: {:?}", check_involution_identity(&semi, &star.restrict(&semi)?));

    match involution_from_reverse(&syntactic_monoid(&fixtures::bc_abc_star())?) {
        Ok(_) => println!("unexpected involution on bc(abc)*"),
        Err(e) => println!("\nbc(abc)*: {e}"),
    }
    Ok(())
}
