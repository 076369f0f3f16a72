//! Classify every built-in language, or a regex given on the command line:
//! `cargo run --example classify -- abc "(abc)*+(cba)*"`.

use revlang::automata::{compile, Alphabet};
use revlang::classify::{classify, render_report, Format};
use revlang::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let langs = match args.as_slice() {
        [letters, regex] => vec![(regex.clone(), compile(regex, &Alphabet::parse(letters)?)?)],
        _ => fixtures::all().into_iter().map(|(n, d)| (n.to_string(), d)).collect(),
    };
    for (name, dfa) in langs {
        println!("== {name}");
        print!("{}", render_report(&classify(&dfa, 3, 3)?, Format::Text));
        println!();
    }
    Ok(())
}
