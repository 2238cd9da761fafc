//! Normalizes a sentence and prints its DRS in the textual notation.
//!
//!     cargo run --example parse_drs -- "an actor appears in a film"

use cnlqa::bundled;
use cnlqa::drs::parse_cnl;
use cnlqa::paraphrase::render_tokens;

fn main() {
    let sentence = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "a director directs a film".to_string());
    let para = bundled::paraphraser();
    let tokens = match para.paraphrase(&sentence) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("{}", render_tokens(&tokens));
    for t in &tokens {
        print!("{}:{}/{} ", t.index, t.surface, t.pos.as_str());
    }
    println!("\n");
    match parse_cnl(&tokens) {
        Ok(drs) => print!("{}", drs.render()),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
