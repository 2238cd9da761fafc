//! Learns lvps from an annotation file and prints the store.
//!
//!     cargo run --example learn_lvps                 # bundled annotations
//!     cargo run --example learn_lvps -- my.pl

use cnlqa::bundled;
use cnlqa::learner::{Annotation, LvpStore};

fn main() {
    let annotations = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
            Annotation::parse_file(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
        }
        None => bundled::annotations(),
    };
    let para = bundled::paraphraser();
    let mut store = LvpStore::new();
    for a in &annotations {
        if let Err(e) = store.learn(a, &para) {
            eprintln!("{a}: {e}");
            std::process::exit(1);
        }
    }
    print!("{}", store.to_text());
}
