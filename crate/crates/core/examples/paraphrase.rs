//! Rewrites questions into the controlled-English form the parser accepts.
//!
//! Run with `cargo run --example paraphrase -- "who acted in the films directed by [Steven Spielberg]"`.

use cnlqa::bundled;
use cnlqa::paraphrase::render_tokens;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "who acted in the films directed by [Steven Spielberg]".to_string(),
            "what are the genres of the films starred by [Ben Whishaw]".to_string(),
            "which films share the same actor of [Bright Star]".to_string(),
        ]
    } else {
        args
    };
    let para = bundled::paraphraser();
    for text in inputs {
        match para.paraphrase(&text) {
            Ok(tokens) => println!("{text}\n  => {}", render_tokens(&tokens)),
            Err(e) => println!("{text}\n  !! {e}"),
        }
    }
}
