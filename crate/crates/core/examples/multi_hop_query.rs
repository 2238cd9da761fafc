//! Builds the query for a multi-hop question, prints it with the
//! background rules it relies on, and evaluates it over the fixture fact
//! base.
//!
//! Run with `cargo run --example multi_hop_query -- "who starred with [Bill Murray]"`.

use std::collections::BTreeSet;

use cnlqa::bundled;
use cnlqa::engine::evaluate;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "who wrote a film that shares a director with [Titanic]".into());
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let rules = bundled::rules(&pipeline);
    let query = match pipeline.query(&text) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("{}: {e}", e.kind());
            std::process::exit(1);
        }
    };
    println!("{query}\n");
    for atom in query.atoms() {
        let roles: BTreeSet<&str> = atom.bindings.iter().map(|(r, _)| r.as_str()).collect();
        for rule in rules.iter().filter(|r| r.head.relation == atom.relation && r.head_roles() == roles) {
            println!("{rule}\n");
        }
    }
    match evaluate(&query, &kb, &rules) {
        Ok(answers) => {
            for v in &answers.values {
                println!("{v}");
            }
        }
        Err(e) => eprintln!("{e}"),
    }
}
