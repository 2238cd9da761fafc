//! Shows the candidate parses of a sentence, the ones that survive
//! role-filler disambiguation against the fixture entities, and the
//! resulting query.
//!
//! Run with `cargo run --example frame_parse -- "who is an actor of [Pascal Laugier]"`.

use cnlqa::bundled;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "who wrote a film that shares a director with [Titanic]".into());
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let analysis = match pipeline.analyze(&text) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("candidate parses:");
    for p in &analysis.parses {
        println!("  {p}");
    }
    println!("after disambiguation:");
    for p in pipeline.valid_parses(&analysis) {
        println!("  {p}");
    }
    match pipeline.query_of(&analysis) {
        Ok(q) => println!("query:\n{q}"),
        Err(e) => println!("no query: {e}"),
    }
}
