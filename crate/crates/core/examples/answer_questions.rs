//! Answers the fixture questions against the fixture fact base and reports
//! how many match their labels.
//!
//! Run with `cargo run --example answer_questions [-- --verbose]`.

use cnlqa::bundled;

fn main() {
    let verbose = std::env::args().any(|a| a == "--verbose");
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let rules = bundled::rules(&pipeline);
    let (mut right, mut total) = (0, 0);
    for line in bundled::FIXTURE_QUESTIONS.lines().filter(|l| !l.trim().is_empty()) {
        let (question, label) = line.split_once('\t').unwrap_or((line, ""));
        total += 1;
        let got = match pipeline.answer(question, &kb, &rules) {
            Ok(a) => a.joined(),
            Err(e) => format!("ERROR:{} ({e})", e.kind()),
        };
        let ok = got == label;
        right += ok as usize;
        if verbose || !ok {
            println!("{} {question}\n    got:   {got}\n    label: {label}", if ok { "ok  " } else { "MISS" });
            if !ok {
                if let Ok(q) = pipeline.query(question) {
                    println!("{q}");
                }
            }
        }
    }
    println!("{right}/{total} answers match their labels");
}
