//! Audits the fixture corpus with ten deliberately wrong labels and
//! compares the findings with the list of corruptions.
//!
//! Run with `cargo run --example audit_labels`.

use cnlqa::bundled;
use cnlqa::cli::{audit, parse_questions};

fn main() {
    let kb = bundled::fixture_kb();
    let pipeline = bundled::pipeline().with_kb(&kb);
    let rules = bundled::rules(&pipeline);
    let report = audit(&parse_questions(bundled::FIXTURE_CORRUPTED), &pipeline, &kb, &rules);
    for r in report.mislabeled() {
        let planted = bundled::FIXTURE_CORRUPTIONS
            .lines()
            .filter_map(|l| l.split_once('\t'))
            .find(|(line, _)| line.parse() == Ok(r.line))
            .map_or("not planted", |(_, cause)| cause);
        println!(
            "line {:>3}  found {:<15} planted {:<15} {}",
            r.line,
            r.cause.map_or("-", |c| c.as_str()),
            planted,
            r.question
        );
        println!("          label:    {}\n          computed: {}", r.expected.joined(), r.computed.joined());
    }
    for line in report.render().lines().filter(|l| l.starts_with('#')) {
        println!("{line}");
    }
}
