//! Groups the fixture questions by query template.
//!
//! Run with `cargo run --example templates`.

use cnlqa::bundled;
use cnlqa::cli::{group_by_template, parse_questions};

fn main() {
    let pipeline = bundled::pipeline().with_kb(&bundled::fixture_kb());
    let groups = group_by_template(&parse_questions(bundled::FIXTURE_QUESTIONS), &pipeline);
    print!("{}", groups.render());
}
