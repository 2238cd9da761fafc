//! Prints how many bundled lvps extract each pair of frame roles.
//!
//! Run with `cargo run --example lvp_stats`.

use cnlqa::bundled;
use cnlqa::cli::{lvp_stats, render_stats};

fn main() {
    let rows = lvp_stats(&bundled::lvps(), &bundled::ontology());
    print!("{}", render_stats(&rows));
}
