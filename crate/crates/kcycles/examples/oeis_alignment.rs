//! Align the k = 2 expectation-table denominators with OEIS A000354
//! (type B derangement numbers) from the vendored b-file cache.
//!
//! ```bash
//! cargo run --example oeis_alignment
//! ```

use std::path::PathBuf;

use kcycles::oeis::{align_prefix, expectation_denominators, OeisClient};

fn main() {
    let cache: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", "oeis"].iter().collect();
    let client = OeisClient::new(cache, true);
    let sequence = client.fetch("A000354").unwrap();
    println!("{}: {} cached terms", sequence.id, sequence.terms.len());

    let denominators = expectation_denominators(2, 12).unwrap();
    let rendered: Vec<String> = denominators.iter().map(|d| d.to_string()).collect();
    println!("table denominators at m=0, even rows n <= 12: {}", rendered.join(", "));

    let alignment = align_prefix(&denominators, &sequence.terms);
    println!(
        "matched prefix: {} of {} terms at b-file offset {}",
        alignment.matched, alignment.total, alignment.offset
    );
}
