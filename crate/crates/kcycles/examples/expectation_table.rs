//! The expected-first-letter table: E[pi(1)] over permutations of S_n
//! with exactly m k-cycles, every entry an exact rational.
//!
//! ```bash
//! cargo run --example expectation_table
//! ```

use kcycles::expectation::expectation_table;
use kcycles::render::{render_expectation_table, OutputFormat, RationalStyle};

fn main() {
    let table = expectation_table(2, 13).unwrap();
    println!("k = 2, n up to 13 (blank cells: no permutation has that many 2-cycles)\n");
    print!(
        "{}",
        render_expectation_table(&table, OutputFormat::Plain, RationalStyle::Figure1)
    );

    println!("\nodd rows are constant at (n+1)/2; even rows drift by 1/(2*D(2, n/2 - m)):");
    for (n, m) in [(4u64, 0u64), (6, 0), (8, 0), (12, 3)] {
        println!(
            "  E[pi(1) | S_{n}, {m} two-cycles] = {}",
            table.cell(n, m).unwrap()
        );
    }

    let k3 = expectation_table(3, 9).unwrap();
    println!("\nsame table for k = 3, markdown:");
    print!(
        "{}",
        render_expectation_table(&k3, OutputFormat::Markdown, RationalStyle::Reduced)
    );
}
