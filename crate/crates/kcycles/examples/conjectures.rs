//! Conjectured first-letter formulas for permutations filtered by a
//! Mahonian statistic, checked cell by cell against brute force.
//!
//! ```bash
//! cargo run --example conjectures
//! ```

use kcycles::mahonian::{check_inv_conjecture, check_maj_conjectures};
use kcycles::render::{render_conjecture_reports, OutputFormat, RationalStyle};

fn main() {
    let inv = check_inv_conjecture(7, 10).unwrap();
    println!(
        "inversions: E[pi(1) | inv = j] vs M(n+1,j)/M(n,j) on n > j; {} cells, all equal: {}",
        inv.cells.len(),
        inv.all_equal()
    );

    let maj = check_maj_conjectures(7).unwrap();
    for report in &maj {
        println!(
            "major index {}: {} cells, all equal: {}",
            report.id.label(),
            report.cells.len(),
            report.all_equal()
        );
    }

    println!();
    print!(
        "{}",
        render_conjecture_reports(&maj[..1], OutputFormat::Plain, RationalStyle::Reduced)
    );
    println!("\nthese are conjectures: the grids report findings, they prove nothing");
}
