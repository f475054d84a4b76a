//! The full brute-force verification battery: every closed form in the
//! crate checked against exhaustive enumeration at desk scale.
//!
//! ```bash
//! cargo run --release --example verify_all
//! ```

use kcycles::oracle::{verify_all, VerifyBudget};

fn main() {
    let report = verify_all(&VerifyBudget::default());
    print!("{}", report.render_text());
    std::process::exit(if report.all_passed() { 0 } else { 2 });
}
