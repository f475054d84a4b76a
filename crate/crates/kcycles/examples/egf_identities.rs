//! Two sequences, one exponential generating function: the scaled
//! counts C_k(kn,0) k^n / (kn)! and the derangement ratios D(k,n) / n!
//! both expand exp(-x) / (1 - kx).
//!
//! ```bash
//! cargo run --example egf_identities
//! ```

use kcycles::counting::{egf_lhs_cycles, egf_lhs_derangements, egf_target_series};

fn main() {
    let order = 12;
    for k in 2..=5u64 {
        let target = egf_target_series(k, order);
        let cycles = egf_lhs_cycles(k, order);
        let derangements = egf_lhs_derangements(k, order);
        assert_eq!(cycles, target);
        assert_eq!(derangements, target);
        println!(
            "k={k}: all three series agree through x^{order}; first coefficients:"
        );
        let preview: Vec<String> = (0..=4)
            .map(|i| target.coefficient(i).to_string())
            .collect();
        println!("  {}", preview.join(", "));
    }
    println!("\nexact rational arithmetic end to end; no rounding anywhere");
}
