//! Derangements of the generalized symmetric group S(k,n), the wreath
//! product (Z/kZ) wr S_n: elements with no index both fixed by the
//! permutation and given a zero shift.
//!
//! ```bash
//! cargo run --example derangements
//! ```

use kcycles::counting::{derangements_gsg, gsg_fixed_point_count};
use kcycles::gsg::enumerate_gsg;
use kcycles::oracle::brute_gsg_counts;

fn main() {
    // The 8 symmetries of a square are S(2,2); 5 of them move every side.
    println!("S(2,2), the symmetries of a square:");
    for element in enumerate_gsg(2, 2).unwrap() {
        let word: Vec<String> = (1..=2)
            .map(|i| element.perm().letter_at(i).unwrap().to_string())
            .collect();
        println!(
            "  shifts {:?}, permutation {}, fixed sides {:?}{}",
            element.shifts(),
            word.join(""),
            element.fixed_points(),
            if element.is_derangement() {
                "  <- derangement"
            } else {
                ""
            }
        );
    }

    println!("\nD(2,n) for n = 1..=8:");
    let values: Vec<String> = (1..=8).map(|n| derangements_gsg(2, n).to_string()).collect();
    println!("  {}", values.join(", "));

    println!("\nfixed-point histogram of S(3,3), enumerated vs binom(n,m)*D(k,n-m):");
    let histogram = brute_gsg_counts(3, 3).unwrap();
    for (m, count) in &histogram {
        let formula = gsg_fixed_point_count(3, 3, *m);
        assert_eq!(count, &formula);
        println!("  m={m}: {count}");
    }
}
