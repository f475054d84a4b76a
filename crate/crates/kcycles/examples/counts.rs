//! Exact counts of permutations by their number of k-cycles.
//!
//! ```bash
//! cargo run --example counts
//! ```

use num_bigint::BigInt;

use kcycles::counting;

fn main() {
    println!("C_2(n, m): permutations of S_n with exactly m 2-cycles\n");
    println!("{:>3}  {}", "n", "m = 0, 1, 2, ...");
    for n in 1..=10u64 {
        let row: Vec<String> = (0..=n / 2)
            .map(|m| counting::count_kcycle_perms(n, m, 2).to_string())
            .collect();
        println!("{n:>3}  {}", row.join(" "));
    }

    println!("\nThe inclusion/exclusion sum and the recurrence always agree:");
    for (n, m, k) in [(9u64, 3u64, 2u64), (12, 2, 3), (20, 4, 4)] {
        let closed = counting::count_kcycle_perms(n, m, k);
        let recursive = counting::count_kcycle_perms_recursive(n, m, k);
        assert_eq!(closed, recursive);
        println!("  C_{k}({n},{m}) = {closed}");
    }

    println!("\nC_k(n,m) - n*C_k(n-1,m) vanishes unless k | n:");
    for n in 2..=8u64 {
        let difference = counting::count_difference(n, 1, 2);
        println!("  n={n}: {difference}");
    }

    let total: BigInt = (0..=5).map(|m| counting::count_kcycle_perms(10, m, 2)).sum();
    println!("\nrow n=10 sums to 10! = {total}");
}
