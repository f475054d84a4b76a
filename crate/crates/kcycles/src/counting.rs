//! Exact closed-form and recursive counts.
//!
//! Everything here is computed in arbitrary precision. Formulas with
//! internal divisions are evaluated over rationals and asserted integral
//! at the end, so a transcription mistake surfaces as a loud panic
//! instead of a silently wrong count.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn power(base: u64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

fn sign(parity: u64) -> BigInt {
    if parity % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn ratio(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Collapse a rational that must be an integer. Panics otherwise: a
/// non-integral value here means a formula was transcribed wrong.
fn exact_integer(q: BigRational) -> BigInt {
    assert!(
        q.is_integer(),
        "internal invariant violation: expected an integer, got {q}"
    );
    q.to_integer()
}

static C_CACHE: LazyLock<Mutex<HashMap<(u64, u64, u64), BigInt>>> =
    LazyLock::new(Default::default);
static D_CACHE: LazyLock<Mutex<HashMap<(u64, u64), BigInt>>> = LazyLock::new(Default::default);
static M_CACHE: LazyLock<Mutex<HashMap<u64, Vec<BigInt>>>> = LazyLock::new(Default::default);

/// Number of permutations of `S_n` with exactly `m` cycles of length `k`,
/// by inclusion/exclusion:
/// `C_k(n,m) = (n! / (m! k^m)) * sum_{i=0}^{floor(n/k)-m} (-1)^i / (i! k^i)`.
///
/// Returns zero when `n < m*k`. Valid for all `k >= 1`.
pub fn count_kcycle_perms(n: u64, m: u64, k: u64) -> BigInt {
    assert!(k >= 1, "k must be at least 1");
    if let Some(hit) = C_CACHE.lock().unwrap().get(&(n, m, k)) {
        return hit.clone();
    }
    let value = (|| {
        if n / k < m {
            return BigInt::zero();
        }
        let mut sum = BigRational::zero();
        for i in 0..=(n / k - m) {
            sum += BigRational::new(sign(i), factorial(i) * power(k, i));
        }
        let prefactor = BigRational::new(factorial(n), factorial(m) * power(k, m));
        exact_integer(prefactor * sum)
    })();
    C_CACHE
        .lock()
        .unwrap()
        .insert((n, m, k), value.clone());
    value
}

/// Same count through the recurrence
/// `m * C_k(n,m) = (k-1)! * binom(n,k) * C_k(n-k, m-1)`,
/// unrolled down to the closed form at `m = 0`. Requires `m >= 1`.
pub fn count_kcycle_perms_recursive(n: u64, m: u64, k: u64) -> BigInt {
    assert!(k >= 1 && m >= 1, "recurrence needs k >= 1 and m >= 1");
    if n < m * k {
        return BigInt::zero();
    }
    let previous = if m == 1 {
        count_kcycle_perms(n - k, 0, k)
    } else {
        count_kcycle_perms_recursive(n - k, m - 1, k)
    };
    let numerator = factorial(k - 1) * binomial(n, k) * previous;
    exact_integer(BigRational::new(numerator, BigInt::from(m)))
}

/// The difference `C_k(n,m) - n*C_k(n-1,m)` in closed form: zero when
/// `k` does not divide `n`, and otherwise
/// `n! (-1)^(n/k - m) / ((n/k)! k^(n/k)) * binom(n/k, m)`.
pub fn count_difference(n: u64, m: u64, k: u64) -> BigInt {
    assert!(n >= 1 && k >= 1);
    if n % k != 0 {
        return BigInt::zero();
    }
    let quotient = n / k;
    if m > quotient {
        return BigInt::zero();
    }
    let numerator = factorial(n) * binomial(quotient, m) * sign(quotient - m);
    exact_integer(BigRational::new(
        numerator,
        factorial(quotient) * power(k, quotient),
    ))
}

/// Number of permutations of `S_n` with `m` k-cycles and first letter `a`:
/// `C_k(n-1, m)` when `a = 1`, and `(C_k(n,m) - C_k(n-1,m)) / (n-1)`
/// for every `a >= 2`. The underlying relabeling argument needs `k > 1`.
pub fn count_with_first_letter(n: u64, m: u64, k: u64, a: u64) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::Unsupported(
            "first-letter counts need k >= 2 (deleting 1 does not preserve fixed points)".into(),
        ));
    }
    if a < 1 || a > n {
        return Err(Error::Domain(format!("first letter {a} not in 1..={n}")));
    }
    if a == 1 {
        return Ok(count_kcycle_perms(n - 1, m, k));
    }
    let difference = count_kcycle_perms(n, m, k) - count_kcycle_perms(n - 1, m, k);
    Ok(exact_integer(BigRational::new(
        difference,
        BigInt::from(n - 1),
    )))
}

/// Number of derangements of the generalized symmetric group `S(k,n)`:
/// `D(k,n) = k^n n! sum_{i=0}^n (-1)^i / (k^i i!)`.
///
/// `k = 1` degenerates to the classical derangement numbers.
pub fn derangements_gsg(k: u64, n: u64) -> BigInt {
    assert!(k >= 1, "k must be at least 1");
    if let Some(hit) = D_CACHE.lock().unwrap().get(&(k, n)) {
        return hit.clone();
    }
    let mut sum = BigRational::zero();
    for i in 0..=n {
        sum += BigRational::new(sign(i), factorial(i) * power(k, i));
    }
    let value = exact_integer(ratio(power(k, n) * factorial(n)) * sum);
    D_CACHE.lock().unwrap().insert((k, n), value.clone());
    value
}

/// Number of elements of `S(k,n)` with exactly `m` fixed points:
/// `F_k(n,m) = binom(n,m) * D(k, n-m)`. Zero when `m > n`.
pub fn gsg_fixed_point_count(k: u64, n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    binomial(n, m) * derangements_gsg(k, n - m)
}

/// Number of permutations of `S_n` with inversion number `j`: the
/// coefficient of `q^j` in the q-factorial `[n]_q!`. Zero when
/// `j > n(n-1)/2`.
pub fn mahonian_count(n: u64, j: u64) -> BigInt {
    mahonian_row(n)
        .get(j as usize)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// All coefficients of `[n]_q! = prod_{i=0}^{n-1} (1 + q + ... + q^i)`.
pub fn mahonian_row(n: u64) -> Vec<BigInt> {
    if let Some(hit) = M_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut poly = vec![BigInt::one()];
    for i in 1..n {
        // Multiply by 1 + q + ... + q^i.
        let mut next = vec![BigInt::zero(); poly.len() + i as usize];
        for (d, coefficient) in poly.iter().enumerate() {
            for t in 0..=i as usize {
                next[d + t] += coefficient;
            }
        }
        poly = next;
    }
    M_CACHE.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Coefficients of `exp(-x) / (1 - kx)` through the given order.
pub fn egf_target_series(k: u64, order: usize) -> PowerSeries {
    assert!(k >= 2);
    let exp_neg = PowerSeries::from_fn(order, |j| {
        BigRational::new(sign(j as u64), factorial(j as u64))
    });
    let geometric = PowerSeries::from_fn(order, |j| ratio(power(k, j as u64)));
    exp_neg.mul(&geometric)
}

/// The series whose coefficient of `x^n` is `C_k(kn, 0) k^n / (kn)!`.
pub fn egf_lhs_cycles(k: u64, order: usize) -> PowerSeries {
    assert!(k >= 2);
    PowerSeries::from_fn(order, |n| {
        let n = n as u64;
        BigRational::new(
            count_kcycle_perms(k * n, 0, k) * power(k, n),
            factorial(k * n),
        )
    })
}

/// The exponential generating function of `D(k,n)`: coefficient of
/// `x^n` is `D(k,n) / n!`.
pub fn egf_lhs_derangements(k: u64, order: usize) -> PowerSeries {
    assert!(k >= 2);
    PowerSeries::from_fn(order, |n| {
        let n = n as u64;
        BigRational::new(derangements_gsg(k, n), factorial(n))
    })
}

/// Checks `C_k(k(n+m), m) = binom(kn+km, kn) * C_k(kn, 0) * (km)! / (k^m m!)`
/// exactly.
pub fn c_identity_check(k: u64, n: u64, m: u64) -> bool {
    assert!(k >= 1);
    let lhs = ratio(count_kcycle_perms(k * (n + m), m, k));
    let rhs = ratio(binomial(k * n + k * m, k * n) * count_kcycle_perms(k * n, 0, k))
        * BigRational::new(factorial(k * m), power(k, m) * factorial(m));
    lhs == rhs
}

/// Checks `C_k(kn, m) / (kn)! = binom(n,m) * D(k, n-m) / (k^n n!)` exactly:
/// the proportion of `S_kn` with `m` k-cycles equals the proportion of
/// `S(k,n)` with `m` fixed points.
pub fn fixed_points_cycles_identity_check(k: u64, n: u64, m: u64) -> bool {
    assert!(k >= 2 && m <= n);
    let lhs = BigRational::new(count_kcycle_perms(k * n, m, k), factorial(k * n));
    let rhs = BigRational::new(
        binomial(n, m) * derangements_gsg(k, n - m),
        power(k, n) * factorial(n),
    );
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(int(n), int(d))
    }

    #[test]
    fn goncharov_matches_the_s4_row() {
        assert_eq!(count_kcycle_perms(4, 0, 2), int(15));
        assert_eq!(count_kcycle_perms(4, 1, 2), int(6));
        assert_eq!(count_kcycle_perms(4, 2, 2), int(3));
        assert_eq!(count_kcycle_perms(5, 3, 2), int(0));
        assert_eq!(count_kcycle_perms(3, 1, 3), int(2));
        assert_eq!(count_kcycle_perms(0, 0, 2), int(1));
    }

    #[test]
    fn counts_partition_the_symmetric_group() {
        for n in 1..=9u64 {
            for k in 1..=n {
                let total: BigInt = (0..=n / k).map(|m| count_kcycle_perms(n, m, k)).sum();
                assert_eq!(total, factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn recurrence_agrees_with_closed_form() {
        assert_eq!(count_kcycle_perms_recursive(4, 1, 2), int(6));
        assert_eq!(count_kcycle_perms_recursive(4, 2, 2), int(3));
        assert_eq!(count_kcycle_perms_recursive(2, 1, 3), int(0));
        for n in 1..=30u64 {
            for k in 1..=6 {
                for m in 1..=(n / k + 1) {
                    assert_eq!(
                        count_kcycle_perms_recursive(n, m, k),
                        count_kcycle_perms(n, m, k),
                        "n={n} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn difference_closed_form() {
        assert_eq!(count_difference(5, 1, 2), int(0));
        assert_eq!(count_difference(4, 0, 2), int(3));
        // 6 - 4*C_2(3,1) = 6 - 12.
        assert_eq!(count_difference(4, 1, 2), int(-6));
        for n in 1..=30u64 {
            for k in 2..=5 {
                for m in 0..=(n / k + 1) {
                    let direct =
                        count_kcycle_perms(n, m, k) - count_kcycle_perms(n - 1, m, k) * n;
                    assert_eq!(count_difference(n, m, k), direct, "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn first_letter_counts() {
        assert_eq!(count_with_first_letter(4, 0, 2, 1).unwrap(), int(3));
        assert_eq!(count_with_first_letter(4, 0, 2, 3).unwrap(), int(4));
        assert_eq!(count_with_first_letter(4, 2, 2, 1).unwrap(), int(0));
        assert!(count_with_first_letter(4, 0, 1, 1).is_err());
        assert!(count_with_first_letter(4, 0, 2, 5).is_err());
    }

    #[test]
    fn first_letter_counts_decompose_the_total() {
        // C^(1) + (n-1) C^(a) = C for any a >= 2.
        for n in 2..=20u64 {
            for k in 2..=4 {
                for m in 0..=n / k {
                    let with_one = count_with_first_letter(n, m, k, 1).unwrap();
                    let with_a = count_with_first_letter(n, m, k, 2).unwrap();
                    assert_eq!(
                        with_one + with_a * (n - 1),
                        count_kcycle_perms(n, m, k),
                        "n={n} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn derangement_numbers() {
        let expected = [1i64, 5, 29, 233, 2329, 27949];
        for (i, &value) in expected.iter().enumerate() {
            assert_eq!(derangements_gsg(2, i as u64 + 1), int(value));
        }
        assert_eq!(derangements_gsg(2, 0), int(1));
        assert_eq!(derangements_gsg(1, 3), int(2));
    }

    #[test]
    fn gsg_fixed_point_counts() {
        assert_eq!(gsg_fixed_point_count(2, 2, 0), int(5));
        assert_eq!(gsg_fixed_point_count(2, 2, 1), int(2));
        assert_eq!(gsg_fixed_point_count(2, 2, 2), int(1));
        assert_eq!(gsg_fixed_point_count(2, 2, 3), int(0));
        for k in 1..=4u64 {
            for n in 0..=6 {
                let total: BigInt = (0..=n).map(|m| gsg_fixed_point_count(k, n, m)).sum();
                assert_eq!(total, power(k, n) * factorial(n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn mahonian_counts() {
        assert_eq!(mahonian_count(3, 0), int(1));
        assert_eq!(mahonian_count(3, 1), int(2));
        assert_eq!(mahonian_count(4, 2), int(5));
        assert_eq!(mahonian_count(3, 4), int(0));
        for n in 0..=9u64 {
            let row = mahonian_row(n);
            let total: BigInt = row.iter().sum();
            assert_eq!(total, factorial(n), "n={n}");
            let top = n * n.saturating_sub(1) / 2;
            assert_eq!(row.len() as u64, top + 1);
            for j in 0..=top {
                assert_eq!(
                    mahonian_count(n, j),
                    mahonian_count(n, top - j),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn egf_target_coefficients() {
        let series = egf_target_series(2, 4);
        assert_eq!(series.coefficient(0), &q(1, 1));
        assert_eq!(series.coefficient(1), &q(1, 1));
        assert_eq!(series.coefficient(2), &q(5, 2));
    }

    #[test]
    fn egf_lhs_coefficients() {
        let cycles = egf_lhs_cycles(2, 4);
        assert_eq!(cycles.coefficient(0), &q(1, 1));
        assert_eq!(cycles.coefficient(2), &q(5, 2));
        assert_eq!(egf_lhs_cycles(3, 2).coefficient(1), &q(2, 1));

        let derangements = egf_lhs_derangements(2, 4);
        assert_eq!(derangements.coefficient(0), &q(1, 1));
        assert_eq!(derangements.coefficient(2), &q(5, 2));
        assert_eq!(derangements.coefficient(3), &q(29, 6));
    }

    #[test]
    fn egf_identity_holds_coefficientwise() {
        for k in 2..=5 {
            let target = egf_target_series(k, 12);
            assert_eq!(egf_lhs_cycles(k, 12), target, "cycles, k={k}");
            assert_eq!(egf_lhs_derangements(k, 12), target, "derangements, k={k}");
        }
    }

    #[test]
    fn cycle_count_identity() {
        assert!(c_identity_check(2, 1, 1));
        assert!(c_identity_check(2, 0, 2));
        assert!(c_identity_check(3, 1, 1));
        for k in 1..=4u64 {
            for n in 0..=4 {
                for m in 0..=4 {
                    assert!(c_identity_check(k, n, m), "k={k} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn fixed_points_and_cycles_proportions() {
        assert!(fixed_points_cycles_identity_check(2, 2, 0));
        assert!(fixed_points_cycles_identity_check(2, 2, 2));
        assert!(fixed_points_cycles_identity_check(3, 2, 1));
        for k in 2..=4u64 {
            for n in 0..=4 {
                for m in 0..=n {
                    assert!(fixed_points_cycles_identity_check(k, n, m), "k={k} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "internal invariant violation")]
    fn non_integral_results_panic() {
        exact_integer(q(7, 2));
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, 7), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(6, 3), int(20));
    }
}
