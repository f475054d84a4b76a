//! Exact expected values of letters of permutations with a prescribed
//! number of k-cycles.
//!
//! Two independent formulas are implemented. The ratio form works for
//! any `n`:
//!
//! ```text
//! E[pi(1)] = (n/2) * (1 - C_k(n-1,m) / C_k(n,m)) + 1
//! ```
//!
//! and the derangement form works on `S_kn`:
//!
//! ```text
//! E[pi(1)] = (kn+1)/2 + (-1)^(n-m) / (2 * D(k, n-m))
//! ```
//!
//! They are cross-asserted whenever both apply; neither delegates to
//! the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::{count_kcycle_perms, derangements_gsg};
use crate::error::{Error, Result};

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(int(n), int(d))
}

fn parity_sign(p: u64) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Expected first letter of a uniformly random permutation of `S_n`
/// with exactly `m` k-cycles, via the count ratio.
pub fn expected_first_letter(n: u64, m: u64, k: u64) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Unsupported(
            "first-letter expectations need k >= 2".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let total = count_kcycle_perms(n, m, k);
    if total.is_zero() {
        return Err(Error::EmptyPopulation(format!(
            "no permutation of S_{n} has exactly {m} {k}-cycles"
        )));
    }
    let shrunk = count_kcycle_perms(n - 1, m, k);
    let fraction = BigRational::new(shrunk, total);
    Ok(ratio(n, 2) * (BigRational::one() - fraction) + BigRational::one())
}

/// Expected first letter over `S_kn`, in the derangement form. `n` here
/// is the group index: the ambient symmetric group is `S_kn`.
pub fn expected_first_letter_derangement_form(n: u64, m: u64, k: u64) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Unsupported(
            "the derangement form needs k >= 2".into(),
        ));
    }
    if m > n {
        return Err(Error::EmptyPopulation(format!(
            "S_{} cannot contain {m} {k}-cycles",
            k * n
        )));
    }
    let correction = BigRational::new(parity_sign(n - m), derangements_gsg(k, n - m) * 2);
    Ok(ratio(k * n + 1, 2) + correction)
}

/// Expected value of the i-th letter of a permutation of `S_kn` with
/// exactly `m` k-cycles.
pub fn expected_letter_at(n: u64, m: u64, k: u64, i: u64) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Unsupported("letter expectations need k >= 2".into()));
    }
    if i < 1 || i > k * n {
        return Err(Error::Domain(format!(
            "position {i} is outside 1..={}",
            k * n
        )));
    }
    if m > n {
        return Err(Error::EmptyPopulation(format!(
            "S_{} cannot contain {m} {k}-cycles",
            k * n
        )));
    }
    let kn = k * n;
    let correction = BigRational::new(parity_sign(n - m), derangements_gsg(k, n - m) * 2);
    // Affine in i: equals the first-letter value at i = 1 and the
    // uniform mean (kn+1)/2 at the midpoint i = (kn+1)/2.
    let slope = BigRational::new(
        BigInt::from(kn as i64 + 1 - 2 * i as i64),
        BigInt::from(kn - 1),
    );
    Ok(ratio(kn + 1, 2) + correction * slope)
}

/// One row of the expectation table: `n` and the populated `(m, value)`
/// cells in ascending `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub cells: Vec<(u64, BigRational)>,
}

/// The expected-first-letter table: rows `1..=n_max`, one populated
/// cell per `(n, m)` with a nonempty population.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationTable {
    pub k: u64,
    pub rows: Vec<TableRow>,
}

impl ExpectationTable {
    pub fn max_m(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.cells.iter().map(|(m, _)| *m))
            .max()
            .unwrap_or(0)
    }

    pub fn cell(&self, n: u64, m: u64) -> Option<&BigRational> {
        self.rows
            .iter()
            .find(|r| r.n == n)?
            .cells
            .iter()
            .find(|(cm, _)| *cm == m)
            .map(|(_, v)| v)
    }
}

/// Fill the table for rows `1..=n_max`. Every cell comes from the ratio
/// form; cells in rows with `k | n` are additionally recomputed through
/// the derangement form and the two must agree exactly.
pub fn expectation_table(k: u64, n_max: u64) -> Result<ExpectationTable> {
    if k < 2 {
        return Err(Error::Unsupported("the table needs k >= 2".into()));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut cells = Vec::new();
        for m in 0..=n / k {
            if count_kcycle_perms(n, m, k).is_zero() {
                continue;
            }
            let value = expected_first_letter(n, m, k)?;
            if n % k == 0 {
                let cross = expected_first_letter_derangement_form(n / k, m, k)?;
                assert_eq!(
                    value, cross,
                    "internal invariant violation: the two expectation formulas disagree \
                     at n={n} m={m} k={k}"
                );
            }
            cells.push((m, value));
        }
        rows.push(TableRow { n, cells });
    }
    Ok(ExpectationTable { k, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ratio_form_examples() {
        assert_eq!(expected_first_letter(4, 0, 2).unwrap(), q(13, 5));
        assert_eq!(expected_first_letter(4, 1, 2).unwrap(), q(2, 1));
        assert_eq!(expected_first_letter(12, 3, 2).unwrap(), q(188, 29));
        assert_eq!(expected_first_letter(5, 1, 2).unwrap(), q(3, 1));
    }

    #[test]
    fn ratio_form_errors() {
        assert!(matches!(
            expected_first_letter(4, 0, 1),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            expected_first_letter(5, 3, 2),
            Err(Error::EmptyPopulation(_))
        ));
    }

    #[test]
    fn derangement_form_examples() {
        assert_eq!(
            expected_first_letter_derangement_form(2, 0, 2).unwrap(),
            q(13, 5)
        );
        assert_eq!(
            expected_first_letter_derangement_form(3, 0, 2).unwrap(),
            q(101, 29)
        );
        // m = n: D(k,0) = 1 and the sign is positive.
        for k in 2..=4u64 {
            for n in 0..=4 {
                assert_eq!(
                    expected_first_letter_derangement_form(n, n, k).unwrap(),
                    ratio(k * n + 1, 2) + q(1, 2)
                );
            }
        }
        assert!(matches!(
            expected_first_letter_derangement_form(2, 3, 2),
            Err(Error::EmptyPopulation(_))
        ));
    }

    #[test]
    fn the_two_formulas_agree_on_s_kn() {
        for k in 2..=4u64 {
            for n in 1..=4 {
                for m in 0..=n {
                    assert_eq!(
                        expected_first_letter(k * n, m, k).unwrap(),
                        expected_first_letter_derangement_form(n, m, k).unwrap(),
                        "k={k} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn letter_positions_interpolate() {
        // i = 1 reduces to the first-letter form.
        for k in 2..=4u64 {
            for n in 1..=3 {
                for m in 0..=n {
                    assert_eq!(
                        expected_letter_at(n, m, k, 1).unwrap(),
                        expected_first_letter_derangement_form(n, m, k).unwrap()
                    );
                }
            }
        }
        assert_eq!(expected_letter_at(2, 0, 2, 4).unwrap(), q(12, 5));
    }

    #[test]
    fn letter_positions_sum_to_the_total() {
        for (k, n) in [(2u64, 1u64), (2, 2), (2, 3), (2, 6), (3, 2), (3, 4), (4, 3)] {
            let kn = k * n;
            for m in 0..=n {
                let total: BigRational = (1..=kn)
                    .map(|i| expected_letter_at(n, m, k, i).unwrap())
                    .sum();
                assert_eq!(total, ratio(kn * (kn + 1), 2), "k={k} n={n} m={m}");
            }
        }
    }

    #[test]
    fn midpoint_position_is_unbiased() {
        // For odd kn the middle position always has the uniform mean.
        for (k, n) in [(3u64, 1u64), (3, 3), (5, 1)] {
            let kn = k * n;
            for m in 0..=n {
                assert_eq!(
                    expected_letter_at(n, m, k, (kn + 1) / 2).unwrap(),
                    ratio(kn + 1, 2)
                );
            }
        }
    }

    #[test]
    fn letter_position_bounds() {
        assert!(matches!(
            expected_letter_at(2, 0, 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            expected_letter_at(2, 0, 2, 5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn deviation_is_small_with_alternating_sign() {
        // |E - (kn+1)/2| = 1/(2 D(k, n-m)) <= 1/2, with equality exactly
        // when D(k, n-m) = 1: at m = n always, and at m = n-1 for k = 2
        // (one mirrored letter cannot stay put alone, so D(2,1) = 1).
        let half = q(1, 2);
        for k in 2..=4u64 {
            for n in 1..=5 {
                for m in 0..=n {
                    let center = ratio(k * n + 1, 2);
                    let value = expected_first_letter_derangement_form(n, m, k).unwrap();
                    let deviation = value - center;
                    assert!(deviation.abs() <= half);
                    let extremal = m == n || (k == 2 && m + 1 == n);
                    assert_eq!(deviation.abs() == half, extremal, "k={k} n={n} m={m}");
                    assert_eq!(deviation.is_positive(), (n - m) % 2 == 0);
                }
            }
        }
    }

    #[test]
    fn table_shape_and_spot_values() {
        let table = expectation_table(2, 13).unwrap();
        assert_eq!(table.rows.len(), 13);
        for row in &table.rows {
            assert_eq!(row.cells.len() as u64, row.n / 2 + 1);
        }
        // An odd row is constant at (n+1)/2.
        for (m, value) in &table.rows[8].cells {
            assert_eq!(value, &q(5, 1), "row 9, m={m}");
        }
        assert_eq!(table.cell(12, 0).unwrap(), &q(181669, 27949));
        assert_eq!(table.cell(1, 0).unwrap(), &q(1, 1));
        assert_eq!(table.cell(12, 7), None);
    }

    #[test]
    fn table_for_k3_matches_brute_counts() {
        let table = expectation_table(3, 9).unwrap();
        assert_eq!(table.cell(3, 0).unwrap(), &q(7, 4));
        // The two permutations of S_3 with one 3-cycle are 231 and 312,
        // whose first letters average 5/2.
        assert_eq!(table.cell(3, 1).unwrap(), &q(5, 2));
        for row in &table.rows {
            if row.n % 3 != 0 {
                for (m, value) in &row.cells {
                    assert_eq!(value, &ratio(row.n + 1, 2), "n={} m={m}", row.n);
                }
            }
        }
    }
}
