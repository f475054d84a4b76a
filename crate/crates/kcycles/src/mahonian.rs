//! Checkers for two conjectured first-letter formulas under Mahonian
//! statistics.
//!
//! Both formulas are conjectures: the checkers evaluate them and compare
//! against brute-force averages, reporting matches and mismatches as
//! findings. Nothing in this crate uses them as a computation shortcut.
//!
//! - inversions: `E[pi(1) | inv = j]` is conjectured to equal
//!   `M(n+1,j) / M(n,j)` for `n > j`;
//! - major index: for `j = 1..=4`, explicit rational functions of `n`
//!   are conjectured for `n >= j`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::counting::mahonian_count;
use crate::error::{Error, Result};
use crate::oracle::brute_mahonian_expectation;
use crate::perm::Statistic;

/// Which conjecture a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureId {
    /// The inversion-number quotient `M(n+1,j)/M(n,j)`.
    Inv,
    /// The explicit major-index formula for the given statistic value.
    Maj(u64),
}

impl ConjectureId {
    pub fn label(&self) -> String {
        match self {
            ConjectureId::Inv => "inv".into(),
            ConjectureId::Maj(j) => format!("maj-{j}"),
        }
    }
}

/// One grid cell: statistic value `value` at size `n`, with the
/// conjectured and brute-force expectations.
#[derive(Debug, Clone)]
pub struct ConjectureCell {
    pub n: u64,
    pub value: u64,
    pub conjectured: BigRational,
    pub brute: BigRational,
    pub equal: bool,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub id: ConjectureId,
    pub n_max: u64,
    pub cells: Vec<ConjectureCell>,
}

impl ConjectureReport {
    pub fn all_equal(&self) -> bool {
        self.cells.iter().all(|c| c.equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ConjectureCell> {
        self.cells.iter().filter(|c| !c.equal)
    }
}

/// Conjectured value `M(n+1,j)/M(n,j)`, or None when `M(n,j) = 0`.
pub fn inv_conjecture_rhs(n: u64, j: u64) -> Option<BigRational> {
    let denominator = mahonian_count(n, j);
    if denominator.is_zero() {
        return None;
    }
    Some(BigRational::new(mahonian_count(n + 1, j), denominator))
}

/// The four explicit major-index formulas, evaluated at `n`. Returns
/// None when the denominator polynomial vanishes; errors for `j`
/// outside `1..=4`.
pub fn maj_conjecture_rhs(j: u64, n: u64) -> Result<Option<BigRational>> {
    let n = BigInt::from(n);
    let (numerator, denominator): (BigInt, BigInt) = match j {
        1 => (
            // (n^2 + n - 2) / (2 (n - 1))
            &n * &n + &n - 2,
            (&n - 1) * 2,
        ),
        2 => (
            // (n^3 - n - 6) / (3 (n^2 - n - 2))
            &n * &n * &n - &n - 6,
            (&n * &n - &n - 2) * 3,
        ),
        3 => (
            // (n^4 + 6n^3 - 13n^2 - 18n) / (4 (n^3 - 7n))
            &n * &n * &n * &n + &n * &n * &n * 6 - &n * &n * 13 - &n * 18,
            (&n * &n * &n - &n * 7) * 4,
        ),
        4 => (
            // (n^5 + 20n^4 - 45n^3 - 80n^2 - 16n) / (5 (n^4 + 2n^3 - 13n^2 - 14n))
            &n * &n * &n * &n * &n + &n * &n * &n * &n * 20
                - &n * &n * &n * 45
                - &n * &n * 80
                - &n * 16,
            (&n * &n * &n * &n + &n * &n * &n * 2 - &n * &n * 13 - &n * 14) * 5,
        ),
        other => {
            return Err(Error::Unsupported(format!(
                "no explicit major-index formula for value {other} (only 1..=4)"
            )))
        }
    };
    if denominator.is_zero() {
        return Ok(None);
    }
    Ok(Some(BigRational::new(numerator, denominator)))
}

/// Check the inversion conjecture on its stated domain `n > j`. Cells
/// are populated wherever the population is nonempty and the
/// conjectured denominator is nonzero; both hold automatically there.
pub fn check_inv_conjecture(n_max: u64, j_max: u64) -> Result<ConjectureReport> {
    let mut cells = Vec::new();
    for n in 2..=n_max {
        let top = n * (n - 1) / 2;
        for j in 0..=j_max.min(top).min(n - 1) {
            let conjectured = match inv_conjecture_rhs(n, j) {
                Some(value) => value,
                None => continue,
            };
            let brute = brute_mahonian_expectation(n as u32, Statistic::Inv, j)?;
            let equal = conjectured == brute;
            cells.push(ConjectureCell {
                n,
                value: j,
                conjectured,
                brute,
                equal,
            });
        }
    }
    Ok(ConjectureReport {
        id: ConjectureId::Inv,
        n_max,
        cells,
    })
}

/// Check the four explicit major-index formulas for `j <= n <= n_max`.
/// Cells with an empty population or a vanishing denominator are left
/// out of the grid.
pub fn check_maj_conjectures(n_max: u64) -> Result<Vec<ConjectureReport>> {
    let mut reports = Vec::with_capacity(4);
    for j in 1..=4u64 {
        let mut cells = Vec::new();
        for n in j..=n_max {
            if mahonian_count(n, j).is_zero() {
                continue; // empty population
            }
            let conjectured = match maj_conjecture_rhs(j, n)? {
                Some(value) => value,
                None => continue, // undefined cell
            };
            let brute = brute_mahonian_expectation(n as u32, Statistic::Maj, j)?;
            let equal = conjectured == brute;
            cells.push(ConjectureCell {
                n,
                value: j,
                conjectured,
                brute,
                equal,
            });
        }
        reports.push(ConjectureReport {
            id: ConjectureId::Maj(j),
            n_max,
            cells,
        });
    }
    Ok(reports)
}

/// Which conjecture family to check from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureKind {
    Inv,
    Maj,
}

/// Run the requested checkers. The inversion grid uses statistic
/// values up to `j_max` (the domain restriction `n > j` still applies).
pub fn check_conjectures(
    which: ConjectureKind,
    n_max: u64,
    j_max: u64,
) -> Result<Vec<ConjectureReport>> {
    match which {
        ConjectureKind::Inv => Ok(vec![check_inv_conjecture(n_max, j_max)?]),
        ConjectureKind::Maj => check_maj_conjectures(n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inv_rhs_examples() {
        assert_eq!(inv_conjecture_rhs(3, 0).unwrap(), q(1, 1));
        assert_eq!(inv_conjecture_rhs(3, 1).unwrap(), q(3, 2));
        assert_eq!(inv_conjecture_rhs(4, 2).unwrap(), q(9, 5));
        assert_eq!(inv_conjecture_rhs(3, 4), None);
    }

    #[test]
    fn maj_rhs_examples() {
        assert_eq!(maj_conjecture_rhs(1, 3).unwrap().unwrap(), q(5, 2));
        assert_eq!(maj_conjecture_rhs(2, 3).unwrap().unwrap(), q(3, 2));
        assert_eq!(maj_conjecture_rhs(1, 2).unwrap().unwrap(), q(2, 1));
        // Denominators vanish at n = j for j = 1, 2.
        assert_eq!(maj_conjecture_rhs(1, 1).unwrap(), None);
        assert_eq!(maj_conjecture_rhs(2, 2).unwrap(), None);
        assert!(maj_conjecture_rhs(5, 6).is_err());
        assert!(maj_conjecture_rhs(0, 6).is_err());
    }

    #[test]
    fn inv_conjecture_holds_at_desk_scale() {
        let report = check_inv_conjecture(7, 10).unwrap();
        assert!(!report.cells.is_empty());
        assert!(report.all_equal(), "mismatches: {:?}", report.mismatches().count());
        // Every populated cell respects the domain restriction.
        assert!(report.cells.iter().all(|c| c.n > c.value));
    }

    #[test]
    fn inv_conjecture_fails_outside_its_domain() {
        // At n = j = 3 the quotient is 6 but the brute average is 3:
        // the domain restriction in the checker is necessary.
        let conjectured = inv_conjecture_rhs(3, 3).unwrap();
        let brute = brute_mahonian_expectation(3, Statistic::Inv, 3).unwrap();
        assert_eq!(conjectured, q(6, 1));
        assert_eq!(brute, q(3, 1));
    }

    #[test]
    fn maj_conjectures_hold_at_desk_scale() {
        for report in check_maj_conjectures(7).unwrap() {
            assert!(report.all_equal(), "{:?} has mismatches", report.id);
            assert!(!report.cells.is_empty());
        }
    }

    #[test]
    fn tiny_grid_is_consistent() {
        let report = check_inv_conjecture(2, 10).unwrap();
        assert!(report.all_equal());
        assert_eq!(report.cells.len(), 2); // (n=2, j=0) and (n=2, j=1)
    }
}
