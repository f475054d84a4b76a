//! Truncated formal power series with exact rational coefficients.

use num_rational::BigRational;
use num_traits::Zero;

/// A power series truncated at a fixed order: coefficients for
/// `x^0 ..= x^order`. All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// Build from explicit coefficients `c_0, c_1, ..., c_order`.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        PowerSeries { coeffs }
    }

    /// Build coefficient `i` as `f(i)` for `i = 0..=order`.
    pub fn from_fn<F: FnMut(usize) -> BigRational>(order: usize, mut f: F) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(|i| f(i)).collect(),
        }
    }

    /// Truncation degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Sum, truncated to the smaller order.
    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries::from_fn(order, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    /// Product, truncated to the smaller order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, s: &BigRational) -> PowerSeries {
        PowerSeries::from_fn(self.order(), |i| s * &self.coeffs[i])
    }
}
