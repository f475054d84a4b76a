//! A concrete model of the generalized symmetric group
//! `S(k,n) = (Z/kZ) wr S_n`.
//!
//! An element is an ordered pair: a length-n vector of residues mod k
//! (what to add componentwise) and a permutation of `{1..n}` (how to
//! rearrange afterward). It acts on length-n residue sequences by adding
//! the shift vector elementwise and then moving the value at position
//! `i` to position `perm(i)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{lex_words, Letter, LexWords, Permutation};

/// Default ceiling on `k^n * n!` for exhaustive enumeration.
pub const DEFAULT_GSG_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsgElement {
    shifts: Vec<u32>,
    perm: Permutation,
    modulus: u32,
}

impl GsgElement {
    /// Build an element of `S(k,n)`; `perm` must act on `{1..n}` where
    /// `n = shifts.len()`, and every shift must lie in `0..k`.
    pub fn new(shifts: Vec<u32>, perm: Permutation, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("modulus k must be at least 1".into()));
        }
        let n = shifts.len();
        let support: BTreeSet<Letter> = perm.support();
        let expected: BTreeSet<Letter> = (1..=n as Letter).collect();
        if support != expected {
            return Err(Error::Domain(format!(
                "permutation must act on 1..={n} to pair with {n} shifts"
            )));
        }
        if let Some(&bad) = shifts.iter().find(|&&s| s >= modulus) {
            return Err(Error::Domain(format!(
                "shift {bad} is not a residue mod {modulus}"
            )));
        }
        Ok(GsgElement {
            shifts,
            perm,
            modulus,
        })
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.shifts.len()
    }

    /// Act on a residue sequence: add shifts elementwise mod k, then
    /// move the value at position `i` to position `perm(i)`.
    pub fn act(&self, sequence: &[u32]) -> Result<Vec<u32>> {
        let n = self.shifts.len();
        if sequence.len() != n {
            return Err(Error::Domain(format!(
                "sequence length {} does not match degree {n}",
                sequence.len()
            )));
        }
        let mut result = vec![0; n];
        for i in 0..n {
            let value = (sequence[i] + self.shifts[i]) % self.modulus;
            let target = self.perm.letter_at(i as Letter + 1)? as usize - 1;
            result[target] = value;
        }
        Ok(result)
    }

    /// Indices `i` with `perm(i) = i` and `shifts[i] = 0` (1-based).
    pub fn fixed_points(&self) -> BTreeSet<u32> {
        (1..=self.shifts.len() as u32)
            .filter(|&i| {
                self.perm.letter_at(i).expect("i is in the support") == i
                    && self.shifts[(i - 1) as usize] == 0
            })
            .collect()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points().is_empty()
    }
}

/// Exact order `k^n * n!` of `S(k,n)`, or `None` on overflow.
pub fn gsg_order(k: u32, n: u32) -> Option<u64> {
    let mut order: u64 = 1;
    for _ in 0..n {
        order = order.checked_mul(k as u64)?;
    }
    for i in 2..=n as u64 {
        order = order.checked_mul(i)?;
    }
    Some(order)
}

/// Enumerate all of `S(k,n)` with the default budget.
pub fn enumerate_gsg(k: u32, n: u32) -> Result<GsgEnumerator> {
    enumerate_gsg_with_budget(k, n, DEFAULT_GSG_BUDGET)
}

/// Enumerate all `k^n * n!` elements exactly once, ordered
/// lexicographically by shift vector and then by one-line permutation.
pub fn enumerate_gsg_with_budget(k: u32, n: u32, budget: u64) -> Result<GsgEnumerator> {
    if k == 0 {
        return Err(Error::Domain("modulus k must be at least 1".into()));
    }
    match gsg_order(k, n) {
        Some(order) if order <= budget => {}
        _ => {
            return Err(Error::Budget(format!(
                "S({k},{n}) has more than {budget} elements"
            )))
        }
    }
    Ok(GsgEnumerator {
        k,
        n,
        shifts: Some(vec![0; n as usize]),
        words: lex_words(n),
    })
}

pub struct GsgEnumerator {
    k: u32,
    n: u32,
    shifts: Option<Vec<u32>>,
    words: LexWords,
}

impl Iterator for GsgEnumerator {
    type Item = GsgElement;

    fn next(&mut self) -> Option<GsgElement> {
        loop {
            let shifts = self.shifts.as_ref()?;
            if let Some(word) = self.words.next() {
                let perm = Permutation::from_one_line(&word).expect("valid one-line word");
                return Some(GsgElement {
                    shifts: shifts.clone(),
                    perm,
                    modulus: self.k,
                });
            }
            // Advance the shift odometer and restart the word stream.
            let mut shifts = self.shifts.take()?;
            let mut pos = shifts.len();
            loop {
                if pos == 0 {
                    return None; // odometer overflow: enumeration done
                }
                pos -= 1;
                shifts[pos] += 1;
                if shifts[pos] < self.k {
                    break;
                }
                shifts[pos] = 0;
            }
            self.shifts = Some(shifts);
            self.words = lex_words(self.n);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::LetterAlphabet;

    fn element(shifts: &[u32], cycles: &str, k: u32) -> GsgElement {
        let perm = Permutation::parse_cycles(cycles, LetterAlphabet::Base36).unwrap();
        GsgElement::new(shifts.to_vec(), perm, k).unwrap()
    }

    #[test]
    fn action_matches_worked_example() {
        let g = element(&[1, 3, 0], "(23)(1)", 4);
        assert_eq!(g.act(&[0, 1, 1]).unwrap(), vec![1, 1, 0]);
        assert!(g.is_derangement());
    }

    #[test]
    fn identity_acts_trivially() {
        let g = element(&[0, 0, 0], "(1)(2)(3)", 3);
        assert_eq!(g.act(&[2, 0, 1]).unwrap(), vec![2, 0, 1]);
        assert_eq!(g.fixed_points(), (1..=3).collect());
        assert!(!g.is_derangement());
    }

    #[test]
    fn pure_swap_moves_values() {
        let g = element(&[0, 0], "(21)", 5);
        assert_eq!(g.act(&[3, 4]).unwrap(), vec![4, 3]);
    }

    #[test]
    fn fixed_points_need_zero_shift_and_fixed_index() {
        let g = element(&[0, 1], "(1)(2)", 2);
        assert_eq!(g.fixed_points(), [1].into_iter().collect());
        let g = element(&[1], "(1)", 2);
        assert!(g.is_derangement());
    }

    #[test]
    fn act_rejects_wrong_length() {
        let g = element(&[0, 0], "(21)", 2);
        assert!(g.act(&[0]).is_err());
    }

    #[test]
    fn new_validates_inputs() {
        let swap = Permutation::parse_cycles("(21)", LetterAlphabet::Base36).unwrap();
        assert!(GsgElement::new(vec![0, 2], swap.clone(), 2).is_err());
        assert!(GsgElement::new(vec![0], swap.clone(), 2).is_err());
        assert!(GsgElement::new(vec![0, 0], swap, 0).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_gsg(2, 2).unwrap().count(), 8);
        assert_eq!(enumerate_gsg(1, 3).unwrap().count(), 6);
        assert_eq!(enumerate_gsg(3, 2).unwrap().count(), 18);
        assert_eq!(enumerate_gsg(3, 0).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let elements: Vec<GsgElement> = enumerate_gsg(2, 3).unwrap().collect();
        assert_eq!(elements.len(), 48);
        for pair in elements.windows(2) {
            let a = (&pair[0].shifts, pair[0].perm.one_line().unwrap());
            let b = (&pair[1].shifts, pair[1].perm.one_line().unwrap());
            assert!(a < b, "enumeration must ascend lexicographically");
        }
    }

    #[test]
    fn enumeration_enforces_budget() {
        assert!(matches!(
            enumerate_gsg_with_budget(10, 10, 1000),
            Err(Error::Budget(_))
        ));
    }
}
