//! Exact combinatorics of permutations with a prescribed number of
//! k-cycles.
//!
//! The crate computes, in arbitrary-precision arithmetic:
//!
//! - counts `C_k(n,m)` of permutations of `S_n` with exactly `m`
//!   k-cycles, by inclusion/exclusion and by recurrence ([`counting`]);
//! - exact expected values of letters of such permutations, through two
//!   independent formulas that are cross-asserted ([`expectation`]);
//! - derangements and fixed-point counts of the generalized symmetric
//!   group `(Z/kZ) wr S_n` ([`gsg`], [`counting`]);
//! - a reversible letter-insertion map on canonical cycle notation that
//!   preserves the number of k-cycles whenever `k` does not divide `n`
//!   ([`bijection`]);
//! - truncated exponential generating functions with exact rational
//!   coefficients ([`series`]);
//! - checkers for two conjectured first-letter formulas for Mahonian
//!   statistics ([`mahonian`]);
//! - brute-force enumeration oracles that independently verify every
//!   closed form at desk scale ([`oracle`]);
//! - an OEIS b-file client with a local cache ([`oeis`]).
//!
//! Each capability has a runnable demo under `examples/`, and the
//! `kcycles` binary exposes the same operations as subcommands.

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod error;
pub mod expectation;
pub mod gsg;
pub mod letters;
pub mod mahonian;
pub mod oeis;
pub mod oracle;
pub mod perm;
pub mod render;
pub mod series;

pub use error::{Error, Result};
pub use letters::LetterAlphabet;
pub use perm::{CycleOrder, Letter, Permutation, Statistic};
