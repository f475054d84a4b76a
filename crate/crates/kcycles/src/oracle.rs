//! Brute-force enumeration oracles.
//!
//! Everything in this module recomputes quantities by exhaustive
//! enumeration, independently of the closed forms it is used to check.
//! `verify_all` runs the whole battery and reports one record per
//! check, with a reproducible counterexample on failure.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bijection;
use crate::counting;
use crate::error::{Error, Result};
use crate::expectation;
use crate::gsg;
use crate::letters::LetterAlphabet;
use crate::perm::{lex_words, Permutation, Statistic};

/// Default cap on `n` for `S_n` enumeration.
pub const DEFAULT_SN_BUDGET: u32 = 9;

/// All of `S_n` in lexicographic one-line order, under the default budget.
pub fn enumerate_sn(n: u32) -> Result<impl Iterator<Item = Permutation>> {
    enumerate_sn_with_budget(n, DEFAULT_SN_BUDGET)
}

pub fn enumerate_sn_with_budget(
    n: u32,
    max_n: u32,
) -> Result<impl Iterator<Item = Permutation>> {
    if n > max_n {
        return Err(Error::Budget(format!(
            "S_{n} enumeration exceeds the budget of n <= {max_n}"
        )));
    }
    Ok(lex_words(n).map(|word| Permutation::from_one_line(&word).expect("valid word")))
}

/// Count permutations of `S_n` with exactly `m` k-cycles by enumeration.
pub fn brute_count_kcycles(n: u32, m: u64, k: u64) -> Result<BigInt> {
    let mut count = BigInt::zero();
    for p in enumerate_sn(n)? {
        if p.count_k_cycles(k as usize) as u64 == m {
            count += 1;
        }
    }
    Ok(count)
}

/// Count those additionally having first letter `a`.
pub fn brute_first_letter_count(n: u32, m: u64, k: u64, a: u64) -> Result<BigInt> {
    let mut count = BigInt::zero();
    for word in lex_words(n) {
        if word[0] as u64 != a {
            continue;
        }
        let p = Permutation::from_one_line(&word).expect("valid word");
        if p.count_k_cycles(k as usize) as u64 == m {
            count += 1;
        }
    }
    Ok(count)
}

/// Exact average of the i-th letter over permutations of `S_n` with
/// exactly `m` k-cycles.
pub fn brute_expected_letter(n: u32, m: u64, k: u64, i: u64) -> Result<BigRational> {
    if i < 1 || i > n as u64 {
        return Err(Error::Domain(format!("position {i} is outside 1..={n}")));
    }
    let mut total = BigInt::zero();
    let mut population = BigInt::zero();
    for word in lex_words(n) {
        let p = Permutation::from_one_line(&word).expect("valid word");
        if p.count_k_cycles(k as usize) as u64 == m {
            total += word[(i - 1) as usize];
            population += 1;
        }
    }
    if population.is_zero() {
        return Err(Error::EmptyPopulation(format!(
            "no permutation of S_{n} has exactly {m} {k}-cycles"
        )));
    }
    Ok(BigRational::new(total, population))
}

/// Histogram of fixed-point counts over all of `S(k,n)`.
pub fn brute_gsg_counts(k: u32, n: u32) -> Result<BTreeMap<u64, BigInt>> {
    let mut histogram = BTreeMap::new();
    for element in gsg::enumerate_gsg(k, n)? {
        let fixed = element.fixed_points().len() as u64;
        *histogram.entry(fixed).or_insert_with(BigInt::zero) += 1;
    }
    if histogram.is_empty() {
        histogram.insert(0, BigInt::one()); // S(k,0) has exactly the empty element
    }
    Ok(histogram)
}

/// Exact average of the first letter over permutations of `S_n` with a
/// given statistic value.
pub fn brute_mahonian_expectation(n: u32, which: Statistic, value: u64) -> Result<BigRational> {
    let mut total = BigInt::zero();
    let mut population = BigInt::zero();
    for word in lex_words(n) {
        let p = Permutation::from_one_line(&word).expect("valid word");
        if p.statistic(which)? == value {
            total += word[0];
            population += 1;
        }
    }
    if population.is_zero() {
        return Err(Error::EmptyPopulation(format!(
            "no permutation of S_{n} has statistic value {value}"
        )));
    }
    Ok(BigRational::new(total, population))
}

/// Enumeration caps for [`verify_all`].
#[derive(Debug, Clone)]
pub struct VerifyBudget {
    /// Largest `n` for `S_n` enumerations.
    pub max_n: u32,
    /// Largest `n` for the bijection sweeps (`S_{n-1} x [n] -> S_n`).
    pub bijection_max_n: u32,
    /// Largest `n` for `S(k,n)` enumerations.
    pub gsg_max_n: u32,
    /// Largest `k` for `S(k,n)` enumerations.
    pub gsg_max_k: u32,
    /// Truncation order for the generating-function checks.
    pub series_order: usize,
}

impl Default for VerifyBudget {
    fn default() -> Self {
        VerifyBudget {
            max_n: 8,
            bijection_max_n: 7,
            gsg_max_n: 5,
            gsg_max_k: 4,
            series_order: 12,
        }
    }
}

impl VerifyBudget {
    /// A budget with every enumeration capped at `max_n`.
    pub fn capped(max_n: u32) -> Self {
        let default = VerifyBudget::default();
        VerifyBudget {
            max_n,
            bijection_max_n: max_n.min(default.bijection_max_n),
            gsg_max_n: max_n.min(default.gsg_max_n),
            gsg_max_k: default.gsg_max_k,
            series_order: default.series_order,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub parameters: String,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            if check.passed {
                out.push_str(&format!(
                    "[PASS] {} ({}) {}ms\n",
                    check.name, check.parameters, check.millis
                ));
            } else {
                out.push_str(&format!(
                    "[FAIL] {} ({}): {}\n",
                    check.name,
                    check.parameters,
                    check.counterexample.as_deref().unwrap_or("no detail")
                ));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "all_passed": self.all_passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "parameters": c.parameters,
                "passed": c.passed,
                "counterexample": c.counterexample,
                "millis": c.millis,
            })).collect::<Vec<_>>(),
        })
    }
}

type Check = (&'static str, String, Box<dyn Fn() -> Option<String>>);

/// Run every invariant check within the budget. Failures become report
/// entries with counterexamples, never panics.
pub fn verify_all(budget: &VerifyBudget) -> VerificationReport {
    let b = budget.clone();
    let small_n = budget.max_n.min(6);
    let checks: Vec<Check> = vec![
        (
            "permutation/cycle-lengths-partition-n",
            format!("n <= {small_n}"),
            {
                let b = b.clone();
                Box::new(move || check_cycle_lengths(b.max_n.min(6)))
            },
        ),
        (
            "permutation/canonicalize-idempotent",
            format!("n <= {small_n}"),
            {
                let b = b.clone();
                Box::new(move || check_canonicalize(b.max_n.min(6)))
            },
        ),
        (
            "permutation/format-parse-round-trip",
            format!("n <= {small_n}, both alphabets"),
            {
                let b = b.clone();
                Box::new(move || check_format_round_trip(b.max_n.min(6)))
            },
        ),
        (
            "permutation/inv-maj-equidistributed",
            format!("n <= {small_n}"),
            {
                let b = b.clone();
                Box::new(move || check_equidistribution(b.max_n.min(6)))
            },
        ),
        (
            "counting/row-sums-are-n-factorial",
            "n <= 9, k <= n".into(),
            Box::new(|| check_row_sums()),
        ),
        (
            "counting/closed-form-equals-recurrence",
            "n <= 30, k <= 6".into(),
            Box::new(|| check_recurrence()),
        ),
        (
            "counting/closed-form-equals-brute",
            format!("n <= {}, k <= n", b.max_n),
            {
                let b = b.clone();
                Box::new(move || check_counts_brute(b.max_n))
            },
        ),
        (
            "counting/first-letter-formula-equals-brute",
            format!("n <= {}, k >= 2", b.max_n),
            {
                let b = b.clone();
                Box::new(move || check_first_letter_brute(b.max_n))
            },
        ),
        (
            "counting/first-letter-decomposition",
            "n <= 20, k <= 4".into(),
            Box::new(|| check_first_letter_decomposition()),
        ),
        (
            "counting/difference-closed-form",
            "n <= 30, k <= 5".into(),
            Box::new(|| check_difference()),
        ),
        (
            "counting/egf-three-series-agree",
            format!("k in 2..=5, order {}", b.series_order),
            {
                let b = b.clone();
                Box::new(move || check_egf(b.series_order))
            },
        ),
        (
            "counting/gsg-fixed-point-row-sums",
            "k <= 4, n <= 6".into(),
            Box::new(|| check_gsg_row_sums()),
        ),
        (
            "counting/mahonian-row-sums-and-symmetry",
            "n <= 9".into(),
            Box::new(|| check_mahonian_rows()),
        ),
        (
            "expectation/ratio-form-equals-brute",
            format!("n <= {}, k >= 2", b.max_n),
            {
                let b = b.clone();
                Box::new(move || check_expectation_brute(b.max_n))
            },
        ),
        (
            "expectation/two-formulas-agree",
            "k in 2..=4, kn <= 4k".into(),
            Box::new(|| check_two_formulas()),
        ),
        (
            "expectation/off-multiples-are-uniform",
            "n <= 40, k in 2..=6".into(),
            Box::new(|| check_uniform_rows()),
        ),
        (
            "expectation/deviation-bound-and-sign",
            "k in 2..=4, n <= 5".into(),
            Box::new(|| check_deviation()),
        ),
        (
            "expectation/letter-positions-sum",
            "kn <= 12".into(),
            Box::new(|| check_letter_sum()),
        ),
        (
            "expectation/letter-position-equals-brute",
            format!("kn <= {}", b.max_n),
            {
                let b = b.clone();
                Box::new(move || check_letter_brute(b.max_n))
            },
        ),
        (
            "expectation/odd-midpoint-is-uniform",
            "kn <= 13, kn odd".into(),
            Box::new(|| check_midpoint()),
        ),
        (
            "gsg/derangement-count-matches-formula",
            format!("k <= {}, n <= {}", b.gsg_max_k, b.gsg_max_n),
            {
                let b = b.clone();
                Box::new(move || check_gsg_derangements(b.gsg_max_k, b.gsg_max_n))
            },
        ),
        (
            "gsg/fixed-point-histogram-matches-formula",
            format!("k <= {}, n <= {}", b.gsg_max_k, b.gsg_max_n),
            {
                let b = b.clone();
                Box::new(move || check_gsg_histogram(b.gsg_max_k, b.gsg_max_n))
            },
        ),
        (
            "gsg/action-conventions",
            "k <= 3, n <= 3".into(),
            Box::new(|| check_gsg_action()),
        ),
        (
            "bijection/round-trip-and-image",
            format!("n <= {}, k in 2..=5", b.bijection_max_n),
            {
                let b = b.clone();
                Box::new(move || check_bijection_round_trip(b.bijection_max_n))
            },
        ),
        (
            "bijection/preserves-k-cycles-off-multiples",
            format!("n <= {}, k in 2..=5", b.bijection_max_n),
            {
                let b = b.clone();
                Box::new(move || check_bijection_preservation(b.bijection_max_n))
            },
        ),
        (
            "bijection/trace-replay-and-mod-k-ladder",
            format!("n <= {}, k in 2..=4", b.bijection_max_n.min(6)),
            {
                let b = b.clone();
                Box::new(move || check_bijection_traces(b.bijection_max_n.min(6)))
            },
        ),
        (
            "bijection/worked-example",
            "base-36, k = 3".into(),
            Box::new(|| check_worked_example()),
        ),
        (
            "mahonian/brute-denominator-divides-count",
            format!("n <= {}", b.max_n.min(8)),
            {
                let b = b.clone();
                Box::new(move || check_mahonian_denominator(b.max_n.min(8)))
            },
        ),
        (
            "oracle/brute-counts-partition",
            format!("n <= {}", b.max_n),
            {
                let b = b.clone();
                Box::new(move || check_brute_partition(b.max_n))
            },
        ),
    ];

    let mut results = Vec::with_capacity(checks.len());
    for (name, parameters, run) in checks {
        let start = Instant::now();
        let counterexample = run();
        results.push(CheckResult {
            name: name.to_string(),
            parameters,
            passed: counterexample.is_none(),
            counterexample,
            millis: start.elapsed().as_millis(),
        });
    }
    VerificationReport { checks: results }
}

fn check_cycle_lengths(max_n: u32) -> Option<String> {
    for n in 0..=max_n {
        for p in lex_words(n).map(|w| Permutation::from_one_line(&w).unwrap()) {
            let total: usize = (1..=n as usize).map(|k| k * p.count_k_cycles(k)).sum();
            if total != n as usize {
                return Some(format!("n={n}, permutation {:?}", p.cycles()));
            }
        }
    }
    None
}

fn check_canonicalize(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            // Scramble the representation: reverse the cycle list and
            // rotate every cycle off its maximum.
            let mut cycles: Vec<Vec<u32>> = p.cycles().to_vec();
            cycles.reverse();
            for cycle in &mut cycles {
                let shift = 1 % cycle.len().max(1);
                cycle.rotate_left(shift);
            }
            let scrambled = Permutation::from_cycles(cycles).unwrap();
            let canonical = scrambled.canonicalize();
            if canonical != p {
                return Some(format!("word {word:?}: canonical form mismatch"));
            }
            if canonical.canonicalize() != canonical {
                return Some(format!("word {word:?}: canonicalize is not idempotent"));
            }
            for letter in 1..=n {
                if scrambled.letter_at(letter).unwrap() != canonical.letter_at(letter).unwrap()
                {
                    return Some(format!("word {word:?}: mapping changed at {letter}"));
                }
            }
        }
    }
    None
}

fn check_format_round_trip(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            for alphabet in [LetterAlphabet::Base36, LetterAlphabet::Decimal] {
                let text = p.format_cycles(alphabet).unwrap();
                match Permutation::parse_cycles(&text, alphabet) {
                    Ok(back) if back == p.canonicalize() => {}
                    _ => return Some(format!("word {word:?}, text {text:?}")),
                }
            }
        }
    }
    None
}

fn check_equidistribution(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        let mut by_inv: BTreeMap<u64, u64> = BTreeMap::new();
        let mut by_maj: BTreeMap<u64, u64> = BTreeMap::new();
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            *by_inv.entry(p.statistic(Statistic::Inv).unwrap()).or_default() += 1;
            *by_maj.entry(p.statistic(Statistic::Maj).unwrap()).or_default() += 1;
        }
        if by_inv != by_maj {
            return Some(format!("n={n}: inv {by_inv:?} vs maj {by_maj:?}"));
        }
    }
    None
}

fn check_row_sums() -> Option<String> {
    for n in 1..=9u64 {
        for k in 1..=n {
            let total: BigInt = (0..=n / k)
                .map(|m| counting::count_kcycle_perms(n, m, k))
                .sum();
            if total != counting::factorial(n) {
                return Some(format!("n={n} k={k}: sum {total}"));
            }
        }
    }
    None
}

fn check_recurrence() -> Option<String> {
    for n in 1..=30u64 {
        for k in 1..=6 {
            for m in 1..=(n / k + 1) {
                let closed = counting::count_kcycle_perms(n, m, k);
                let recursive = counting::count_kcycle_perms_recursive(n, m, k);
                if closed != recursive {
                    return Some(format!("n={n} m={m} k={k}: {closed} vs {recursive}"));
                }
            }
        }
    }
    None
}

fn check_counts_brute(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        // One pass over S_n, bucketing by (k, number of k-cycles).
        let mut histogram: BTreeMap<(u64, u64), BigInt> = BTreeMap::new();
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            for k in 1..=n as u64 {
                let m = p.count_k_cycles(k as usize) as u64;
                *histogram.entry((k, m)).or_insert_with(BigInt::zero) += 1;
            }
        }
        for k in 1..=n as u64 {
            for m in 0..=(n as u64 / k + 1) {
                let brute = histogram.get(&(k, m)).cloned().unwrap_or_else(BigInt::zero);
                let closed = counting::count_kcycle_perms(n as u64, m, k);
                if brute != closed {
                    return Some(format!("n={n} m={m} k={k}: closed {closed}, brute {brute}"));
                }
            }
        }
    }
    None
}

fn check_first_letter_brute(max_n: u32) -> Option<String> {
    for n in 2..=max_n {
        let mut histogram: BTreeMap<(u64, u64, u64), BigInt> = BTreeMap::new();
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            for k in 2..=n as u64 {
                let m = p.count_k_cycles(k as usize) as u64;
                *histogram
                    .entry((k, m, word[0] as u64))
                    .or_insert_with(BigInt::zero) += 1;
            }
        }
        for k in 2..=n as u64 {
            for m in 0..=n as u64 / k {
                for a in 1..=n as u64 {
                    let brute = histogram
                        .get(&(k, m, a))
                        .cloned()
                        .unwrap_or_else(BigInt::zero);
                    let closed = counting::count_with_first_letter(n as u64, m, k, a).unwrap();
                    if brute != closed {
                        return Some(format!(
                            "n={n} m={m} k={k} a={a}: closed {closed}, brute {brute}"
                        ));
                    }
                }
            }
        }
    }
    None
}

fn check_first_letter_decomposition() -> Option<String> {
    for n in 2..=20u64 {
        for k in 2..=4 {
            for m in 0..=n / k {
                let with_one = counting::count_with_first_letter(n, m, k, 1).unwrap();
                let with_a = counting::count_with_first_letter(n, m, k, 2).unwrap();
                let total = counting::count_kcycle_perms(n, m, k);
                if with_one + with_a * (n - 1) != total {
                    return Some(format!("n={n} m={m} k={k}"));
                }
            }
        }
    }
    None
}

fn check_difference() -> Option<String> {
    for n in 1..=30u64 {
        for k in 2..=5 {
            for m in 0..=(n / k + 1) {
                let closed = counting::count_difference(n, m, k);
                let direct = counting::count_kcycle_perms(n, m, k)
                    - counting::count_kcycle_perms(n - 1, m, k) * n;
                if closed != direct {
                    return Some(format!("n={n} m={m} k={k}: {closed} vs {direct}"));
                }
            }
        }
    }
    None
}

fn check_egf(order: usize) -> Option<String> {
    for k in 2..=5u64 {
        let target = counting::egf_target_series(k, order);
        let cycles = counting::egf_lhs_cycles(k, order);
        let derangements = counting::egf_lhs_derangements(k, order);
        for i in 0..=order {
            if cycles.coefficient(i) != target.coefficient(i) {
                return Some(format!("k={k}, coefficient {i}: cycle series differs"));
            }
            if derangements.coefficient(i) != target.coefficient(i) {
                return Some(format!("k={k}, coefficient {i}: derangement series differs"));
            }
        }
    }
    None
}

fn check_gsg_row_sums() -> Option<String> {
    for k in 1..=4u64 {
        for n in 0..=6 {
            let total: BigInt = (0..=n)
                .map(|m| counting::gsg_fixed_point_count(k, n, m))
                .sum();
            let order = num_traits::pow(BigInt::from(k), n as usize) * counting::factorial(n);
            if total != order {
                return Some(format!("k={k} n={n}: {total} vs {order}"));
            }
        }
    }
    None
}

fn check_mahonian_rows() -> Option<String> {
    for n in 0..=9u64 {
        let row = counting::mahonian_row(n);
        let total: BigInt = row.iter().sum();
        if total != counting::factorial(n) {
            return Some(format!("n={n}: row sum {total}"));
        }
        let top = row.len() - 1;
        for j in 0..=top {
            if row[j] != row[top - j] {
                return Some(format!("n={n} j={j}: symmetry broken"));
            }
        }
    }
    None
}

fn check_expectation_brute(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        // Single pass accumulating, per k, first-letter sums by m.
        let mut sums: BTreeMap<(u64, u64), (BigInt, BigInt)> = BTreeMap::new();
        for word in lex_words(n) {
            let p = Permutation::from_one_line(&word).unwrap();
            for k in 2..=n as u64 {
                let m = p.count_k_cycles(k as usize) as u64;
                let entry = sums
                    .entry((k, m))
                    .or_insert_with(|| (BigInt::zero(), BigInt::zero()));
                entry.0 += word[0];
                entry.1 += 1;
            }
        }
        for ((k, m), (total, population)) in sums {
            let brute = BigRational::new(total, population);
            let closed = expectation::expected_first_letter(n as u64, m, k).unwrap();
            if brute != closed {
                return Some(format!("n={n} m={m} k={k}: closed {closed}, brute {brute}"));
            }
        }
    }
    None
}

fn check_two_formulas() -> Option<String> {
    for k in 2..=4u64 {
        for n in 1..=4 {
            for m in 0..=n {
                let ratio_form = expectation::expected_first_letter(k * n, m, k).unwrap();
                let derangement_form =
                    expectation::expected_first_letter_derangement_form(n, m, k).unwrap();
                if ratio_form != derangement_form {
                    return Some(format!(
                        "k={k} n={n} m={m}: {ratio_form} vs {derangement_form}"
                    ));
                }
            }
        }
    }
    None
}

fn check_uniform_rows() -> Option<String> {
    for n in 1..=40u64 {
        for k in 2..=6 {
            if n % k == 0 {
                continue;
            }
            let uniform = BigRational::new(BigInt::from(n + 1), BigInt::from(2));
            for m in 0..=n / k {
                if counting::count_kcycle_perms(n, m, k).is_zero() {
                    continue;
                }
                let value = expectation::expected_first_letter(n, m, k).unwrap();
                if value != uniform {
                    return Some(format!("n={n} m={m} k={k}: {value}"));
                }
            }
        }
    }
    None
}

fn check_deviation() -> Option<String> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for k in 2..=4u64 {
        for n in 1..=5 {
            for m in 0..=n {
                let center = BigRational::new(BigInt::from(k * n + 1), BigInt::from(2));
                let value =
                    expectation::expected_first_letter_derangement_form(n, m, k).unwrap();
                let deviation = value - center;
                if deviation.abs() > half {
                    return Some(format!("k={k} n={n} m={m}: deviation too large"));
                }
                // Extremal exactly when D(k, n-m) = 1: m = n, or m = n-1
                // in the k = 2 case.
                let extremal = m == n || (k == 2 && m + 1 == n);
                if (deviation.abs() == half) != extremal {
                    return Some(format!("k={k} n={n} m={m}: extremal case mismatch"));
                }
                if deviation.is_positive() != ((n - m) % 2 == 0) {
                    return Some(format!("k={k} n={n} m={m}: sign mismatch"));
                }
            }
        }
    }
    None
}

fn check_letter_sum() -> Option<String> {
    for k in 2..=6u64 {
        for n in 1..=6 {
            let kn = k * n;
            if kn > 12 {
                continue;
            }
            for m in 0..=n {
                let total: BigRational = (1..=kn)
                    .map(|i| expectation::expected_letter_at(n, m, k, i).unwrap())
                    .sum();
                let expected = BigRational::new(BigInt::from(kn * (kn + 1)), BigInt::from(2));
                if total != expected {
                    return Some(format!("k={k} n={n} m={m}: sum {total}"));
                }
            }
        }
    }
    None
}

fn check_letter_brute(max_n: u32) -> Option<String> {
    for k in 2..=max_n as u64 {
        for n in 1..=max_n as u64 {
            let kn = k * n;
            if kn > max_n as u64 {
                continue;
            }
            // One pass per (k, n): letter sums by (m, i).
            let mut sums: BTreeMap<u64, (Vec<BigInt>, BigInt)> = BTreeMap::new();
            for word in lex_words(kn as u32) {
                let p = Permutation::from_one_line(&word).unwrap();
                let m = p.count_k_cycles(k as usize) as u64;
                let entry = sums
                    .entry(m)
                    .or_insert_with(|| (vec![BigInt::zero(); kn as usize], BigInt::zero()));
                for (i, &letter) in word.iter().enumerate() {
                    entry.0[i] += letter;
                }
                entry.1 += 1;
            }
            for (m, (totals, population)) in sums {
                debug_assert!(m <= n, "S_kn holds at most n k-cycles");
                for i in 1..=kn {
                    let brute =
                        BigRational::new(totals[(i - 1) as usize].clone(), population.clone());
                    let closed = expectation::expected_letter_at(n, m, k, i).unwrap();
                    if brute != closed {
                        return Some(format!(
                            "k={k} n={n} m={m} i={i}: closed {closed}, brute {brute}"
                        ));
                    }
                }
            }
        }
    }
    None
}

fn check_midpoint() -> Option<String> {
    for k in 2..=13u64 {
        for n in 1..=6 {
            let kn = k * n;
            if kn > 13 || kn % 2 == 0 {
                continue;
            }
            for m in 0..=n {
                let value = expectation::expected_letter_at(n, m, k, (kn + 1) / 2).unwrap();
                let center = BigRational::new(BigInt::from(kn + 1), BigInt::from(2));
                if value != center {
                    return Some(format!("k={k} n={n} m={m}"));
                }
            }
        }
    }
    None
}

fn check_gsg_derangements(max_k: u32, max_n: u32) -> Option<String> {
    for k in 1..=max_k {
        for n in 0..=max_n {
            if gsg::gsg_order(k, n).is_none_or(|o| o > gsg::DEFAULT_GSG_BUDGET) {
                continue;
            }
            let brute = gsg::enumerate_gsg(k, n)
                .unwrap()
                .filter(|g| g.is_derangement())
                .count();
            let formula = counting::derangements_gsg(k as u64, n as u64);
            if BigInt::from(brute) != formula {
                return Some(format!("k={k} n={n}: formula {formula}, brute {brute}"));
            }
        }
    }
    None
}

fn check_gsg_histogram(max_k: u32, max_n: u32) -> Option<String> {
    for k in 1..=max_k {
        for n in 0..=max_n {
            if gsg::gsg_order(k, n).is_none_or(|o| o > gsg::DEFAULT_GSG_BUDGET) {
                continue;
            }
            let histogram = brute_gsg_counts(k, n).unwrap();
            for m in 0..=n as u64 {
                let brute = histogram.get(&m).cloned().unwrap_or_else(BigInt::zero);
                let formula = counting::gsg_fixed_point_count(k as u64, n as u64, m);
                if brute != formula {
                    return Some(format!("k={k} n={n} m={m}: formula {formula}, brute {brute}"));
                }
            }
        }
    }
    None
}

fn check_gsg_action() -> Option<String> {
    // The worked convention example in S(4,3).
    let swap23 = Permutation::parse_cycles("(23)(1)", LetterAlphabet::Base36).unwrap();
    let g = gsg::GsgElement::new(vec![1, 3, 0], swap23, 4).unwrap();
    match g.act(&[0, 1, 1]) {
        Ok(result) if result == vec![1, 1, 0] => {}
        other => return Some(format!("worked action example produced {other:?}")),
    }
    for k in 1..=3u32 {
        for n in 0..=3u32 {
            let sequence: Vec<u32> = (0..n).map(|i| i % k).collect();
            for g in gsg::enumerate_gsg(k, n).unwrap() {
                match g.act(&sequence) {
                    Ok(image) => {
                        if image.len() != n as usize {
                            return Some(format!("k={k} n={n}: action changed length"));
                        }
                        let trivial = g.shifts().iter().all(|&s| s == 0)
                            && (1..=n).all(|i| g.perm().letter_at(i).unwrap() == i);
                        if trivial && image != sequence {
                            return Some(format!("k={k} n={n}: identity moved a sequence"));
                        }
                    }
                    Err(e) => return Some(format!("k={k} n={n}: action failed: {e}")),
                }
            }
        }
    }
    None
}

fn check_bijection_round_trip(max_n: u32) -> Option<String> {
    for k in 2..=5u64 {
        for n in 1..=max_n {
            let mut images = std::collections::BTreeSet::new();
            for word in lex_words(n - 1) {
                let p = Permutation::from_one_line(&word).unwrap();
                for x in 1..=n {
                    let image = match bijection::insert(&p, x, k) {
                        Ok(image) => image,
                        Err(e) => return Some(format!("k={k} n={n} x={x}: insert failed: {e}")),
                    };
                    if !image.is_canonical() {
                        return Some(format!("k={k} n={n} x={x}: output not canonical"));
                    }
                    match bijection::extract(&image, k) {
                        Ok((back, y)) if back == p && y == x => {}
                        other => {
                            return Some(format!(
                                "k={k} n={n} x={x} word={word:?}: round trip gave {other:?}"
                            ))
                        }
                    }
                    images.insert(image.one_line().unwrap());
                }
            }
            let expected: usize = (1..=n as usize).product();
            if images.len() != expected {
                return Some(format!(
                    "k={k} n={n}: image has {} of {expected} permutations",
                    images.len()
                ));
            }
        }
    }
    None
}

fn check_bijection_preservation(max_n: u32) -> Option<String> {
    for k in 2..=5u64 {
        for n in 1..=max_n {
            if n as u64 % k == 0 {
                continue;
            }
            for word in lex_words(n - 1) {
                let p = Permutation::from_one_line(&word).unwrap();
                let before = p.count_k_cycles(k as usize);
                for x in 1..=n {
                    let image = bijection::insert(&p, x, k).unwrap();
                    if image.count_k_cycles(k as usize) != before {
                        return Some(format!("k={k} n={n} x={x} word={word:?}"));
                    }
                }
            }
        }
    }
    None
}

fn check_bijection_traces(max_n: u32) -> Option<String> {
    for k in 2..=4u64 {
        for n in 1..=max_n {
            for word in lex_words(n - 1) {
                let p = Permutation::from_one_line(&word).unwrap();
                for x in 1..=n {
                    let relabeled = p
                        .relabel(|l| if l >= x { l + 1 } else { l })
                        .canonicalize();
                    let (image, trace) = bijection::phi_core_traced(&relabeled, x, k).unwrap();
                    if bijection::replay_forward(&relabeled, &trace).ok() != Some(image.clone()) {
                        return Some(format!("k={k} n={n} x={x}: forward replay mismatch"));
                    }
                    if bijection::replay_backward(&image, &trace).ok() != Some(relabeled.clone())
                    {
                        return Some(format!("k={k} n={n} x={x}: backward replay mismatch"));
                    }
                    // The mod-k ladder of residual sizes.
                    let mut size = (n - 1) as u64;
                    for step in &trace.steps {
                        let expected = if step.rule.is_phi() {
                            (n as u64 + k - 1) % k
                        } else {
                            n as u64 % k
                        };
                        if size % k != expected {
                            return Some(format!(
                                "k={k} n={n} x={x}: {} level saw {size} letters",
                                step.rule.label()
                            ));
                        }
                        if !step.rule.recurses() {
                            break;
                        }
                        size -= match step.rule {
                            bijection::Rule::PhiB => k,
                            bijection::Rule::PhiC => k - 1,
                            bijection::Rule::PsiB => k + 1,
                            bijection::Rule::PsiC => k,
                            _ => unreachable!(),
                        };
                    }
                }
            }
        }
    }
    None
}

fn check_worked_example() -> Option<String> {
    let input = Permutation::parse_cycles(
        "(D76)(E)(F32)(G91C)(K54)(LJ8)(MB)(NAH)",
        LetterAlphabet::Base36,
    )
    .unwrap();
    let inserted = match bijection::phi_core(&input, 18, 3) {
        Ok(p) => p,
        Err(e) => return Some(format!("insertion failed: {e}")),
    };
    let text = inserted.format_cycles(LetterAlphabet::Base36).unwrap();
    if text != "(D76)(E3)(F29)(G1)(KC5)(L4J)(M8BA)(NHI)" {
        return Some(format!("insertion produced {text}"));
    }
    match bijection::psi_core(&inserted, 3) {
        Ok((back, 18)) if back == input => None,
        other => Some(format!("extraction produced {other:?}")),
    }
}

fn check_mahonian_denominator(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        let top = n as u64 * (n as u64 - 1) / 2;
        for j in 0..=top {
            let count = counting::mahonian_count(n as u64, j);
            if count.is_zero() {
                continue;
            }
            let value = brute_mahonian_expectation(n, Statistic::Inv, j).unwrap();
            if !(count.clone() % value.denom()).is_zero() {
                return Some(format!(
                    "n={n} j={j}: denominator {} does not divide M = {count}",
                    value.denom()
                ));
            }
        }
    }
    None
}

fn check_brute_partition(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        for k in 1..=n as u64 {
            let mut histogram: BTreeMap<u64, BigInt> = BTreeMap::new();
            for p in enumerate_sn_with_budget(n, max_n).unwrap() {
                *histogram
                    .entry(p.count_k_cycles(k as usize) as u64)
                    .or_insert_with(BigInt::zero) += 1;
            }
            let total: BigInt = histogram.values().sum();
            if total != counting::factorial(n as u64) {
                return Some(format!("n={n} k={k}: {total}"));
            }
        }
    }
    None
}
