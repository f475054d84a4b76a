//! A reversible letter-insertion map on canonical cycle notation.
//!
//! `phi_core` inserts a fresh letter `x` into a permutation written in
//! canonical cycle form; `psi_core` removes one letter. The two maps are
//! mutually inverse, and when `k` does not divide the size of the larger
//! permutation they preserve the number of k-cycles.
//!
//! Both maps act on the rightmost cycle and recurse leftward, moving a
//! letter into or out of the remaining cycles whenever the rightmost
//! cycle would otherwise change its k-cycle status. Case dispatch is
//! strictly top-down: a fresh maximum always becomes a new singleton
//! (`phi_a`), even if the rightmost cycle has length `k`.
//!
//! `insert`/`extract` wrap the core maps with the order-preserving
//! relabeling that turns them into a bijection
//! `S_{n-1} x [n] <-> S_n` on contiguous supports.

use crate::error::{Error, Result};
use crate::perm::{Letter, Permutation};

/// Which rewrite rule fired at one recursion level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// `x` exceeds every letter: append the singleton `(x)`.
    PhiA,
    /// Rightmost cycle has length `k`: eject its second letter into the
    /// remaining cycles and close the cycle with `x`.
    PhiB,
    /// Rightmost cycle has length `k-1` and other cycles exist: pull a
    /// letter out of them and grow the cycle to length `k+1`.
    PhiC,
    /// Otherwise: append `x` to the rightmost cycle.
    PhiD,
    /// Rightmost cycle is a singleton: delete it and return its letter.
    PsiA,
    /// Rightmost cycle has length `k+1`: eject its second letter into
    /// the remaining cycles, return its last letter.
    PsiB,
    /// Rightmost cycle has length `k` and other cycles exist: pull a
    /// letter out of them, return the cycle's last letter.
    PsiC,
    /// Otherwise: remove and return the rightmost cycle's last letter.
    PsiD,
}

impl Rule {
    pub fn label(&self) -> &'static str {
        match self {
            Rule::PhiA => "phi_a",
            Rule::PhiB => "phi_b",
            Rule::PhiC => "phi_c",
            Rule::PhiD => "phi_d",
            Rule::PsiA => "psi_a",
            Rule::PsiB => "psi_b",
            Rule::PsiC => "psi_c",
            Rule::PsiD => "psi_d",
        }
    }

    pub fn is_phi(&self) -> bool {
        matches!(self, Rule::PhiA | Rule::PhiB | Rule::PhiC | Rule::PhiD)
    }

    /// True for the rules that recurse on the remaining cycles.
    pub fn recurses(&self) -> bool {
        matches!(self, Rule::PhiB | Rule::PhiC | Rule::PsiB | Rule::PsiC)
    }
}

/// One recursion level: the rule, the rightmost cycle it rewrote, and
/// the letters that moved. `cycle_before` is None when a cycle was
/// created (`phi_a`), `cycle_after` is None when one was deleted
/// (`psi_a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub cycle_before: Option<Vec<Letter>>,
    pub cycle_after: Option<Vec<Letter>>,
    pub letters_in: Vec<Letter>,
    pub letters_out: Vec<Letter>,
}

/// The full record of one `phi_core`/`psi_core` application, outermost
/// rule first. Each step touches a distinct cycle, so replaying the
/// local rewrites forward reproduces the output and replaying them
/// backward reproduces the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionTrace {
    pub steps: Vec<TraceStep>,
    /// True when `k` does not divide the size of the larger permutation;
    /// only then is the k-cycle count guaranteed to be preserved.
    pub preservation_guaranteed: bool,
}

/// The k-cycle count is guaranteed preserved by insert/extract between
/// `S_{n-1}` and `S_n` exactly when `k` does not divide `n`.
pub fn preserves_k_cycles(n: u64, k: u64) -> bool {
    k != 0 && n % k != 0
}

struct Engine {
    k: usize,
    steps: Vec<TraceStep>,
}

impl Engine {
    /// Insert `x` into `cycles` (canonical, ascending first letters).
    fn phi(&mut self, cycles: &mut Vec<Vec<Letter>>, x: Letter) {
        if cycles.last().is_none_or(|c| x > c[0]) {
            cycles.push(vec![x]);
            self.steps.push(TraceStep {
                rule: Rule::PhiA,
                cycle_before: None,
                cycle_after: Some(vec![x]),
                letters_in: vec![x],
                letters_out: vec![],
            });
            self.check_canonical(cycles);
            return;
        }
        let last = cycles.pop().expect("nonempty by the guard above");
        let len = last.len();
        if len == self.k {
            // (phi_b) keep the cycle a k-cycle: eject the second letter
            // into the remaining cycles, close with x.
            let ejected = last[1];
            self.phi(cycles, ejected);
            let mut after = Vec::with_capacity(len);
            after.push(last[0]);
            after.extend_from_slice(&last[2..]);
            after.push(x);
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PhiB,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![x],
                letters_out: vec![ejected],
            });
        } else if len == self.k - 1 && !cycles.is_empty() {
            // (phi_c) the cycle would become a k-cycle: pull one more
            // letter out of the remaining cycles and overshoot to k+1.
            let pulled = self.psi(cycles);
            let mut after = Vec::with_capacity(len + 2);
            after.push(last[0]);
            after.push(pulled);
            after.extend_from_slice(&last[1..]);
            after.push(x);
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PhiC,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![pulled, x],
                letters_out: vec![],
            });
        } else {
            // (phi_d) harmless growth: append x.
            let mut after = last.clone();
            after.push(x);
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PhiD,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![x],
                letters_out: vec![],
            });
        }
        self.check_canonical(cycles);
    }

    /// Remove one letter from `cycles` and return it.
    fn psi(&mut self, cycles: &mut Vec<Vec<Letter>>) -> Letter {
        let last = cycles.pop().expect("psi needs a nonempty permutation");
        let len = last.len();
        if len == 1 {
            // (psi_a) delete the singleton.
            let out = last[0];
            self.steps.push(TraceStep {
                rule: Rule::PsiA,
                cycle_before: Some(last),
                cycle_after: None,
                letters_in: vec![],
                letters_out: vec![out],
            });
            self.check_canonical(cycles);
            return out;
        }
        let out;
        if len == self.k + 1 {
            // (psi_b) shrink a (k+1)-cycle past k: eject the second
            // letter into the remaining cycles, return the last.
            let ejected = last[1];
            out = last[len - 1];
            self.phi(cycles, ejected);
            let mut after = Vec::with_capacity(len - 2);
            after.push(last[0]);
            after.extend_from_slice(&last[2..len - 1]);
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PsiB,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![],
                letters_out: vec![ejected, out],
            });
        } else if len == self.k && !cycles.is_empty() {
            // (psi_c) keep the cycle a k-cycle: pull a letter out of the
            // remaining cycles, return the last letter.
            let pulled = self.psi(cycles);
            out = last[len - 1];
            let mut after = Vec::with_capacity(len);
            after.push(last[0]);
            after.push(pulled);
            after.extend_from_slice(&last[1..len - 1]);
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PsiC,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![pulled],
                letters_out: vec![out],
            });
        } else {
            // (psi_d) harmless shrink: drop the last letter.
            let mut after = last.clone();
            out = after.pop().expect("len >= 2 here");
            cycles.push(after.clone());
            self.steps.push(TraceStep {
                rule: Rule::PsiD,
                cycle_before: Some(last),
                cycle_after: Some(after),
                letters_in: vec![],
                letters_out: vec![out],
            });
        }
        self.check_canonical(cycles);
        out
    }

    /// Every intermediate cycle list stays canonical; violating this
    /// would break the recursion's invariants.
    fn check_canonical(&self, cycles: &[Vec<Letter>]) {
        debug_assert!(
            cycles
                .windows(2)
                .all(|pair| pair[0][0] < pair[1][0])
                && cycles.iter().all(|c| c.iter().all(|&l| l <= c[0])),
            "intermediate cycles left canonical form"
        );
    }
}

fn validate_core_input(p: &Permutation, k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::Unsupported(
            "the insertion map is defined for k >= 2".into(),
        ));
    }
    if !p.is_canonical() {
        return Err(Error::Contract(
            "input permutation must be in canonical cycle form".into(),
        ));
    }
    Ok(())
}

/// Insert the fresh letter `x` into canonical `p`, preserving canonical
/// form. Works on arbitrary letter sets; no relabeling happens.
pub fn phi_core(p: &Permutation, x: Letter, k: u64) -> Result<Permutation> {
    Ok(phi_core_traced(p, x, k)?.0)
}

/// As [`phi_core`], also returning the rule trace.
pub fn phi_core_traced(p: &Permutation, x: Letter, k: u64) -> Result<(Permutation, InsertionTrace)> {
    validate_core_input(p, k)?;
    if x == 0 {
        return Err(Error::Domain("letters start at 1".into()));
    }
    if p.contains(x) {
        return Err(Error::Domain(format!("letter {x} is already present")));
    }
    let mut cycles = p.cycles().to_vec();
    let mut engine = Engine {
        k: k as usize,
        steps: Vec::new(),
    };
    engine.phi(&mut cycles, x);
    engine.steps.reverse();
    let result = Permutation::from_cycles(cycles)?;
    debug_assert!(result.is_canonical());
    let trace = InsertionTrace {
        steps: engine.steps,
        preservation_guaranteed: preserves_k_cycles(result.len() as u64, k),
    };
    Ok((result, trace))
}

/// Remove one letter from nonempty canonical `p`, returning the smaller
/// permutation and the letter. Inverse to [`phi_core`].
pub fn psi_core(p: &Permutation, k: u64) -> Result<(Permutation, Letter)> {
    let (result, letter, _) = psi_core_traced(p, k)?;
    Ok((result, letter))
}

/// As [`psi_core`], also returning the rule trace.
pub fn psi_core_traced(p: &Permutation, k: u64) -> Result<(Permutation, Letter, InsertionTrace)> {
    validate_core_input(p, k)?;
    if p.is_empty() {
        return Err(Error::Domain(
            "cannot remove a letter from the empty permutation".into(),
        ));
    }
    let size = p.len() as u64;
    let mut cycles = p.cycles().to_vec();
    let mut engine = Engine {
        k: k as usize,
        steps: Vec::new(),
    };
    let letter = engine.psi(&mut cycles);
    engine.steps.reverse();
    let result = Permutation::from_cycles(cycles)?;
    debug_assert!(result.is_canonical());
    let trace = InsertionTrace {
        steps: engine.steps,
        preservation_guaranteed: preserves_k_cycles(size, k),
    };
    Ok((result, letter, trace))
}

fn require_contiguous(p: &Permutation, what: &str) -> Result<u64> {
    let n = p.len() as Letter;
    let support = p.support();
    if support.len() as Letter != n || support.last().copied().unwrap_or(0) != n {
        return Err(Error::Domain(format!("{what} must have support 1..={n}")));
    }
    Ok(n as u64)
}

/// The bijection `S_{n-1} x [n] -> S_n`: relabel `p` by incrementing
/// every letter `>= x`, then insert `x` with [`phi_core`].
pub fn insert(p: &Permutation, x: Letter, k: u64) -> Result<Permutation> {
    Ok(insert_traced(p, x, k)?.0)
}

/// As [`insert`], also returning the trace (in relabeled letters).
pub fn insert_traced(p: &Permutation, x: Letter, k: u64) -> Result<(Permutation, InsertionTrace)> {
    let n = require_contiguous(p, "insert input")? + 1;
    if x < 1 || x as u64 > n {
        return Err(Error::Domain(format!("x = {x} is outside 1..={n}")));
    }
    let relabeled = p
        .relabel(|l| if l >= x { l + 1 } else { l })
        .canonicalize();
    phi_core_traced(&relabeled, x, k)
}

/// The inverse bijection `S_n -> S_{n-1} x [n]`: remove a letter with
/// [`psi_core`], then decrement every letter above it.
pub fn extract(p: &Permutation, k: u64) -> Result<(Permutation, Letter)> {
    let (residual, letter, _) = extract_traced(p, k)?;
    Ok((residual, letter))
}

/// As [`extract`], also returning the trace (in original letters).
pub fn extract_traced(p: &Permutation, k: u64) -> Result<(Permutation, Letter, InsertionTrace)> {
    require_contiguous(p, "extract input")?;
    let canonical = p.canonicalize();
    let (residual, letter, trace) = psi_core_traced(&canonical, k)?;
    let relabeled = residual
        .relabel(|l| if l > letter { l - 1 } else { l })
        .canonicalize();
    Ok((relabeled, letter, trace))
}

/// Apply a trace's local rewrites to the input cycles; reproduces the
/// recursion's output.
pub fn replay_forward(input: &Permutation, trace: &InsertionTrace) -> Result<Permutation> {
    let mut cycles = input.canonicalize().into_cycles();
    for step in &trace.steps {
        apply_rewrite(&mut cycles, &step.cycle_before, &step.cycle_after)?;
    }
    cycles.sort_by_key(|c| c[0]);
    Permutation::from_cycles(cycles)
}

/// Undo a trace's local rewrites starting from the output cycles;
/// reproduces the recursion's input.
pub fn replay_backward(output: &Permutation, trace: &InsertionTrace) -> Result<Permutation> {
    let mut cycles = output.canonicalize().into_cycles();
    for step in trace.steps.iter().rev() {
        apply_rewrite(&mut cycles, &step.cycle_after, &step.cycle_before)?;
    }
    cycles.sort_by_key(|c| c[0]);
    Permutation::from_cycles(cycles)
}

fn apply_rewrite(
    cycles: &mut Vec<Vec<Letter>>,
    remove: &Option<Vec<Letter>>,
    add: &Option<Vec<Letter>>,
) -> Result<()> {
    if let Some(cycle) = remove {
        let position = cycles
            .iter()
            .position(|c| c == cycle)
            .ok_or_else(|| Error::Contract(format!("trace refers to missing cycle {cycle:?}")))?;
        cycles.remove(position);
    }
    if let Some(cycle) = add {
        cycles.push(cycle.clone());
    }
    Ok(())
}
