//! Permutations stored as ordered lists of cycles.
//!
//! A permutation here is a bijection on a finite set of positive-integer
//! letters; the support does not have to be `{1..n}` (the insertion
//! recursion works on arbitrary letter sets). Fixed points are kept as
//! explicit singleton cycles.
//!
//! Canonical cycle form means: every cycle is rotated so its largest
//! letter comes first, and cycles are ordered by ascending first letter,
//! so the rightmost cycle contains the global maximum. The cycle
//! `(c1 c2 .. cl)` maps `c1 -> c2 -> .. -> cl -> c1`.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letters::LetterAlphabet;

/// A positive-integer letter.
pub type Letter = u32;

/// Display order for cycle notation. `Ascending` is the default order
/// (first letters grow left-to-right, global maximum in the rightmost
/// cycle); `Descending` is the mirrored rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleOrder {
    #[default]
    Ascending,
    Descending,
}

/// A permutation statistic on one-line words over `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// Number of pairs `i < j` with `w[i] > w[j]`.
    Inv,
    /// Sum of descent positions.
    Maj,
    /// Number of descents.
    Des,
    /// Number of singleton cycles.
    FixedPoints,
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Statistic::Inv),
            "maj" => Ok(Statistic::Maj),
            "des" => Ok(Statistic::Des),
            "fixed_points" => Ok(Statistic::FixedPoints),
            other => Err(Error::MalformedInput(format!("unknown statistic '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    cycles: Vec<Vec<Letter>>,
}

impl Permutation {
    /// The permutation of the empty letter set.
    pub fn empty() -> Self {
        Permutation { cycles: Vec::new() }
    }

    /// The identity on an arbitrary letter set, one singleton per letter.
    pub fn identity_on<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        Permutation::from_cycles(letters.into_iter().map(|l| vec![l]).collect())
    }

    /// Build from explicit cycles, kept in the given order and rotation.
    pub fn from_cycles(cycles: Vec<Vec<Letter>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::MalformedInput("empty cycle".into()));
            }
            for &letter in cycle {
                if letter == 0 {
                    return Err(Error::MalformedInput("letters start at 1".into()));
                }
                if !seen.insert(letter) {
                    return Err(Error::MalformedInput(format!("repeated letter {letter}")));
                }
            }
        }
        Ok(Permutation { cycles })
    }

    /// Build from a one-line word over `{1..n}`: position `i` maps to
    /// `values[i-1]`. The result is in canonical form.
    pub fn from_one_line(values: &[Letter]) -> Result<Self> {
        let n = values.len() as Letter;
        let mut seen = vec![false; values.len()];
        for &v in values {
            if v < 1 || v > n {
                return Err(Error::MalformedInput(format!(
                    "letter {v} out of range 1..={n}"
                )));
            }
            if seen[(v - 1) as usize] {
                return Err(Error::MalformedInput(format!("repeated letter {v}")));
            }
            seen[(v - 1) as usize] = true;
        }
        let mut visited = vec![false; values.len()];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[(start - 1) as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut current = start;
            loop {
                visited[(current - 1) as usize] = true;
                cycle.push(current);
                current = values[(current - 1) as usize];
                if current == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        Ok(Permutation { cycles }.canonicalize())
    }

    /// Parse cycle-notation text like `(21)(43)`. The input need not be
    /// canonical; cycle order and rotation are preserved.
    pub fn parse_cycles(text: &str, alphabet: LetterAlphabet) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim_start();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::MalformedInput(format!(
                    "expected '(' at \"{}\"",
                    rest.chars().take(8).collect::<String>()
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::MalformedInput("unbalanced parentheses".into()))?;
            let body = &rest[1..close];
            if body.contains('(') {
                return Err(Error::MalformedInput("nested parentheses".into()));
            }
            let letters = alphabet.parse_cycle_body(body)?;
            if letters.is_empty() {
                return Err(Error::MalformedInput("empty cycle".into()));
            }
            cycles.push(letters);
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(cycles)
    }

    /// Render in canonical cycle notation (default ascending order).
    pub fn format_cycles(&self, alphabet: LetterAlphabet) -> Result<String> {
        self.format_cycles_ordered(alphabet, CycleOrder::Ascending)
    }

    /// Render in canonical cycle notation with an explicit display order.
    pub fn format_cycles_ordered(
        &self,
        alphabet: LetterAlphabet,
        order: CycleOrder,
    ) -> Result<String> {
        let canonical = self.canonicalize();
        let mut rendered: Vec<String> = canonical
            .cycles
            .iter()
            .map(|c| Ok(format!("({})", alphabet.render_cycle(c)?)))
            .collect::<Result<_>>()?;
        if order == CycleOrder::Descending {
            rendered.reverse();
        }
        Ok(rendered.concat())
    }

    pub fn cycles(&self) -> &[Vec<Letter>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<Letter>> {
        self.cycles
    }

    /// Number of letters moved or fixed by this permutation.
    pub fn len(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The letters, in ascending order.
    pub fn support(&self) -> BTreeSet<Letter> {
        self.cycles.iter().flatten().copied().collect()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.cycles.iter().any(|c| c.contains(&letter))
    }

    /// Image of `i`: the letter following `i` in its cycle.
    pub fn letter_at(&self, i: Letter) -> Result<Letter> {
        for cycle in &self.cycles {
            if let Some(pos) = cycle.iter().position(|&l| l == i) {
                return Ok(cycle[(pos + 1) % cycle.len()]);
            }
        }
        Err(Error::Domain(format!("letter {i} not in support")))
    }

    /// True if every cycle is max-first and first letters strictly ascend.
    pub fn is_canonical(&self) -> bool {
        let mut previous_first = 0;
        for cycle in &self.cycles {
            let first = cycle[0];
            if cycle.iter().any(|&l| l > first) {
                return false;
            }
            if first <= previous_first {
                return false;
            }
            previous_first = first;
        }
        true
    }

    /// Rotate each cycle max-first and sort cycles by ascending first
    /// letter. Idempotent; does not change the underlying bijection.
    pub fn canonicalize(&self) -> Permutation {
        let mut cycles: Vec<Vec<Letter>> = self
            .cycles
            .iter()
            .map(|cycle| {
                let max_pos = cycle
                    .iter()
                    .enumerate()
                    .max_by_key(|(_, &l)| l)
                    .map(|(p, _)| p)
                    .unwrap_or(0);
                let mut rotated = Vec::with_capacity(cycle.len());
                rotated.extend_from_slice(&cycle[max_pos..]);
                rotated.extend_from_slice(&cycle[..max_pos]);
                rotated
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        Permutation { cycles }
    }

    /// Number of cycles of length exactly `k`.
    pub fn count_k_cycles(&self, k: usize) -> usize {
        self.cycles.iter().filter(|c| c.len() == k).count()
    }

    /// One-line word; requires support exactly `{1..n}`.
    pub fn one_line(&self) -> Result<Vec<Letter>> {
        let n = self.len() as Letter;
        let mut word = vec![0; n as usize];
        for cycle in &self.cycles {
            for (pos, &letter) in cycle.iter().enumerate() {
                if letter > n {
                    return Err(Error::Domain(format!(
                        "support is not contiguous: letter {letter} with only {n} letters"
                    )));
                }
                word[(letter - 1) as usize] = cycle[(pos + 1) % cycle.len()];
            }
        }
        debug_assert!(word.iter().all(|&w| w > 0));
        Ok(word)
    }

    /// Evaluate a permutation statistic; requires support `{1..n}`.
    pub fn statistic(&self, which: Statistic) -> Result<u64> {
        let word = self.one_line()?;
        Ok(match which {
            Statistic::Inv => {
                let mut inv = 0;
                for i in 0..word.len() {
                    for j in i + 1..word.len() {
                        if word[i] > word[j] {
                            inv += 1;
                        }
                    }
                }
                inv
            }
            Statistic::Des => (1..word.len()).filter(|&i| word[i - 1] > word[i]).count() as u64,
            Statistic::Maj => (1..word.len())
                .filter(|&i| word[i - 1] > word[i])
                .map(|i| i as u64)
                .sum(),
            Statistic::FixedPoints => self.cycles.iter().filter(|c| c.len() == 1).count() as u64,
        })
    }

    /// Relabel letters through the given map; the map must be injective
    /// on the support.
    pub(crate) fn relabel<F: Fn(Letter) -> Letter>(&self, f: F) -> Permutation {
        Permutation {
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&l| f(l)).collect())
                .collect(),
        }
    }
}

/// All one-line words of `{1..n}` in lexicographic order.
pub(crate) fn lex_words(n: u32) -> LexWords {
    LexWords {
        next: Some((1..=n).collect()),
    }
}

pub(crate) struct LexWords {
    next: Option<Vec<Letter>>,
}

impl Iterator for LexWords {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_word(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Advance a word to its lexicographic successor in place. Returns
/// false when the word was already the last one.
fn next_word(word: &mut [Letter]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
