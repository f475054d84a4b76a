use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text or value lists that do not describe a permutation.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A value outside an operation's domain (letter not in support,
    /// position out of range, non-contiguous support, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter the underlying formula is not stated for (e.g. k = 1
    /// where the derivation needs k > 1).
    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    /// An expectation conditioned on an empty set of permutations.
    #[error("empty population: {0}")]
    EmptyPopulation(String),

    /// An enumeration larger than the configured budget.
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    /// A caller handed a function input violating its contract
    /// (e.g. non-canonical cycles where canonical form is required).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A letter that the selected alphabet cannot render.
    #[error("rendering error: {0}")]
    Render(String),

    /// Network or cache failure in the OEIS client.
    #[error("oeis: {0}")]
    Oeis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
