//! Rank-metric coding toolkit built around error-correcting pairs.
//!
//! The crate works over a tower F_q ⊆ F_{q^m} (optionally ⊆ F_{q^n}) and
//! provides the pieces needed to construct and decode rank-metric codes by
//! pairs: the matrix representation of extension-field vectors, star products
//! and their transposed pairing, linearized polynomials with interpolation,
//! Gabidulin and skew-cyclic code constructions, pair-based decoders on both
//! the extension side and the matrix side, and verifiers for minimum-rank-
//! distance bounds.
//!
//! Everything is sized for desk-scale parameters (q^m up to 2^16) and every
//! nontrivial claim is checkable by brute force: distances enumerate the code,
//! bound verifiers test their premises instead of assuming them, and the
//! maximum-likelihood oracle in [`code`] is the reference every decoder is
//! compared against.
//!
//! Start with the runnable examples (`cargo run --example gabidulin_roundtrip`)
//! or the `recp` command-line tool in the companion crate.

pub mod bounds;
pub mod code;
pub mod decoder;
pub mod families;
pub mod field;
pub mod hamming;
pub mod json;
pub mod linalg;
pub mod linpoly;
pub mod seeding;
pub mod star;

/// Enumeration cap for brute-force operations (distance, ML decoding).
pub const BRUTE_FORCE_CAP: u128 = 1 << 20;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A field, code, or pair could not be built from the given data.
    #[error("construction: {0}")]
    Construction(String),
    /// Parameters outside the supported range (q > 16, n > m where a length-n
    /// basis vector is required, ...).
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    /// Malformed input: dimension mismatch, out-of-range element, bad index set.
    #[error("parameter: {0}")]
    Parameter(String),
    /// A brute-force enumeration would exceed [`BRUTE_FORCE_CAP`].
    #[error("brute force over {size} elements exceeds cap {cap}")]
    TooLarge { size: u128, cap: u128 },
    /// Input data is internally inconsistent (e.g. an erasure system with no
    /// solution, meaning the received word is not explainable by the support).
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A randomized search gave up (e.g. no normal element found in budget).
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
