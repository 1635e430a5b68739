//! Exact arithmetic for *prefix polymorphisms*: quadruples `(x, n, B, k)` of
//! positive integers with `B >= 2` such that
//!
//! ```text
//! x^n = B^k * n + x,      where k is the number of digits of x in base B.
//! ```
//!
//! Equivalently, the base-`B` numeral of `x^n` is the numeral of `n` written
//! immediately to the left of the numeral of `x`. The decimal computation
//! `5^2 = 25` is the motivating instance: the exponent `2` sits directly in
//! front of the base `5`.
//!
//! Every solution falls into one of three disjoint families, decided by
//! `(k, n)` alone:
//!
//! | family     | k | n    | parametrization                          |
//! |------------|---|------|------------------------------------------|
//! | triangular | 1 | 2    | `(t, 2, t(t-1)/2, 1)` for `t >= 4`       |
//! | pell       | 2 | 2    | from solutions of `z^2 - 8 y^2 = 1`      |
//! | fermat     | 1 | >= 3 | `(t, n, (t^n - t)/n, 1)` when `n` is a weak Fermat pseudoprime to base `t` |
//!
//! The crate provides:
//!
//! - [`intarith`] — arbitrary-precision power, floor nth root, modular power,
//!   and exact division; integer-only throughout.
//! - [`radix`] — base-`B` digit strings, digit counts, and the
//!   prefix-concatenation operator.
//! - [`polymorphism`] — verification reports, the candidate root formula
//!   `x = floor((B^k n)^(1/n)) + 1`, and the per-base solver.
//! - [`classes`] — constructive enumeration of the three families and
//!   classification of arbitrary solutions.
//! - [`search`] — an exhaustive brute-force oracle over bounded `(x, n, k)`
//!   ranges that independently re-checks the structural facts above instead
//!   of assuming them.
//!
//! All numbers are [`Nat`]s (arbitrary-precision non-negative integers), so
//! quantities like `(2^341 - 2)/341` are handled exactly.
//!
//! ```
//! use polyprefix::polymorphism::{solve, verify};
//! use polyprefix::Nat;
//!
//! // 5^2 = 25: the exponent prefixed to the base, in base 10.
//! let report = verify(
//!     &Nat::from(5u32),
//!     &Nat::from(2u32),
//!     &Nat::from(10u32),
//!     &Nat::from(1u32),
//! );
//! assert!(report.verdict());
//!
//! // Solving from the other direction recovers x = 5.
//! let found = solve(&Nat::from(10u32), &Nat::from(2u32)).unwrap().unwrap();
//! assert_eq!(found.x(), &Nat::from(5u32));
//! ```

pub mod classes;
pub mod intarith;
pub mod polymorphism;
pub mod radix;
pub mod search;

#[cfg(doctest)]
mod book;

/// Arbitrary-precision non-negative integer. Every quantity in the library
/// (`x`, `n`, `B`, `k`, family indices, digit values) is a `Nat`; all
/// arithmetic on them is exact.
pub type Nat = num_bigint::BigUint;

pub use classes::{FermatOutcome, PellPair, SolutionClass};
pub use polymorphism::{PrefixPolymorphism, VerifyReport};
pub use radix::DigitString;
pub use search::{SearchBounds, SearchResult, Violation, ViolationKind};

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Exact division was requested but the divisor does not divide the
    /// dividend.
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: Nat, divisor: Nat },
    /// A family index below the smallest admissible value.
    #[error("family index must be at least {min}, got {index}")]
    IndexOutOfRange { index: Nat, min: u32 },
    /// A value the library constructed itself failed a check that its own
    /// invariants guarantee. Seeing this means a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
