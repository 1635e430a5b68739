//! The central objects and decision procedures.
//!
//! A quadruple `(x, n, B, k)` of positive integers with `B >= 2` is a
//! *prefix polymorphism* when
//!
//! ```text
//! x^n = B^k * n + x    and    B^(k-1) <= x < B^k,
//! ```
//!
//! the second condition saying that `x` has exactly `k` digits in base `B`.
//! Two consequences pin the domain down: `x >= 2` (else `B^k n = 0`) and
//! `n >= 2` (else `B^k = 0`).
//!
//! The key computational fact: the polynomial `f(x) = x^n - x - c` with
//! `n >= 2` and `c > 1` has exactly one positive real root, and that root
//! lies strictly between `c^(1/n)` and `c^(1/n) + 1`. So if `f` has an
//! integer root at all, it can only be `floor(c^(1/n)) + 1`. With
//! `c = B^k * n` this gives [`candidate_x`], and [`solve`] only ever has to
//! test one candidate per admissible `k`.
//!
//! [`verify`] never fails: it evaluates each defining condition separately
//! and reports the decomposition, which makes near-misses visible. The
//! classic one is `(2, 3, 2, 1)`: `2^3 = 2^1*3 + 2 = 8` holds, but `2` has
//! two binary digits, not one.

use std::fmt;

use num_traits::Zero;

use crate::intarith::{integer_nth_root, ipow, modpow};
use crate::radix::digit_count;
use crate::{Error, Nat, Result};

/// A verified solution of the defining equation. Constructing one through
/// [`PrefixPolymorphism::new`] runs [`verify`]; a value of this type always
/// satisfies both defining conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixPolymorphism {
    x: Nat,
    n: Nat,
    base: Nat,
    k: Nat,
}

impl PrefixPolymorphism {
    /// Builds the quadruple after checking the defining conditions; fails
    /// with the verification breakdown otherwise.
    pub fn new(x: Nat, n: Nat, base: Nat, k: Nat) -> Result<Self> {
        let report = verify(&x, &n, &base, &k);
        if !report.verdict() {
            return Err(Error::InvalidArgument(format!(
                "({x}, {n}, {base}, {k}) is not a prefix polymorphism: \
                 equation_holds={}, digit_count_holds={}, domain_ok={}",
                report.equation_holds(),
                report.digit_count_holds(),
                report.domain_ok(),
            )));
        }
        Ok(Self { x, n, base, k })
    }

    /// Builds the quadruple without any checking. Exists so tests can feed
    /// deliberately broken quadruples to the search validators.
    #[doc(hidden)]
    pub fn new_unchecked(x: Nat, n: Nat, base: Nat, k: Nat) -> Self {
        Self { x, n, base, k }
    }

    pub fn x(&self) -> &Nat {
        &self.x
    }

    pub fn n(&self) -> &Nat {
        &self.n
    }

    pub fn base(&self) -> &Nat {
        &self.base
    }

    pub fn k(&self) -> &Nat {
        &self.k
    }

    pub fn into_parts(self) -> (Nat, Nat, Nat, Nat) {
        (self.x, self.n, self.base, self.k)
    }
}

impl fmt::Display for PrefixPolymorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.n, self.base, self.k)
    }
}

/// Outcome of checking a quadruple against the two defining conditions plus
/// the domain restrictions, each evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    equation_holds: bool,
    digit_count_holds: bool,
    domain_ok: bool,
    computed_k: Option<Nat>,
    verdict: bool,
}

impl VerifyReport {
    /// Whether `x^n = B^k * n + x`.
    pub fn equation_holds(&self) -> bool {
        self.equation_holds
    }

    /// Whether `k` equals the digit count of `x` in base `B`.
    pub fn digit_count_holds(&self) -> bool {
        self.digit_count_holds
    }

    /// Whether `x >= 2`, `n >= 2`, `B >= 2` and `k >= 1`.
    pub fn domain_ok(&self) -> bool {
        self.domain_ok
    }

    /// The digit count of `x` in base `B`, when `x >= 1` and `B >= 2` make
    /// it well defined.
    pub fn computed_k(&self) -> Option<&Nat> {
        self.computed_k.as_ref()
    }

    /// Conjunction of the three conditions.
    pub fn verdict(&self) -> bool {
        self.verdict
    }
}

/// Checks `(x, n, B, k)` against the definition. Total: illegal inputs are
/// reported in the fields, never thrown.
pub fn verify(x: &Nat, n: &Nat, base: &Nat, k: &Nat) -> VerifyReport {
    let two = Nat::from(2u32);
    let domain_ok = *x >= two && *n >= two && *base >= two && !k.is_zero();
    let computed_k = if !x.is_zero() && *base >= two {
        Some(digit_count(x, base).expect("x >= 1 and base >= 2"))
    } else {
        None
    };
    let equation_holds = ipow(x, n) == ipow(base, k) * n + x;
    let digit_count_holds = computed_k.as_ref() == Some(k);
    let verdict = equation_holds && digit_count_holds && domain_ok;
    VerifyReport {
        equation_holds,
        digit_count_holds,
        domain_ok,
        computed_k,
        verdict,
    }
}

/// The only integer that can solve `x^n = B^k * n + x` for the given
/// `(B, n, k)`: `floor((B^k * n)^(1/n)) + 1`. Whether it actually solves the
/// equation still has to be checked with [`verify`].
pub fn candidate_x(base: &Nat, n: &Nat, k: &Nat) -> Result<Nat> {
    let two = Nat::from(2u32);
    if *base < two || *n < two || k.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "candidate needs B >= 2, n >= 2, k >= 1; got B={base}, n={n}, k={k}"
        )));
    }
    let c = ipow(base, k) * n;
    Ok(integer_nth_root(&c, n)? + 1u32)
}

/// Finds the prefix polymorphism with the given base and exponent, if one
/// exists.
///
/// Only `k = 1` and `k = 2` can occur, and `k = 2` only together with
/// `n = 2` (facts the search module re-checks by brute force), so at most
/// two candidates need testing. Both can genuinely verify for the same
/// `(B, n)` — with base 6 and exponent 2, both `(4, 2, 6, 1)` and
/// `(9, 2, 6, 2)` are solutions — in which case the single-digit solution
/// is returned.
pub fn solve(base: &Nat, n: &Nat) -> Result<Option<PrefixPolymorphism>> {
    let two = Nat::from(2u32);
    if *base < two || *n < two {
        return Err(Error::InvalidArgument(format!(
            "solve needs B >= 2 and n >= 2; got B={base}, n={n}"
        )));
    }
    let ks: &[u32] = if *n == two { &[1, 2] } else { &[1] };
    for k in ks {
        let k = Nat::from(*k);
        let x = candidate_x(base, n, &k)?;
        if verify(&x, n, base, &k).verdict() {
            let found = PrefixPolymorphism::new(x, n.clone(), base.clone(), k)
                .expect("candidate was just verified");
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Whether `x^n` ends, in base `B`, with the digits of `x`; equivalently
/// `x^n = x (mod B^k)` with `k` the digit count of `x`.
pub fn is_n_polymorphic(x: &Nat, n: &Nat, base: &Nat) -> Result<bool> {
    let two = Nat::from(2u32);
    if x.is_zero() || *n < two || *base < two {
        return Err(Error::InvalidArgument(format!(
            "polymorphism test needs x >= 1, n >= 2, B >= 2; got x={x}, n={n}, B={base}"
        )));
    }
    let k = digit_count(x, base)?;
    let modulus = ipow(base, &k);
    Ok(modpow(x, n, &modulus)? == x % &modulus)
}
