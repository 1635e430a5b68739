//! Exact arbitrary-precision integer primitives: power, floor nth root,
//! modular power, and exact division.
//!
//! No floating point enters any code path here. The floor root uses an
//! integer-only Newton iteration seeded from the bit length of the operand,
//! followed by an exact clamp, so results are correct for operands of any
//! size.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Nat, Result};

/// `base^exp`, by binary exponentiation. `0^0` is defined as `1`.
pub fn ipow(base: &Nat, exp: &Nat) -> Nat {
    let mut result = Nat::one();
    if exp.is_zero() {
        return result;
    }
    let mut square = base.clone();
    let top = exp.bits();
    for i in 0..top {
        if exp.bit(i) {
            result *= &square;
        }
        if i + 1 < top {
            square = &square * &square;
        }
    }
    result
}

/// Floor of the real `n`th root of `c`: the unique `r` with
/// `r^n <= c < (r + 1)^n`.
///
/// Newton iteration on `r^n - c` with integer divisions, seeded from
/// `2^ceil(bits(c) / n)`, which always lies at or above the true root. The
/// final position is clamped by exact comparison, so the rounding behaviour
/// of the iteration itself never reaches the caller.
pub fn integer_nth_root(c: &Nat, n: &Nat) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::InvalidArgument(
            "zeroth root is undefined".to_string(),
        ));
    }
    if n.is_one() || c.is_zero() || c.is_one() {
        return Ok(c.clone());
    }
    // A root of 2 or more requires 2^n <= c, i.e. n < bits(c). Otherwise the
    // answer for c >= 2 is exactly 1.
    let bits = c.bits();
    if *n >= Nat::from(bits) {
        return Ok(Nat::one());
    }
    let n_u64 = n.to_u64().expect("n < bits(c), which fits in u64");
    let n_minus_one = n - 1u32;

    let mut r = Nat::one() << bits.div_ceil(n_u64);
    loop {
        let next = (&r * &n_minus_one + c / ipow(&r, &n_minus_one)) / n;
        if next >= r {
            break;
        }
        r = next;
    }
    while ipow(&r, n) > *c {
        r -= 1u32;
    }
    let mut above = &r + 1u32;
    while ipow(&above, n) <= *c {
        r = above;
        above = &r + 1u32;
    }
    Ok(r)
}

/// `base^exp mod modulus`, by square-and-multiply with reduction at every
/// step. Fails if `modulus` is zero.
pub fn modpow(base: &Nat, exp: &Nat, modulus: &Nat) -> Result<Nat> {
    if modulus.is_zero() {
        return Err(Error::InvalidArgument(
            "modulus must be at least 1".to_string(),
        ));
    }
    if modulus.is_one() {
        return Ok(Nat::zero());
    }
    let mut result = Nat::one();
    let mut square = base % modulus;
    let top = exp.bits();
    for i in 0..top {
        if exp.bit(i) {
            result = &result * &square % modulus;
        }
        if i + 1 < top {
            square = &square * &square % modulus;
        }
    }
    Ok(result)
}

/// Exact quotient `a / b`. Fails if `b` is zero or does not divide `a`;
/// the latter signals a violated congruence upstream.
pub fn div_exact(a: &Nat, b: &Nat) -> Result<Nat> {
    if b.is_zero() {
        return Err(Error::InvalidArgument("division by zero".to_string()));
    }
    let (quotient, remainder) = a.div_rem(b);
    if !remainder.is_zero() {
        return Err(Error::NotDivisible {
            dividend: a.clone(),
            divisor: b.clone(),
        });
    }
    Ok(quotient)
}
