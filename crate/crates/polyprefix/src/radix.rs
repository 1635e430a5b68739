//! Base-`B` digit representations.
//!
//! Digits are stored most-significant first, the order numerals are written.
//! [`digit_count`] is the length function `k` with `B^(k-1) <= x < B^k`; it
//! rejects `x = 0`, where that inequality has no solution.
//!
//! Numerals render as subscript-style text: `"213_6"` for bases up to 36
//! (digits `0-9a-z`), and bracketed decimal digit lists such as
//! `"[1,85]_204"` beyond that.

use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::intarith::ipow;
use crate::{Error, Nat, Result};

/// A numeral: a base together with its digits, most-significant first.
///
/// Invariants, enforced at construction: the base is at least 2, every digit
/// is below the base, and the leading digit is nonzero unless the value is
/// zero (represented as the single digit `[0]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    base: Nat,
    digits: Vec<Nat>,
}

impl DigitString {
    pub fn new(base: Nat, digits: Vec<Nat>) -> Result<Self> {
        if base < Nat::from(2u32) {
            return Err(Error::InvalidArgument(format!(
                "numeral base must be at least 2, got {base}"
            )));
        }
        if digits.is_empty() {
            return Err(Error::InvalidArgument(
                "a numeral needs at least one digit".to_string(),
            ));
        }
        if let Some(bad) = digits.iter().find(|d| **d >= base) {
            return Err(Error::InvalidArgument(format!(
                "digit {bad} is not below base {base}"
            )));
        }
        if digits.len() > 1 && digits[0].is_zero() {
            return Err(Error::InvalidArgument(
                "leading digit must be nonzero".to_string(),
            ));
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> &Nat {
        &self.base
    }

    /// Digits, most-significant first.
    pub fn digits(&self) -> &[Nat] {
        &self.digits
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base <= Nat::from(36u32) {
            for d in &self.digits {
                let d = d.to_u32().expect("digit below 36");
                let c = char::from_digit(d, 36).expect("digit below 36");
                write!(f, "{c}")?;
            }
        } else {
            write!(f, "[")?;
            for (i, d) in self.digits.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "_{}", self.base)
    }
}

/// The number of digits `k` of `x` in base `B`: the unique `k` with
/// `B^(k-1) <= x < B^k`. Defined only for `x >= 1`; asking for the digit
/// count of zero is reported as an error rather than answered with 1, since
/// a silent answer would mask bugs upstream.
pub fn digit_count(x: &Nat, base: &Nat) -> Result<Nat> {
    check_base(base)?;
    if x.is_zero() {
        return Err(Error::InvalidArgument(
            "digit count is undefined for 0".to_string(),
        ));
    }
    let mut rest = x.clone();
    let mut count = 0u64;
    while !rest.is_zero() {
        rest /= base;
        count += 1;
    }
    Ok(Nat::from(count))
}

/// The base-`B` numeral of `x`. Zero is the single digit `[0]`; for
/// `x >= 1` the length equals [`digit_count`]`(x, B)`.
pub fn to_digits(x: &Nat, base: &Nat) -> Result<DigitString> {
    check_base(base)?;
    if x.is_zero() {
        return Ok(DigitString {
            base: base.clone(),
            digits: vec![Nat::zero()],
        });
    }
    let mut rest = x.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(base);
        digits.push(r);
        rest = q;
    }
    digits.reverse();
    Ok(DigitString {
        base: base.clone(),
        digits,
    })
}

/// Positional value of a numeral. Inverse of [`to_digits`]: digits are read
/// most-significant first (Horner evaluation). Digit-range errors are caught
/// when the [`DigitString`] is built, so this cannot fail.
pub fn from_digits(numeral: &DigitString) -> Nat {
    let mut acc = Nat::zero();
    for d in &numeral.digits {
        acc = acc * &numeral.base + d;
    }
    acc
}

/// Writes the numeral of `n` immediately to the left of the numeral of `x`
/// in base `B` and returns the value: `B^k * n + x` with `k` the digit
/// count of `x`. For `n = 0` this degenerates to `x` itself.
pub fn concat_prefix(n: &Nat, x: &Nat, base: &Nat) -> Result<Nat> {
    let k = digit_count(x, base)?;
    Ok(ipow(base, &k) * n + x)
}

fn check_base(base: &Nat) -> Result<()> {
    if *base < Nat::from(2u32) {
        return Err(Error::InvalidArgument(format!(
            "numeral base must be at least 2, got {base}"
        )));
    }
    Ok(())
}
