//! The three solution families, their constructive parametrizations, and
//! classification of arbitrary solutions.
//!
//! Every prefix polymorphism has `k = 1` or `k = 2`, and `k = 2` forces
//! `n = 2`. That leaves exactly three disjoint classes, decided by `(k, n)`
//! alone:
//!
//! - **Triangular** (`k = 1`, `n = 2`): substituting `k = 1`, `n = 2` into
//!   the defining equation gives `B = x(x-1)/2`, a triangular number. Every
//!   `t >= 4` works; `t = 2, 3` put `x < B` out of reach.
//! - **Pell** (`k = 2`, `n = 2`): here `x = (1 + sqrt(1 + 8 B^2))/2`, so
//!   `1 + 8 B^2` must be an odd square `z^2`. The pairs solving
//!   `z^2 - 8 y^2 = 1` are generated from the fundamental solution `(3, 1)`
//!   by the integer recurrence `(z, y) -> (3z + 8y, z + 3y)`; the solution
//!   stream starts at the second pair, since the first has `y = 1` which is
//!   no base.
//! - **Fermat** (`k = 1`, `n >= 3`): the equation forces
//!   `x^n = x (mod n)`, i.e. `n` is a *weak Fermat pseudoprime to base x*,
//!   and conversely every such `(t, n)` yields the solution
//!   `(t, n, (t^n - t)/n, 1)` — except the lone degenerate case
//!   `(2, 3, 2, 1)`, where `B = x`. Odd primes `p` always satisfy the
//!   congruence, giving an explicit family with unbounded exponent.
//!
//! Generation is exact everywhere: the Pell stream never touches
//! floating-point powers of `3 + sqrt(8)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intarith::{div_exact, ipow, modpow};
use crate::polymorphism::{verify, PrefixPolymorphism};
use crate::{Error, Nat, Result};

/// Which of the three disjoint families a solution belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionClass {
    /// `k = 1`, `n = 2`.
    Triangular,
    /// `k = 2`, `n = 2`.
    Pell,
    /// `k = 1`, `n >= 3`.
    Fermat,
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionClass::Triangular => "triangular",
            SolutionClass::Pell => "pell",
            SolutionClass::Fermat => "fermat",
        })
    }
}

/// One solution `(z, y)` of the Pell equation `z^2 - 8 y^2 = 1`, together
/// with its position in the stream (`index = 1` is the fundamental solution
/// `(3, 1)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellPair {
    z: Nat,
    y: Nat,
    index: u64,
}

impl PellPair {
    pub fn z(&self) -> &Nat {
        &self.z
    }

    pub fn y(&self) -> &Nat {
        &self.y
    }

    pub fn index(&self) -> u64 {
        self.index
    }
}

/// The triangular-class solution with `x = t`: `(t, 2, t(t-1)/2, 1)`.
/// Defined for `t >= 4`; below that the would-be base does not exceed `x`.
pub fn triangular(t: &Nat) -> Result<PrefixPolymorphism> {
    if *t < Nat::from(4u32) {
        return Err(Error::IndexOutOfRange {
            index: t.clone(),
            min: 4,
        });
    }
    let base = div_exact(&(t * (t - 1u32)), &Nat::from(2u32))
        .expect("t(t-1) is a product of consecutive integers, hence even");
    PrefixPolymorphism::new(t.clone(), Nat::from(2u32), base, Nat::one())
        .map_err(|e| Error::Inconsistency(format!("triangular index {t}: {e}")))
}

/// The first `count` solutions of `z^2 - 8 y^2 = 1`, from the fundamental
/// pair `(3, 1)` via the recurrence `(z, y) -> (3z + 8y, z + 3y)`.
pub fn pell_pairs(count: usize) -> Vec<PellPair> {
    let mut pairs = Vec::with_capacity(count);
    let mut z = Nat::from(3u32);
    let mut y = Nat::one();
    for index in 1..=count as u64 {
        pairs.push(PellPair {
            z: z.clone(),
            y: y.clone(),
            index,
        });
        let next_z = Nat::from(3u32) * &z + Nat::from(8u32) * &y;
        let next_y = &z + Nat::from(3u32) * &y;
        z = next_z;
        y = next_y;
    }
    pairs
}

/// The first `count` Pell-class solutions: `((1 + z)/2, 2, y, 2)` for the
/// pairs starting at index 2. Each is verified before being returned.
pub fn pell_solutions(count: usize) -> Result<Vec<PrefixPolymorphism>> {
    pell_pairs(count.saturating_add(1))
        .into_iter()
        .skip(1)
        .map(|pair| {
            let x = div_exact(&(&pair.z + 1u32), &Nat::from(2u32))
                .expect("z is odd at every index");
            PrefixPolymorphism::new(x, Nat::from(2u32), pair.y, Nat::from(2u32))
                .map_err(|e| Error::Inconsistency(format!("pell index {}: {e}", pair.index)))
        })
        .collect()
}

/// Whether `t^n = t (mod n)`. Primes satisfy this for every `t`; the
/// composites that do for some base are the weak Fermat pseudoprimes to
/// that base (341 to base 2 being the classic one).
pub fn is_weak_fermat_pseudoprime(t: &Nat, n: &Nat) -> Result<bool> {
    if t.is_zero() || n.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "pseudoprime test needs t >= 1 and n >= 1; got t={t}, n={n}"
        )));
    }
    Ok(modpow(t, n, n)? == t % n)
}

/// Result of attempting to build the Fermat-class solution for `(t, n)`.
/// The two empty outcomes mean different things: a failed congruence is the
/// generic obstruction, while the excluded case is the single degenerate
/// quadruple `(2, 3, 2, 1)` whose base collapses onto `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermatOutcome {
    Solution(PrefixPolymorphism),
    CongruenceFails,
    ExcludedCase,
}

impl FermatOutcome {
    pub fn solution(self) -> Option<PrefixPolymorphism> {
        match self {
            FermatOutcome::Solution(q) => Some(q),
            _ => None,
        }
    }
}

/// The Fermat-class solution `(t, n, (t^n - t)/n, 1)`, when `t^n = t (mod n)`
/// and `(t, n)` is not the excluded case `(2, 3)`.
pub fn fermat_solution(t: &Nat, n: &Nat) -> Result<FermatOutcome> {
    let two = Nat::from(2u32);
    let three = Nat::from(3u32);
    if *t < two || *n < three {
        return Err(Error::InvalidArgument(format!(
            "fermat family needs t >= 2 and n >= 3; got t={t}, n={n}"
        )));
    }
    if !is_weak_fermat_pseudoprime(t, n)? {
        return Ok(FermatOutcome::CongruenceFails);
    }
    if *t == two && *n == three {
        return Ok(FermatOutcome::ExcludedCase);
    }
    let base = div_exact(&(ipow(t, n) - t), n).expect("congruence was just checked");
    PrefixPolymorphism::new(t.clone(), n.clone(), base, Nat::one())
        .map(FermatOutcome::Solution)
        .map_err(|e| Error::Inconsistency(format!("fermat pair ({t}, {n}): {e}")))
}

/// The prime instance of the Fermat class: for odd prime `p`, the congruence
/// `t^p = t (mod p)` always holds, so `(t, p, (t^p - t)/p, 1)` is a solution
/// for every `t >= 2` except `(t, p) = (2, 3)`, which returns `None`.
///
/// Primality of `p` is re-checked here by trial division rather than taken
/// on trust from the caller.
pub fn prime_family(t: &Nat, p: &Nat) -> Result<Option<PrefixPolymorphism>> {
    if *t < Nat::from(2u32) {
        return Err(Error::InvalidArgument(format!(
            "prime family needs t >= 2; got t={t}"
        )));
    }
    if *p < Nat::from(3u32) || p.is_even() {
        return Err(Error::InvalidArgument(format!(
            "prime family needs an odd prime exponent; got p={p}"
        )));
    }
    if !is_odd_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "prime family needs a prime exponent; {p} is composite"
        )));
    }
    match fermat_solution(t, p)? {
        FermatOutcome::Solution(q) => Ok(Some(q)),
        FermatOutcome::ExcludedCase => Ok(None),
        FermatOutcome::CongruenceFails => Err(Error::Inconsistency(format!(
            "t^p = t (mod p) must hold for prime p; failed for t={t}, p={p}"
        ))),
    }
}

/// Trial-division primality for odd `p >= 3`. Quadratic in the number of
/// decimal digits, which is fine at the scales enumeration runs at; this is
/// a guard, not a primality-proving facility.
pub fn is_odd_prime(p: &Nat) -> bool {
    if *p < Nat::from(3u32) || p.is_even() {
        return false;
    }
    let mut d = Nat::from(3u32);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 2u32;
    }
    true
}

/// The family of a verified solution, from `(k, n)` alone. The quadruple is
/// re-verified first, and `(k, n)` combinations outside the three families
/// are rejected rather than force-fitted.
pub fn classify(q: &PrefixPolymorphism) -> Result<SolutionClass> {
    if !verify(q.x(), q.n(), q.base(), q.k()).verdict() {
        return Err(Error::InvalidArgument(format!(
            "{q} is not a prefix polymorphism"
        )));
    }
    let one = Nat::one();
    let two = Nat::from(2u32);
    if *q.k() == one && *q.n() == two {
        Ok(SolutionClass::Triangular)
    } else if *q.k() == two && *q.n() == two {
        Ok(SolutionClass::Pell)
    } else if *q.k() == one && *q.n() > two {
        Ok(SolutionClass::Fermat)
    } else {
        Err(Error::InvalidArgument(format!(
            "{q} falls outside the three families (k={}, n={})",
            q.k(),
            q.n()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn parts(q: &PrefixPolymorphism) -> (u64, u64, u64, u64) {
        use num_traits::ToPrimitive;
        (
            q.x().to_u64().unwrap(),
            q.n().to_u64().unwrap(),
            q.base().to_u64().unwrap(),
            q.k().to_u64().unwrap(),
        )
    }

    #[test]
    fn triangular_four_and_five() {
        assert_eq!(parts(&triangular(&nat(4)).unwrap()), (4, 2, 6, 1));
        assert_eq!(parts(&triangular(&nat(5)).unwrap()), (5, 2, 10, 1));
    }

    #[test]
    fn triangular_rejects_small_indices() {
        for t in 0u64..4 {
            assert!(matches!(
                triangular(&nat(t)),
                Err(Error::IndexOutOfRange { min: 4, .. })
            ));
        }
    }

    #[test]
    fn pell_stream_starts_at_the_fundamental_solution() {
        let pairs = pell_pairs(3);
        assert_eq!(
            pairs
                .iter()
                .map(|p| (p.z().clone(), p.y().clone(), p.index()))
                .collect::<Vec<_>>(),
            vec![
                (nat(3), nat(1), 1),
                (nat(17), nat(6), 2),
                (nat(99), nat(35), 3),
            ]
        );
        for p in &pairs {
            assert_eq!(p.z() * p.z(), nat(8) * p.y() * p.y() + 1u32);
        }
    }

    #[test]
    fn pell_solutions_skip_the_unit_base() {
        let sols = pell_solutions(2).unwrap();
        assert_eq!(parts(&sols[0]), (9, 2, 6, 2));
        assert_eq!(parts(&sols[1]), (50, 2, 35, 2));
    }

    #[test]
    fn pseudoprime_test_matches_the_classic_cases() {
        assert!(is_weak_fermat_pseudoprime(&nat(2), &nat(341)).unwrap());
        assert!(!is_weak_fermat_pseudoprime(&nat(2), &nat(4)).unwrap());
        for p in [3u64, 5, 7, 11, 13, 31] {
            for t in 1u64..10 {
                assert!(is_weak_fermat_pseudoprime(&nat(t), &nat(p)).unwrap());
            }
        }
        assert!(is_weak_fermat_pseudoprime(&nat(7), &nat(1)).unwrap());
        assert!(is_weak_fermat_pseudoprime(&nat(1), &nat(6)).unwrap());
    }

    #[test]
    fn pseudoprime_test_rejects_zero_arguments() {
        assert!(is_weak_fermat_pseudoprime(&nat(2), &nat(0)).is_err());
        assert!(is_weak_fermat_pseudoprime(&nat(0), &nat(5)).is_err());
    }

    #[test]
    fn fermat_two_to_the_fifth() {
        let q = fermat_solution(&nat(2), &nat(5)).unwrap().solution().unwrap();
        assert_eq!(parts(&q), (2, 5, 6, 1));
    }

    #[test]
    fn fermat_excluded_case() {
        assert_eq!(
            fermat_solution(&nat(2), &nat(3)).unwrap(),
            FermatOutcome::ExcludedCase
        );
    }

    #[test]
    fn fermat_three_cubed() {
        let q = fermat_solution(&nat(3), &nat(3)).unwrap().solution().unwrap();
        assert_eq!(parts(&q), (3, 3, 8, 1));
    }

    #[test]
    fn fermat_failed_congruence() {
        assert_eq!(
            fermat_solution(&nat(2), &nat(4)).unwrap(),
            FermatOutcome::CongruenceFails
        );
    }

    #[test]
    fn fermat_rejects_domain_violations() {
        assert!(fermat_solution(&nat(1), &nat(5)).is_err());
        assert!(fermat_solution(&nat(2), &nat(2)).is_err());
    }

    #[test]
    fn fermat_solutions_satisfy_the_congruence() {
        for t in 2u64..=30 {
            for n in 3u64..=10 {
                if let FermatOutcome::Solution(_) =
                    fermat_solution(&nat(t), &nat(n)).unwrap()
                {
                    assert!(is_weak_fermat_pseudoprime(&nat(t), &nat(n)).unwrap());
                }
            }
        }
    }

    #[test]
    fn prime_family_examples() {
        let q = prime_family(&nat(2), &nat(5)).unwrap().unwrap();
        assert_eq!(parts(&q), (2, 5, 6, 1));
        let q = prime_family(&nat(3), &nat(5)).unwrap().unwrap();
        assert_eq!(parts(&q), (3, 5, 48, 1));
        assert_eq!(prime_family(&nat(2), &nat(3)).unwrap(), None);
    }

    #[test]
    fn prime_family_rejects_non_primes() {
        assert!(prime_family(&nat(2), &nat(2)).is_err());
        assert!(prime_family(&nat(2), &nat(9)).is_err());
        assert!(prime_family(&nat(2), &nat(341)).is_err());
        assert!(prime_family(&nat(1), &nat(5)).is_err());
    }

    #[test]
    fn trial_division_agrees_with_a_sieve_oracle() {
        // Oracle: mark composites by crossing off multiples.
        let limit = 1000usize;
        let mut is_prime = vec![true; limit + 1];
        is_prime[0] = false;
        is_prime[1] = false;
        for i in 2..=limit {
            if is_prime[i] {
                for m in (i * i..=limit).step_by(i) {
                    is_prime[m] = false;
                }
            }
        }
        for (p, &prime) in is_prime.iter().enumerate() {
            let expected = prime && p % 2 == 1 && p > 2;
            assert_eq!(is_odd_prime(&nat(p as u64)), expected, "p={p}");
        }
    }

    #[test]
    fn classify_covers_the_three_families() {
        let tri = PrefixPolymorphism::new(nat(4), nat(2), nat(6), nat(1)).unwrap();
        let pell = PrefixPolymorphism::new(nat(9), nat(2), nat(6), nat(2)).unwrap();
        let fermat = PrefixPolymorphism::new(nat(2), nat(5), nat(6), nat(1)).unwrap();
        assert_eq!(classify(&tri).unwrap(), SolutionClass::Triangular);
        assert_eq!(classify(&pell).unwrap(), SolutionClass::Pell);
        assert_eq!(classify(&fermat).unwrap(), SolutionClass::Fermat);
    }

    #[test]
    fn classify_rejects_unverified_quadruples() {
        let bogus = PrefixPolymorphism::new_unchecked(nat(3), nat(3), nat(2), nat(2));
        assert!(classify(&bogus).is_err());
    }

    #[test]
    fn class_tags_render_lowercase() {
        assert_eq!(SolutionClass::Triangular.to_string(), "triangular");
        assert_eq!(SolutionClass::Pell.to_string(), "pell");
        assert_eq!(SolutionClass::Fermat.to_string(), "fermat");
    }
}
