//! Exhaustive brute-force oracle over bounded ranges, plus validators that
//! re-check the structural facts the rest of the crate relies on.
//!
//! The search iterates `(x, n)` and *derives* the base instead of iterating
//! it: rearranging the defining equation, `c = x^n - x` must factor as
//! `B^k * n`, so `n` must divide `c` and `m = c / n` must be an exact `k`th
//! power with root `B >= 2` whose digit count of `x` is `k`. The base is
//! therefore determined by `(x, n, k)`, which makes a bounded `(x, n, k)`
//! sweep complete — no bound on `B` is needed.
//!
//! `k_max` deliberately defaults to 6, well above the 2 that actually
//! occurs, so that the "no solutions with three or more digits" fact is
//! exercised by the sweep instead of baked into it. Everything stays in
//! exact integer arithmetic, including the `k`th-power test (floor root,
//! then re-exponentiation).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::classes::{classify, SolutionClass};
use crate::intarith::{integer_nth_root, ipow};
use crate::polymorphism::{candidate_x, verify, PrefixPolymorphism};
use crate::radix::digit_count;
use crate::{Error, Nat, Result};

/// Default upper bound on the digit count probed per `(x, n)` pair.
pub const DEFAULT_K_MAX: u32 = 6;

/// Inclusive search bounds: `x` in `[2, x_max]`, `n` in `[2, n_max]`,
/// `k` in `[1, k_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    x_max: Nat,
    n_max: Nat,
    k_max: Nat,
}

impl SearchBounds {
    /// Bounds with the default `k_max` of [`DEFAULT_K_MAX`].
    pub fn new(x_max: Nat, n_max: Nat) -> Result<Self> {
        Self::with_k_max(x_max, n_max, Nat::from(DEFAULT_K_MAX))
    }

    pub fn with_k_max(x_max: Nat, n_max: Nat, k_max: Nat) -> Result<Self> {
        let two = Nat::from(2u32);
        if x_max < two || n_max < two || k_max.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "bounds need x_max >= 2, n_max >= 2, k_max >= 1; \
                 got x_max={x_max}, n_max={n_max}, k_max={k_max}"
            )));
        }
        Ok(Self {
            x_max,
            n_max,
            k_max,
        })
    }

    pub fn x_max(&self) -> &Nat {
        &self.x_max
    }

    pub fn n_max(&self) -> &Nat {
        &self.n_max
    }

    pub fn k_max(&self) -> &Nat {
        &self.k_max
    }
}

/// Which structural fact a quadruple contradicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// The quadruple does not satisfy the defining equation, digit count,
    /// or domain restrictions at all.
    FailsVerification,
    /// A solution with `k >= 3`; none exist.
    DigitCountAboveTwo,
    /// A solution with `k = 2` and `n >= 3`; two digits force `n = 2`.
    HighExponentTwoDigits,
    /// `(k - 1)(n - 1)` exceeds the digit count of `n` in base `B`, which
    /// every solution must respect.
    DigitBoundExceeded,
    /// `x` differs from `floor((B^k n)^(1/n)) + 1`, the only integer the
    /// equation can possibly have as a root.
    CandidateFormulaMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::FailsVerification => "fails verification",
            ViolationKind::DigitCountAboveTwo => "digit count above two",
            ViolationKind::HighExponentTwoDigits => "two digits with exponent above two",
            ViolationKind::DigitBoundExceeded => "digit bound exceeded",
            ViolationKind::CandidateFormulaMismatch => "candidate formula mismatch",
        })
    }
}

/// Diagnostic record for a quadruple that contradicts one of the validated
/// facts. Genuine search output never produces these; they exist so that
/// anomalies would be reported rather than silently trusted away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub quadruple: PrefixPolymorphism,
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.kind, self.quadruple, self.detail)
    }
}

/// Everything a bounded sweep found: solutions with their classes, sorted
/// lexicographically by `(x, n, k)`, plus any violation records (expected
/// empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    solutions: Vec<(PrefixPolymorphism, SolutionClass)>,
    bounds: SearchBounds,
    violations: Vec<Violation>,
}

impl SearchResult {
    pub fn solutions(&self) -> &[(PrefixPolymorphism, SolutionClass)] {
        &self.solutions
    }

    pub fn bounds(&self) -> &SearchBounds {
        &self.bounds
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

/// Single-threaded exhaustive sweep. Finds every prefix polymorphism with
/// `x <= x_max`, `n <= n_max`, `k <= k_max`.
pub fn brute_force(bounds: &SearchBounds) -> SearchResult {
    brute_force_with_workers(bounds, 1)
}

/// Exhaustive sweep with the `x` range partitioned across `workers`
/// threads. Workers share nothing; results are merged and sorted before
/// return, so the output is identical for every worker count.
pub fn brute_force_with_workers(bounds: &SearchBounds, workers: usize) -> SearchResult {
    let workers = workers.max(1);
    let x_max = bounds.x_max.to_u64().unwrap_or(u64::MAX);
    let n_max = bounds.n_max.to_u64().unwrap_or(u64::MAX);
    let k_max = bounds.k_max.to_u64().unwrap_or(u64::MAX);

    let mut hits: Vec<PrefixPolymorphism> = if workers == 1 {
        scan_stride(2, 1, x_max, n_max, k_max)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|offset| {
                    scope.spawn(move || {
                        scan_stride(2 + offset, workers as u64, x_max, n_max, k_max)
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };
    hits.sort_by(|a, b| (a.x(), a.n(), a.k()).cmp(&(b.x(), b.n(), b.k())));

    let violations = validate_quadruples(&hits);
    let solutions = hits
        .into_iter()
        .filter_map(|q| {
            // Classification fails only for quadruples that already carry a
            // violation record, so nothing disappears silently.
            let class = classify(&q).ok()?;
            Some((q, class))
        })
        .collect();
    SearchResult {
        solutions,
        bounds: bounds.clone(),
        violations,
    }
}

/// Scans `x = start, start + step, ...` up to `x_max`.
fn scan_stride(start: u64, step: u64, x_max: u64, n_max: u64, k_max: u64) -> Vec<PrefixPolymorphism> {
    let mut found = Vec::new();
    let mut x = start;
    while x <= x_max {
        scan_one_x(x, n_max, k_max, &mut found);
        match x.checked_add(step) {
            Some(next) => x = next,
            None => break,
        }
    }
    found
}

fn scan_one_x(x: u64, n_max: u64, k_max: u64, found: &mut Vec<PrefixPolymorphism>) {
    let x_nat = Nat::from(x);
    for n in 2..=n_max {
        let n_nat = Nat::from(n);
        let c = ipow(&x_nat, &n_nat) - &x_nat;
        let (m, remainder) = c.div_rem(&n_nat);
        if !remainder.is_zero() {
            continue;
        }
        for k in 1..=k_max {
            let k_nat = Nat::from(k);
            let base = integer_nth_root(&m, &k_nat).expect("k >= 1");
            if base < Nat::from(2u32) || ipow(&base, &k_nat) != m {
                continue;
            }
            if digit_count(&x_nat, &base).expect("x >= 2, base >= 2") != k_nat {
                continue;
            }
            let quad = PrefixPolymorphism::new(x_nat.clone(), n_nat.clone(), base, k_nat)
                .expect("equation, digit count and domain all just checked");
            found.push(quad);
        }
    }
}

/// Re-checks every found solution against the facts the solver and
/// classifier rely on; returns the (expected empty) list of contradictions.
pub fn validate_theorems(result: &SearchResult) -> Vec<Violation> {
    let quads: Vec<PrefixPolymorphism> =
        result.solutions().iter().map(|(q, _)| q.clone()).collect();
    validate_quadruples(&quads)
}

/// Validation core, usable on an arbitrary list of quadruples (tests inject
/// deliberately broken ones here).
///
/// Each quadruple is screened against the structural rules first — `k <= 2`,
/// `k = 2` only with `n = 2`, the digit bound `(k-1)(n-1) <= digits(n)`, and
/// the candidate formula. A quadruple that trips none of those must still
/// pass full verification, and is reported as a verification failure if it
/// does not. All rule hits are collected in one pass rather than stopping at
/// the first.
pub fn validate_quadruples(quads: &[PrefixPolymorphism]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let one = Nat::one();
    let two = Nat::from(2u32);
    for q in quads {
        // Quadruples outside the basic domain can't be measured against the
        // structural rules at all.
        if *q.x() < two || *q.n() < two || *q.base() < two || q.k().is_zero() {
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::FailsVerification,
                detail: "domain requires x >= 2, n >= 2, B >= 2, k >= 1".to_string(),
            });
            continue;
        }

        let mut flagged = false;
        if *q.k() > two {
            flagged = true;
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::DigitCountAboveTwo,
                detail: format!("k = {}", q.k()),
            });
        }
        if *q.k() == two && *q.n() > two {
            flagged = true;
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::HighExponentTwoDigits,
                detail: format!("k = 2 with n = {}", q.n()),
            });
        }
        let n_digits = digit_count(q.n(), q.base()).expect("n >= 2, base >= 2");
        if (q.k() - &one) * (q.n() - &one) > n_digits {
            flagged = true;
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::DigitBoundExceeded,
                detail: format!(
                    "(k-1)(n-1) = {} exceeds the {}-digit length of n",
                    (q.k() - &one) * (q.n() - &one),
                    n_digits
                ),
            });
        }
        let candidate = candidate_x(q.base(), q.n(), q.k()).expect("domain screened above");
        if candidate != *q.x() {
            flagged = true;
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::CandidateFormulaMismatch,
                detail: format!("candidate root is {candidate}, quadruple has x = {}", q.x()),
            });
        }

        if !flagged && !verify(q.x(), q.n(), q.base(), q.k()).verdict() {
            violations.push(Violation {
                quadruple: q.clone(),
                kind: ViolationKind::FailsVerification,
                detail: "defining equation or digit count fails".to_string(),
            });
        }
    }
    violations
}
