//! Real algebraic numbers as (integer polynomial, isolating interval), with
//! exact sign determination by interval refinement.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, rational_from_f64, rational_to_f64, IntPolynomial, Rational};

/// Bisections between exact zero tests in [`AlgebraicReal::sign_of`].
const ZERO_TEST_EVERY: usize = 48;

/// A real root of `poly` isolated in the open interval `(lo, hi)`.
///
/// `poly` is kept as given (it may be reducible); refinement and sign
/// decisions use its squarefree part, whose sign changes across the root.
#[derive(Debug, Clone)]
pub struct AlgebraicReal {
    poly: IntPolynomial,
    sqfree: IntPolynomial,
    lo: Rational,
    hi: Rational,
    /// Set when a bisection point turned out to be the root itself.
    exact: Option<Rational>,
}

impl AlgebraicReal {
    /// Validates that `poly` has exactly one root in `(lo, hi)` (Sturm count)
    /// and no root at either endpoint.
    pub fn new(poly: IntPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::PreconditionViolated(format!(
                "empty isolating interval ({lo}, {hi})"
            )));
        }
        let sqfree = poly.squarefree();
        if sqfree.sign_at(&lo).is_eq() || sqfree.sign_at(&hi).is_eq() {
            return Err(Error::PreconditionViolated(
                "isolating interval endpoint is a root".into(),
            ));
        }
        let count = sqfree.count_roots(&lo, &hi);
        if count != 1 {
            return Err(Error::PreconditionViolated(format!(
                "{poly} has {count} roots in ({lo}, {hi}), expected exactly one"
            )));
        }
        Ok(AlgebraicReal {
            poly,
            sqfree,
            lo,
            hi,
            exact: None,
        })
    }

    /// Skips the Sturm count when `poly` has exactly one positive root
    /// (Descartes) and changes sign on `(lo, hi)` with `lo ≥ 0`.
    pub fn with_single_positive_root(poly: IntPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        let sqfree = poly.squarefree();
        let (slo, shi) = (sqfree.sign_at(&lo), sqfree.sign_at(&hi));
        if !lo.is_negative()
            && poly.sign_variations() == 1
            && slo != shi
            && !slo.is_eq()
            && !shi.is_eq()
        {
            return Ok(AlgebraicReal {
                poly,
                sqfree,
                lo,
                hi,
                exact: None,
            });
        }
        Self::new(poly, lo, hi)
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        self.exact.as_ref().unwrap_or(&self.lo)
    }

    pub fn hi(&self) -> &Rational {
        self.exact.as_ref().unwrap_or(&self.hi)
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }

    pub fn interval_f64(&self) -> (f64, f64) {
        (rational_to_f64(self.lo()), rational_to_f64(self.hi()))
    }

    pub fn is_rational(&self) -> bool {
        self.exact.is_some()
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let two = Rational::from_integer(2.into());
        let mid = (&self.lo + &self.hi) / two;
        let s_mid = self.sqfree.sign_at(&mid);
        if s_mid.is_eq() {
            self.exact = Some(mid);
        } else if s_mid == self.sqfree.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, eps: &Rational) {
        while self.exact.is_none() && &(&self.hi - &self.lo) >= eps {
            self.bisect();
        }
    }

    pub fn refine_to_f64(&mut self, eps: f64) {
        self.refine_to(&rational_from_f64(eps));
    }

    pub fn refined(&self, eps: f64) -> Self {
        let mut r = self.clone();
        r.refine_to_f64(eps);
        r
    }

    /// Nearest double, from an interval narrower than one ulp.
    pub fn to_f64(&self) -> f64 {
        let mut r = self.clone();
        let guess = rational_to_f64(r.lo());
        r.refine_to_f64(f64::EPSILON * guess.abs().max(1.0) / 4.0);
        let two = Rational::from_integer(2.into());
        rational_to_f64(&((r.lo() + r.hi()) / two))
    }

    /// Exact sign of `q(self)` for a rational polynomial `q`.
    pub fn sign_of(&mut self, q: &[Rational]) -> Ordering {
        if let Some(x) = &self.exact {
            return poly::eval_rat(q, x).cmp(&Rational::zero());
        }
        if q.iter().all(|c| c.is_zero()) {
            return Ordering::Equal;
        }
        let mut zero_tested = false;
        let mut rounds = 0;
        loop {
            if let Some(x) = &self.exact {
                return poly::eval_rat(q, x).cmp(&Rational::zero());
            }
            let (lo, hi) = self.bounds(q);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            rounds += 1;
            if !zero_tested && rounds >= ZERO_TEST_EVERY {
                zero_tested = true;
                if self.is_root_of(q) {
                    return Ordering::Equal;
                }
            }
            self.bisect();
        }
    }

    fn bounds(&self, q: &[Rational]) -> (Rational, Rational) {
        if self.lo.is_negative() {
            // Generic interval Horner for intervals reaching below zero.
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for c in q.iter().rev() {
                let cands = [&lo * &self.lo, &lo * &self.hi, &hi * &self.lo, &hi * &self.hi];
                lo = cands.iter().min().unwrap() + c;
                hi = cands.iter().max().unwrap() + c;
            }
            (lo, hi)
        } else {
            poly::bounds_on_positive(q, &self.lo, &self.hi)
        }
    }

    /// Exact test `q(self) = 0`: `g = gcd(q, sqfree)` divides a squarefree
    /// polynomial with a single root in the interval, so `g` vanishes at
    /// the root iff it changes sign across the interval.
    fn is_root_of(&self, q: &[Rational]) -> bool {
        let g = poly::gcd(q, &self.sqfree.to_rat());
        if g.len() <= 1 {
            return false;
        }
        let glo = poly::eval_rat(&g, &self.lo);
        let ghi = poly::eval_rat(&g, &self.hi);
        glo.signum() != ghi.signum()
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&mut self, r: &Rational) -> Ordering {
        if let Some(x) = &self.exact {
            return x.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.sqfree.sign_at(r);
        if s.is_eq() {
            return Ordering::Equal;
        }
        if s == self.sqfree.sign_at(&self.lo) {
            // Root lies in (r, hi).
            self.lo = r.clone();
            Ordering::Greater
        } else {
            self.hi = r.clone();
            Ordering::Less
        }
    }

    /// Exact comparison of two algebraic reals; refines both.
    pub fn cmp_refining(&mut self, other: &mut AlgebraicReal) -> Ordering {
        if let Some(x) = other.exact.clone() {
            return self.cmp_rational(&x);
        }
        if let Some(x) = self.exact.clone() {
            return other.cmp_rational(&x).reverse();
        }
        let mut equality_tested = false;
        let mut rounds = 0;
        loop {
            if self.hi() <= other.lo() {
                return Ordering::Less;
            }
            if other.hi() <= self.lo() {
                return Ordering::Greater;
            }
            rounds += 1;
            if !equality_tested && rounds >= ZERO_TEST_EVERY {
                equality_tested = true;
                let g = poly::gcd(&self.sqfree.to_rat(), &other.sqfree.to_rat());
                if g.len() > 1 {
                    // Any common root is a root of g; test in the overlap.
                    let lo = self.lo().max(other.lo()).clone();
                    let hi = self.hi().min(other.hi()).clone();
                    let g = IntPolynomial::from_nonzero(poly::primitive(&g));
                    if g.sign_at(&lo).is_eq() || g.sign_at(&hi).is_eq() || g.count_roots(&lo, &hi) > 0 {
                        return Ordering::Equal;
                    }
                }
            }
            if self.width() >= other.width() {
                self.bisect();
            } else {
                other.bisect();
            }
            if self.exact.is_some() || other.exact.is_some() {
                return self.cmp_refining(other);
            }
        }
    }

    /// Text form `poly:[c0,c1,...]@(lo,hi)`.
    pub fn to_spec_string(&self) -> String {
        format!("poly:{}@({},{})", self.poly.to_list_string(), self.lo(), self.hi())
    }

    /// Sign change of the squarefree part across the interval; used to
    /// assert the invariant in tests.
    pub fn brackets_root(&self) -> bool {
        if self.exact.is_some() {
            return true;
        }
        self.sqfree.sign_at(&self.lo) != self.sqfree.sign_at(&self.hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo() <= x && x <= self.hi()
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec_string())
    }
}
