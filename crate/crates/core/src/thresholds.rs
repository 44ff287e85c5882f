//! The extremal sequences `a_k`, the thresholds `β_k`, the Komornik–Loreti
//! constant and the Sharkovskiĭ order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::expansions::{d_of_beta, BetaValue, FiniteFlag};
use crate::poly::{rational_from_f64, rational_to_f64, Rational};
use crate::words::{mu, thue_morse_digit, BinaryWord, PeriodicSeq};

pub use crate::poly::IntPolynomial;

/// `k = 2^n (2m + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SharkovskiiKey {
    pub n: u32,
    pub m: u64,
}

impl SharkovskiiKey {
    pub fn value(&self) -> u64 {
        (2 * self.m + 1) << self.n
    }

    pub fn is_power_of_two(&self) -> bool {
        self.m == 0
    }
}

pub fn decompose(k: u64) -> Result<SharkovskiiKey> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be positive".into()));
    }
    let n = k.trailing_zeros();
    Ok(SharkovskiiKey { n, m: (k >> n) / 2 })
}

/// Position in `3 ▷ 5 ▷ 7 ▷ … ▷ 2·3 ▷ 2·5 ▷ … ▷ 8 ▷ 4 ▷ 2 ▷ 1`.
fn sharkovskii_rank(k: u64) -> (u8, i64, u64) {
    let key = decompose(k).expect("positive");
    if key.is_power_of_two() {
        (1, -(key.n as i64), 0)
    } else {
        (0, key.n as i64, key.m)
    }
}

/// `Less` when `k ▷ l`, i.e. `k` comes earlier in the Sharkovskiĭ order.
///
/// Panics if either argument is 0.
pub fn sharkovskii_cmp(k: u64, l: u64) -> Ordering {
    sharkovskii_rank(k).cmp(&sharkovskii_rank(l))
}

/// `a_k` from the recursive description: `1^∞`, `μ^n(0^∞)` or
/// `μ^n((1(10)^m)^∞)`.
pub fn a_k_recursive(k: u64) -> Result<PeriodicSeq> {
    let key = decompose(k)?;
    if k == 1 {
        return Ok(PeriodicSeq::ones());
    }
    let mut s = if key.m == 0 {
        PeriodicSeq::zeros()
    } else {
        let mut per = vec![1];
        for _ in 0..key.m {
            per.extend([1, 0]);
        }
        PeriodicSeq::from_bits(vec![], per)
    };
    for _ in 0..key.n {
        s = mu(&s);
    }
    Ok(s)
}

fn tm(i: u64) -> u8 {
    thue_morse_digit(i)
}

/// `a_k` from the closed form in Thue–Morse digits `𝔪_i`.
pub fn a_k_explicit(k: u64) -> Result<PeriodicSeq> {
    let key = decompose(k)?;
    if k == 1 {
        return Ok(PeriodicSeq::ones());
    }
    let p = 1u64 << key.n;
    let mut per = Vec::with_capacity(k as usize);
    if key.m == 0 {
        per.extend((1..p).map(tm));
        per.push(1 - tm(p));
    } else {
        per.extend((1..=3 * p).map(tm));
        for _ in 1..key.m {
            per.extend((1..2 * p).map(tm));
            per.push(1 - tm(2 * p));
        }
    }
    Ok(PeriodicSeq::from_bits(vec![], per))
}

/// `x^k − α₁ x^{k−1} − ⋯ − α_{k−1} x − 1` with `a_k = (α₁ α₂ …)^∞`.
pub fn beta_poly(k: u64) -> Result<IntPolynomial> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("k = {k} must be at least 2")));
    }
    let a = a_k_recursive(k)?;
    let k = k as usize;
    let mut c = vec![BigInt::zero(); k + 1];
    c[k] = BigInt::one();
    c[0] = BigInt::from(-1);
    for j in 1..k {
        c[k - j] -= BigInt::from(a.at(j - 1));
    }
    IntPolynomial::new(c)
}

/// `β_k`, the root of `beta_poly(k)` in `(1, 2)`, refined to width `< eps`.
pub fn beta_n(k: u64, eps: f64) -> Result<BetaValue> {
    let p = beta_poly(k)?;
    let mut root = AlgebraicReal::with_single_positive_root(p, Rational::one(), two())?;
    root.refine_to_f64(eps);
    BetaValue::algebraic(root)
}

/// `beta_poly(k)` with its cyclotomic factors removed.
pub fn minimal_factor(k: u64) -> Result<IntPolynomial> {
    Ok(beta_poly(k)?.strip_cyclotomic())
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// Certified enclosure `[lo, hi]` of `β_KL`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlBracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl KlBracket {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&((&self.lo + &self.hi) / two()))
    }
}

/// Sign of `Σ 𝔪_k x^{−k} − 1`, certified with the tail bound
/// `Σ_{k>N} x^{−k} ≤ x^{−N}/(x−1)`.
fn kl_sign(x: &Rational, eps: &Rational) -> Result<Ordering> {
    let inv = Rational::one() / x;
    let slack = Rational::one() / (x - Rational::one());
    let quarter = eps / Rational::from_integer(4.into());
    let mut sum = Rational::zero();
    let mut pow = Rational::one();
    let mut n = 0u64;
    let mut target = 0u64;
    loop {
        // Grow N until the tail bound is below eps/4, then keep doubling.
        while n < target || (target == 0 && &pow * &slack >= quarter) {
            n += 1;
            pow = &pow * &inv;
            if tm(n) == 1 {
                sum += &pow;
            }
        }
        let bound = &pow * &slack;
        if sum > Rational::one() {
            return Ok(Ordering::Greater);
        }
        if &sum + &bound < Rational::one() {
            return Ok(Ordering::Less);
        }
        if n > 1 << 16 {
            return Err(Error::Undecided { budget: n as usize });
        }
        target = 2 * n;
    }
}

/// Rational bisection bracket of `β_KL` with width `< eps`.
pub fn beta_kl_bracket(eps: f64) -> Result<KlBracket> {
    if !(eps > 0.0) {
        return Err(Error::PreconditionViolated("eps must be positive".into()));
    }
    let e = rational_from_f64(eps);
    let mut lo = Rational::new(3.into(), 2.into());
    let mut hi = two();
    while &hi - &lo >= e {
        let mid = (&lo + &hi) / two();
        match kl_sign(&mid, &e)? {
            Ordering::Greater => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(KlBracket { lo, hi })
}

/// `β_KL` as a float whose tolerance is the half-width of its bracket.
pub fn beta_kl(eps: f64) -> Result<BetaValue> {
    let b = beta_kl_bracket(eps)?;
    let half = rational_to_f64(&(b.width() / two()));
    BetaValue::float_with_tolerance(b.midpoint_f64(), half * (1.0 + 1e-9))
}

/// Whether `β_k < β_KL`, refining both enclosures until they separate.
pub fn below_kl(k: u64) -> Result<bool> {
    let beta = beta_n(k, 1e-6)?;
    let mut root = beta.as_algebraic().expect("beta_n is algebraic").clone();
    let mut eps = 1e-6;
    loop {
        let b = beta_kl_bracket(eps)?;
        if root.cmp_rational(&b.lo) == Ordering::Less {
            return Ok(true);
        }
        if root.cmp_rational(&b.hi) == Ordering::Greater {
            return Ok(false);
        }
        eps /= 1e3;
        if eps < 1e-30 {
            return Err(Error::Undecided { budget: 100 });
        }
    }
}

/// Root of `x^n − x^{n−1} − 1` in `(1, 2)`.
pub fn q_n(n: u64, eps: f64) -> Result<BetaValue> {
    if n < 2 {
        return Err(Error::PreconditionViolated(format!("n = {n} must be at least 2")));
    }
    let n = n as usize;
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    c[n - 1] = BigInt::from(-1);
    c[0] = BigInt::from(-1);
    let mut root = AlgebraicReal::with_single_positive_root(IntPolynomial::new(c)?, Rational::one(), two())?;
    root.refine_to_f64(eps);
    BetaValue::algebraic(root)
}

/// One row of the threshold table.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub d_beta_n: String,
    pub defining_poly: String,
    pub minimal_poly_if_divides: String,
    pub beta_n: f64,
    pub below_kl: bool,
}

pub const TABLE_HEADER: &str = "n,d_beta_n,defining_poly,minimal_poly_if_divides,beta_n,below_KL";

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{:.5},{}",
            self.n,
            self.d_beta_n,
            self.defining_poly,
            self.minimal_poly_if_divides,
            self.beta_n,
            if self.below_kl { "yes" } else { "no" }
        )
    }
}

/// `d(β_k)` as a finite word.
pub fn d_of_beta_n(k: u64) -> Result<BinaryWord> {
    let d = d_of_beta(&beta_n(k, 1e-8)?);
    match d.finite_flag_within(4 * k as usize + 64) {
        FiniteFlag::Finite(n) => d.digits(n),
        _ => Err(Error::Undecided { budget: 4 * k as usize + 64 }),
    }
}

pub fn table_row(k: u64, eps: f64) -> Result<TableRow> {
    let poly = beta_poly(k)?;
    let minimal = poly.strip_cyclotomic();
    let minimal = if minimal.divides(&poly) {
        minimal.to_string()
    } else {
        String::new()
    };
    Ok(TableRow {
        n: k,
        d_beta_n: d_of_beta_n(k)?.to_string(),
        defining_poly: poly.to_string(),
        minimal_poly_if_divides: minimal,
        beta_n: beta_n(k, eps)?.approx(),
        below_kl: below_kl(k)?,
    })
}

/// Rows `2..=n_max`.
pub fn table(n_max: u64, eps: f64) -> Result<Vec<TableRow>> {
    (2..=n_max).map(|k| table_row(k, eps)).collect()
}
