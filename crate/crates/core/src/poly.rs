//! Integer polynomials and the exact rational machinery behind certified
//! root isolation: evaluation, interval bounds, gcd, Sturm counts.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Polynomial with integer coefficients, constant term first. The leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        trim(&mut coeffs);
        if coeffs.is_empty() {
            return Err(Error::PreconditionViolated("zero polynomial".into()));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_nonzero(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs).expect("nonzero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval(x).cmp(&Rational::zero())
    }

    pub fn derivative(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect()
    }

    pub(crate) fn to_rat(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    /// Exact division; `None` unless `divisor` divides `self` over the
    /// integers.
    pub fn checked_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = div_rem(&self.to_rat(), &divisor.to_rat());
        if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        IntPolynomial::new(q.into_iter().map(|c| c.to_integer()).collect()).ok()
    }

    pub fn divides(&self, other: &IntPolynomial) -> bool {
        other.checked_div(self).is_some()
    }

    /// Number of sign changes in the coefficient sequence. By Descartes'
    /// rule, a value of 1 certifies exactly one positive root.
    pub fn sign_variations(&self) -> usize {
        sign_variations(self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()))
    }

    /// Primitive squarefree part `p / gcd(p, p')`, positive leading coefficient.
    pub fn squarefree(&self) -> IntPolynomial {
        let p = self.to_rat();
        let dp: Vec<Rational> = self
            .derivative()
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let g = gcd(&p, &dp);
        let (q, _) = div_rem(&p, &g);
        IntPolynomial::from_nonzero(primitive(&q))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> usize {
        let seq = sturm_sequence(&self.squarefree().to_rat());
        let va = sturm_variations(&seq, a);
        let vb = sturm_variations(&seq, b);
        va.saturating_sub(vb)
    }

    /// Cyclotomic polynomial `Φ_n`.
    pub fn cyclotomic(n: usize) -> IntPolynomial {
        assert!(n >= 1);
        // x^n - 1 divided by Φ_d for every proper divisor d of n.
        let mut num = vec![BigInt::zero(); n + 1];
        num[0] = BigInt::from(-1);
        num[n] = BigInt::one();
        let mut p = IntPolynomial::from_nonzero(num);
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            p = p.checked_div(&IntPolynomial::cyclotomic(d)).expect("Φ_d | x^n - 1");
        }
        p
    }

    /// Removes every cyclotomic factor `Φ_d` with `d ≤ 2·deg`, with
    /// multiplicity.
    pub fn strip_cyclotomic(&self) -> IntPolynomial {
        let mut p = self.clone();
        let max_d = 2 * self.degree().max(1);
        for d in 1..=max_d {
            let phi = IntPolynomial::cyclotomic(d);
            if phi.degree() > p.degree() {
                continue;
            }
            while let Some(q) = p.checked_div(&phi) {
                if q.degree() == 0 && q.coeffs[0].abs().is_one() {
                    break;
                }
                p = q;
            }
        }
        p
    }

    /// Bracket-list form, constant term first: `[-1,-1,1]`.
    pub fn to_list_string(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(","))
    }
}

/// `x^n − x^{n−1}`-style display, highest power first.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the bracket-list form `[-1,-1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntPolynomial::new(coeffs)
    }
}

/// Parses `a/b`, a decimal such as `1.75`, or an integer, exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |e: String| Error::Parse(format!("bad rational {s:?}: {e}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| bad(format!("{e}")))?;
        let d: BigInt = d.trim().parse().map_err(|e| bad(format!("{e}")))?;
        if d.is_zero() {
            return Err(bad("zero denominator".into()));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (
            &s[..i],
            s[i + 1..].parse::<i32>().map_err(|e| bad(format!("{e}")))?,
        ),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(bad("no digits".into()));
    }
    let n: BigInt = digits.parse().map_err(|e| bad(format!("{e}")))?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Exact rational value of a finite float.
pub fn rational_from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn sign_variations(signs: impl Iterator<Item = bool>) -> usize {
    let mut count = 0;
    let mut last = None;
    for s in signs {
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

pub(crate) fn eval_rat(p: &[Rational], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Enclosure of `p([lo, hi])` for `0 ≤ lo ≤ hi`: the positive and negative
/// coefficient parts are each monotone on the nonnegative axis.
pub(crate) fn bounds_on_positive(p: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut pos_lo = Rational::zero();
    let mut pos_hi = Rational::zero();
    let mut neg_lo = Rational::zero();
    let mut neg_hi = Rational::zero();
    for c in p.iter().rev() {
        pos_lo = &pos_lo * lo;
        pos_hi = &pos_hi * hi;
        neg_lo = &neg_lo * lo;
        neg_hi = &neg_hi * hi;
        if c.is_positive() {
            pos_lo += c;
            pos_hi += c;
        } else if c.is_negative() {
            neg_lo -= c;
            neg_hi -= c;
        }
    }
    (pos_lo - neg_hi, pos_hi - neg_lo)
}

pub(crate) fn div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut den = den.to_vec();
    trim(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    let mut rem = num.to_vec();
    trim(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let dl = den.len();
    let lead = den[dl - 1].clone();
    let mut quot = vec![Rational::zero(); rem.len() - dl + 1];
    while rem.len() >= dl {
        let shift = rem.len() - dl;
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in den.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    div_rem(num, den).1
}

/// Scales by a positive rational so the coefficients are coprime integers.
pub(crate) fn primitive(p: &[Rational]) -> Vec<BigInt> {
    let denom_lcm = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn to_rat(v: Vec<BigInt>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_integer).collect()
}

/// Monic-up-to-scaling gcd over the rationals, as a primitive integer
/// polynomial (returned as rationals) with positive leading coefficient.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = to_rat(primitive(a));
    let mut y = to_rat(primitive(b));
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = to_rat(primitive(&rem(&x, &y)));
        x = y;
        y = r;
        trim(&mut y);
    }
    if x.last().is_some_and(|c| c.is_negative()) {
        x.iter_mut().for_each(|c| *c = -c.clone());
    }
    x
}

fn sturm_sequence(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut seq = vec![p.to_vec()];
    let dp: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect();
    let mut dp = dp;
    trim(&mut dp);
    if dp.is_empty() {
        return seq;
    }
    seq.push(dp);
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        // Positive scaling keeps the signs Sturm's theorem needs.
        let r: Vec<Rational> = to_rat(primitive(&r)).into_iter().map(|c| -c).collect();
        seq.push(r);
    }
    seq
}

fn sturm_variations(seq: &[Vec<Rational>], x: &Rational) -> usize {
    sign_variations(
        seq.iter()
            .map(|p| eval_rat(p, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive()),
    )
}
