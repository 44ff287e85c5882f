//! Greedy and quasi-greedy expansions of 1, evaluation `π_β`, Parry
//! admissibility and the lexicographic uniqueness criterion.
//!
//! A base is either a float (treated as the exact dyadic rational it
//! denotes, with a tolerance that guards branch-point decisions) or an
//! algebraic number, for which every digit decision is exact.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::poly::{self, parse_rational, rational_from_f64, IntPolynomial, Rational};
use crate::words::{lex_cmp, mirror, shift, BinaryWord, PeriodicSeq};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_DIGIT_BUDGET: usize = 256;

/// `β ∈ (1, 2)`.
#[derive(Debug, Clone)]
pub enum BetaValue {
    Float { value: f64, tolerance: f64 },
    Algebraic(AlgebraicReal),
}

impl BetaValue {
    pub fn float(value: f64) -> Result<Self> {
        Self::float_with_tolerance(value, DEFAULT_TOLERANCE)
    }

    pub fn float_with_tolerance(value: f64, tolerance: f64) -> Result<Self> {
        if !(value > 1.0 && value < 2.0) {
            return Err(Error::PreconditionViolated(format!(
                "beta = {value} is not in (1, 2)"
            )));
        }
        if !(tolerance >= 0.0) {
            return Err(Error::PreconditionViolated("negative tolerance".into()));
        }
        Ok(BetaValue::Float { value, tolerance })
    }

    pub fn algebraic(mut root: AlgebraicReal) -> Result<Self> {
        let one = Rational::one();
        let two = Rational::from_integer(2.into());
        if root.cmp_rational(&one) != Ordering::Greater || root.cmp_rational(&two) != Ordering::Less {
            return Err(Error::PreconditionViolated(format!(
                "{root} is not in (1, 2)"
            )));
        }
        Ok(BetaValue::Algebraic(root))
    }

    /// Nearest double.
    pub fn approx(&self) -> f64 {
        match self {
            BetaValue::Float { value, .. } => *value,
            BetaValue::Algebraic(a) => a.to_f64(),
        }
    }

    pub fn is_algebraic(&self) -> bool {
        matches!(self, BetaValue::Algebraic(_))
    }

    pub fn as_algebraic(&self) -> Option<&AlgebraicReal> {
        match self {
            BetaValue::Algebraic(a) => Some(a),
            BetaValue::Float { .. } => None,
        }
    }

    /// The same base with tolerance 0: every decision is made exactly on
    /// the float's rational value.
    pub fn exact(&self) -> Self {
        match self {
            BetaValue::Float { value, .. } => BetaValue::Float {
                value: *value,
                tolerance: 0.0,
            },
            a => a.clone(),
        }
    }

    /// Certified comparison. Two floats, or a float and an algebraic
    /// number, closer than the float tolerance are `Undecided`.
    pub fn compare(&self, other: &BetaValue) -> Result<Ordering> {
        match (self, other) {
            (BetaValue::Float { value: a, tolerance: ta }, BetaValue::Float { value: b, tolerance: tb }) => {
                if (a - b).abs() <= ta + tb && a != b || (a == b && ta + tb > 0.0) {
                    return Err(Error::Undecided { budget: 0 });
                }
                Ok(a.partial_cmp(b).unwrap())
            }
            (BetaValue::Algebraic(a), BetaValue::Algebraic(b)) => {
                Ok(a.clone().cmp_refining(&mut b.clone()))
            }
            (BetaValue::Algebraic(a), f @ BetaValue::Float { .. }) => {
                f.compare(&BetaValue::Algebraic(a.clone())).map(Ordering::reverse)
            }
            (BetaValue::Float { value, tolerance }, BetaValue::Algebraic(a)) => {
                let mut a = a.clone();
                let lo = rational_from_f64(value - tolerance);
                let hi = rational_from_f64(value + tolerance);
                if *tolerance > 0.0 {
                    if a.cmp_rational(&lo) == Ordering::Less {
                        return Ok(Ordering::Greater);
                    }
                    if a.cmp_rational(&hi) == Ordering::Greater {
                        return Ok(Ordering::Less);
                    }
                    return Err(Error::Undecided { budget: 0 });
                }
                Ok(a.cmp_rational(&rational_from_f64(*value)).reverse())
            }
        }
    }
}

impl fmt::Display for BetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaValue::Float { value, .. } => write!(f, "float:{value}"),
            BetaValue::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

impl FromStr for BetaValue {
    type Err = Error;

    /// `float:1.9`, a bare `1.9`, or `poly:[-1,-1,1]@(1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("poly:") {
            let (p, iv) = rest
                .split_once('@')
                .ok_or_else(|| Error::Parse(format!("expected poly:[..]@(lo,hi), got {s:?}")))?;
            let poly: IntPolynomial = p.parse()?;
            let iv = iv
                .trim()
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad interval in {s:?}")))?;
            let (lo, hi) = iv
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad interval in {s:?}")))?;
            let root = AlgebraicReal::new(poly, parse_rational(lo)?, parse_rational(hi)?)?;
            return BetaValue::algebraic(root);
        }
        let num = s.strip_prefix("float:").unwrap_or(s);
        let value: f64 = num
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad float {num:?}: {e}")))?;
        BetaValue::float(value)
    }
}

/// Element of `Q(β)` along a greedy orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum OrbitPoint {
    /// `num / den`, kept unreduced to avoid gcd work on every step.
    Frac { num: BigInt, den: BigInt },
    Poly(Vec<Rational>),
}

#[derive(Debug, Clone)]
enum Field {
    /// Float base as an exact rational; `tol` gates branch decisions.
    Rat { beta: Rational, tol: Rational },
    Alg { root: AlgebraicReal, modulus: Vec<Rational> },
}

/// The greedy orbit `x, τ_β x, τ_β² x, …` producing one digit per step.
#[derive(Debug, Clone)]
struct GreedyOrbit {
    field: Field,
    point: OrbitPoint,
    steps: usize,
    /// Step after which the orbit sits at 0.
    hit_zero: Option<usize>,
}

impl GreedyOrbit {
    fn new(beta: &BetaValue, x: &Rational) -> Self {
        let (field, point) = match beta {
            BetaValue::Float { value, tolerance } => (
                Field::Rat {
                    beta: rational_from_f64(*value),
                    tol: rational_from_f64(*tolerance),
                },
                OrbitPoint::Frac {
                    num: x.numer().clone(),
                    den: x.denom().clone(),
                },
            ),
            BetaValue::Algebraic(a) => (
                Field::Alg {
                    modulus: a.poly().squarefree().to_rat(),
                    root: a.clone(),
                },
                OrbitPoint::Poly(vec![x.clone()]),
            ),
        };
        let hit_zero = x.is_zero().then_some(0);
        GreedyOrbit {
            field,
            point,
            steps: 0,
            hit_zero,
        }
    }

    fn next_digit(&mut self) -> Result<u8> {
        if self.hit_zero.is_some() {
            self.steps += 1;
            return Ok(0);
        }
        let index = self.steps;
        let digit = match (&mut self.field, &mut self.point) {
            (Field::Rat { beta, tol }, OrbitPoint::Frac { num, den }) => {
                let z = beta.numer() * &*num;
                let d = beta.denom() * &*den;
                let gap = &z - &d;
                if !tol.is_zero() && gap.abs() * tol.denom() < tol.numer() * &d {
                    return Err(Error::UndecidableDigit { index });
                }
                *den = d;
                if gap.is_negative() {
                    *num = z;
                    0
                } else {
                    if gap.is_zero() {
                        self.hit_zero = Some(index + 1);
                    }
                    *num = gap;
                    1
                }
            }
            (Field::Alg { root, modulus }, OrbitPoint::Poly(y)) => {
                let z = mul_x_mod(y, modulus);
                let mut gap = z.clone();
                if gap.is_empty() {
                    gap.push(Rational::zero());
                }
                gap[0] -= Rational::one();
                match root.sign_of(&gap) {
                    Ordering::Less => {
                        *y = z;
                        0
                    }
                    Ordering::Equal => {
                        self.hit_zero = Some(index + 1);
                        *y = Vec::new();
                        1
                    }
                    Ordering::Greater => {
                        trim(&mut gap);
                        *y = gap;
                        1
                    }
                }
            }
            _ => unreachable!("orbit point kind matches its field"),
        };
        self.steps += 1;
        Ok(digit)
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// `x·y mod m` in `Q[x]/(m)`.
fn mul_x_mod(y: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    let mut z = Vec::with_capacity(y.len() + 1);
    z.push(Rational::zero());
    z.extend_from_slice(y);
    trim(&mut z);
    let d = modulus.len() - 1;
    if z.len() == d + 1 {
        let factor = &z[d] / &modulus[d];
        for (zi, mi) in z.iter_mut().zip(modulus) {
            *zi -= &factor * mi;
        }
        trim(&mut z);
    }
    z
}

/// First `n` greedy digits of `x ∈ [0, 1]` in base `β`.
pub fn greedy_expansion(beta: &BetaValue, x: &Rational, n: usize) -> Result<BinaryWord> {
    if x.is_negative() || x > &Rational::one() {
        return Err(Error::PreconditionViolated(format!("x = {x} is not in [0, 1]")));
    }
    let mut orbit = GreedyOrbit::new(beta, x);
    let bits = (0..n).map(|_| orbit.next_digit()).collect::<Result<Vec<_>>>()?;
    Ok(BinaryWord::from_bits_unchecked(bits))
}

pub fn greedy_expansion_f64(beta: &BetaValue, x: f64, n: usize) -> Result<BinaryWord> {
    if !x.is_finite() {
        return Err(Error::PreconditionViolated(format!("x = {x} is not finite")));
    }
    greedy_expansion(beta, &rational_from_f64(x), n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiniteFlag {
    /// Digit `n` (1-based) is the last 1; all later digits are 0.
    Finite(usize),
    /// The orbit of 1 is eventually periodic without reaching 0.
    Infinite,
    /// No termination seen within this many digits.
    Unknown(usize),
}

#[derive(Debug)]
struct ExpansionState {
    orbit: GreedyOrbit,
    digits: Vec<u8>,
    seen: HashMap<OrbitPoint, usize>,
    cycle: bool,
    failure: Option<Error>,
}

/// `d(β)`, the greedy expansion of 1, with a lazily extended digit buffer.
///
/// Digits never change once produced; extension is serialized by an
/// internal lock so the value can be shared across threads.
#[derive(Debug)]
pub struct GreedyExpansion {
    beta: BetaValue,
    state: Mutex<ExpansionState>,
}

impl Clone for GreedyExpansion {
    fn clone(&self) -> Self {
        let st = self.state.lock().unwrap();
        GreedyExpansion {
            beta: self.beta.clone(),
            state: Mutex::new(ExpansionState {
                orbit: st.orbit.clone(),
                digits: st.digits.clone(),
                seen: st.seen.clone(),
                cycle: st.cycle,
                failure: st.failure.clone(),
            }),
        }
    }
}

impl GreedyExpansion {
    fn new(beta: &BetaValue) -> Self {
        GreedyExpansion {
            beta: beta.clone(),
            state: Mutex::new(ExpansionState {
                orbit: GreedyOrbit::new(beta, &Rational::one()),
                digits: Vec::new(),
                seen: HashMap::new(),
                cycle: false,
                failure: None,
            }),
        }
    }

    pub fn beta(&self) -> &BetaValue {
        &self.beta
    }

    fn extend_to(st: &mut ExpansionState, n: usize, track_cycle: bool) -> Result<()> {
        while st.digits.len() < n {
            if let Some(e) = &st.failure {
                return Err(e.clone());
            }
            if st.orbit.hit_zero.is_some() {
                st.digits.push(0);
                continue;
            }
            match st.orbit.next_digit() {
                Ok(d) => st.digits.push(d),
                Err(e) => {
                    st.failure = Some(e.clone());
                    return Err(e);
                }
            }
            if track_cycle && !st.cycle && st.orbit.hit_zero.is_none() {
                let len = st.digits.len();
                if st.seen.insert(st.orbit.point.clone(), len).is_some() {
                    st.cycle = true;
                }
            }
        }
        Ok(())
    }

    /// Digit at 0-based position `i`, i.e. `ε_{i+1}`.
    pub fn digit(&self, i: usize) -> Result<u8> {
        let mut st = self.state.lock().unwrap();
        Self::extend_to(&mut st, i + 1, false)?;
        Ok(st.digits[i])
    }

    pub fn digits(&self, n: usize) -> Result<BinaryWord> {
        let mut st = self.state.lock().unwrap();
        Self::extend_to(&mut st, n, false)?;
        Ok(BinaryWord::from_bits_unchecked(st.digits[..n].to_vec()))
    }

    /// Digits produced so far.
    pub fn known_digits(&self) -> BinaryWord {
        BinaryWord::from_bits_unchecked(self.state.lock().unwrap().digits.clone())
    }

    pub fn finite_flag(&self) -> FiniteFlag {
        self.finite_flag_within(DEFAULT_DIGIT_BUDGET)
    }

    /// Finiteness is decided exactly for algebraic bases; float bases
    /// always report `Unknown(budget)`.
    pub fn finite_flag_within(&self, budget: usize) -> FiniteFlag {
        if !self.beta.is_algebraic() {
            return FiniteFlag::Unknown(budget);
        }
        let mut st = self.state.lock().unwrap();
        let algebraic = true;
        let mut n = st.digits.len();
        while n < budget {
            if st.orbit.hit_zero.is_some() || (algebraic && st.cycle) {
                break;
            }
            if Self::extend_to(&mut st, n + 1, algebraic).is_err() {
                break;
            }
            n += 1;
        }
        let examined = st.digits.len();
        match st.orbit.hit_zero {
            Some(k) => FiniteFlag::Finite(k),
            None if st.cycle => FiniteFlag::Infinite,
            None => FiniteFlag::Unknown(examined),
        }
    }
}

/// `d(β)`.
pub fn d_of_beta(beta: &BetaValue) -> GreedyExpansion {
    GreedyExpansion::new(beta)
}

/// `d'(β) = (ε₁ … ε_{n−1} 0)^∞` when `d(β) = ε₁ … ε_{n−1} 1 0^∞`.
pub fn quasi_greedy(beta: &BetaValue) -> Result<PeriodicSeq> {
    quasi_greedy_of(&d_of_beta(beta))
}

pub fn quasi_greedy_of(d: &GreedyExpansion) -> Result<PeriodicSeq> {
    match d.finite_flag() {
        FiniteFlag::Finite(n) => {
            let mut bits = d.digits(n)?.into_bits();
            bits[n - 1] = 0;
            Ok(PeriodicSeq::from_bits(vec![], bits))
        }
        _ => Err(Error::NotParry),
    }
}

/// `π_β(s) = Σ s_k β^{−k}` in closed form.
pub fn pi_beta(beta: &BetaValue, s: &PeriodicSeq) -> f64 {
    pi_beta_f64(beta.approx(), s)
}

pub fn pi_beta_f64(beta: f64, s: &PeriodicSeq) -> f64 {
    let inv = 1.0 / beta;
    let mut scale = 1.0;
    let mut acc = 0.0;
    for &b in s.pre_bits() {
        scale *= inv;
        acc += b as f64 * scale;
    }
    let mut per = 0.0;
    let mut pscale = 1.0;
    for &b in s.per_bits() {
        pscale *= inv;
        per += b as f64 * pscale;
    }
    acc + scale * per / (1.0 - pscale)
}

/// Exact `π_β(s)` for a rational base.
pub fn pi_beta_rational(beta: &Rational, s: &PeriodicSeq) -> Rational {
    let inv = Rational::one() / beta;
    let mut scale = Rational::one();
    let mut acc = Rational::zero();
    for &b in s.pre_bits() {
        scale = &scale * &inv;
        if b == 1 {
            acc += &scale;
        }
    }
    let mut per = Rational::zero();
    let mut pscale = Rational::one();
    for &b in s.per_bits() {
        pscale = &pscale * &inv;
        if b == 1 {
            per += &pscale;
        }
    }
    acc + scale * per / (Rational::one() - pscale)
}

/// The unique `β ∈ (1, 2)` with `π_β(s) = 1`.
///
/// Clearing denominators turns the series into an integer polynomial for
/// every eventually periodic `s`, so the result is always algebraic.
pub fn solve_base(s: &PeriodicSeq) -> Result<BetaValue> {
    let ones_in_pre = s.pre_bits().iter().filter(|&&b| b == 1).count();
    let per_has_one = s.per_bits().contains(&1);
    if !s.contains_digit(0) || (!per_has_one && ones_in_pre < 2) {
        return Err(Error::PreconditionViolated(format!(
            "{s} needs at least one 0 and at least two 1s"
        )));
    }
    let poly = base_polynomial(s);
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let root = AlgebraicReal::with_single_positive_root(poly, one, two)?;
    BetaValue::algebraic(root)
}

/// Integer polynomial whose unique root in `(1, 2)` solves `π_x(s) = 1`.
pub fn base_polynomial(s: &PeriodicSeq) -> IntPolynomial {
    let u = s.pre_bits();
    let v = s.per_bits();
    let r = u.len();
    let p = v.len();
    if v == [0] {
        // x^r − Σ u_j x^{r−j}
        let mut c = vec![BigInt::zero(); r + 1];
        c[r] = BigInt::one();
        for (j, &b) in u.iter().enumerate() {
            c[r - 1 - j] -= BigInt::from(b);
        }
        return IntPolynomial::from_nonzero(c);
    }
    // x^r (x^p − 1) − (x^p − 1) Σ u_j x^{r−j} − Σ v_j x^{p−j}
    let mut c = vec![BigInt::zero(); r + p + 1];
    c[r + p] += 1;
    c[r] -= 1;
    for (j, &b) in u.iter().enumerate() {
        if b == 1 {
            let e = r - 1 - j;
            c[e + p] -= 1;
            c[e] += 1;
        }
    }
    for (j, &b) in v.iter().enumerate() {
        if b == 1 {
            c[p - 1 - j] -= 1;
        }
    }
    IntPolynomial::from_nonzero(c)
}

/// Parry's condition: `σ^j s ≺ s` for every `j ≥ 1`.
pub fn is_parry_admissible(s: &PeriodicSeq) -> bool {
    (1..=s.distinct_shifts()).all(|j| lex_cmp(&shift(s, j), s) == Ordering::Less)
}

pub fn default_budget(period: usize) -> usize {
    4 * period + 64
}

#[derive(Debug, Clone)]
enum UpperBound {
    Quasi(PeriodicSeq),
    Lazy(GreedyExpansion),
}

/// The criterion `d̄ ≺ σ^j ε ≺ d` for one base, reusable across many
/// sequences. `d` is `d'(β)` when `d(β)` is finite, otherwise `d(β)`.
#[derive(Debug, Clone)]
pub struct UniquenessCriterion {
    bound: UpperBound,
}

impl UniquenessCriterion {
    pub fn new(beta: &BetaValue) -> Self {
        let d = d_of_beta(beta);
        let bound = match quasi_greedy_of(&d) {
            Ok(q) => UpperBound::Quasi(q),
            Err(_) => UpperBound::Lazy(d),
        };
        UniquenessCriterion { bound }
    }

    /// `Some(d'(β))` when the bound is the quasi-greedy expansion.
    pub fn quasi_greedy(&self) -> Option<&PeriodicSeq> {
        match &self.bound {
            UpperBound::Quasi(q) => Some(q),
            UpperBound::Lazy(_) => None,
        }
    }

    pub fn check(&self, s: &PeriodicSeq) -> Result<bool> {
        self.check_with_budget(s, default_budget(s.period_len()))
    }

    pub fn check_with_budget(&self, s: &PeriodicSeq, budget: usize) -> Result<bool> {
        if !s.is_purely_periodic() {
            return Err(Error::PreconditionViolated(format!(
                "{s} is not purely periodic"
            )));
        }
        for j in 0..s.period_len() {
            let t = shift(s, j);
            match &self.bound {
                UpperBound::Quasi(d) => {
                    if lex_cmp(&t, d) != Ordering::Less || lex_cmp(&mirror(d), &t) != Ordering::Less {
                        return Ok(false);
                    }
                }
                UpperBound::Lazy(d) => {
                    if cmp_lazy(&t, d, false, budget)? != Ordering::Less
                        || cmp_lazy(&t, d, true, budget)? != Ordering::Greater
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Compares `t` with `d` (or with `d̄` when `mirrored`) digit by digit.
fn cmp_lazy(t: &PeriodicSeq, d: &GreedyExpansion, mirrored: bool, budget: usize) -> Result<Ordering> {
    for i in 0..budget {
        let di = match d.digit(i) {
            Ok(b) => b,
            Err(Error::UndecidableDigit { .. }) => return Err(Error::Undecided { budget: i }),
            Err(e) => return Err(e),
        };
        let di = if mirrored { 1 - di } else { di };
        match t.at(i).cmp(&di) {
            Ordering::Equal => continue,
            o => return Ok(o),
        }
    }
    Err(Error::Undecided { budget })
}

/// Whether the purely periodic `s` is the unique `β`-expansion of its value.
pub fn is_unique_expansion(beta: &BetaValue, s: &PeriodicSeq) -> Result<bool> {
    UniquenessCriterion::new(beta).check(s)
}

/// `F_β`: `βx` on `[0, 1/β)`, `βx − 1` on `(1/(β(β−1)), 1/(β−1)]`.
pub fn f_beta(beta: &BetaValue, x: f64) -> Result<f64> {
    f_beta_f64(beta.approx(), x)
}

pub fn f_beta_f64(b: f64, x: f64) -> Result<f64> {
    let top = 1.0 / (b - 1.0);
    if !(0.0..=top).contains(&x) {
        return Err(Error::OutOfDomain(x));
    }
    if x < 1.0 / b {
        Ok(b * x)
    } else if x > 1.0 / (b * (b - 1.0)) {
        Ok(b * x - 1.0)
    } else {
        Err(Error::MiddleGap(x))
    }
}

/// Whether `x` lies in `((2−β)/(β−1), 1)`.
pub fn in_attractor_interval(beta: f64, x: f64) -> bool {
    x > (2.0 - beta) / (beta - 1.0) && x < 1.0
}

/// Membership of `x = π_β(s)` in `A_β = X_β ∩ ((2−β)/(β−1), 1)`.
pub fn in_attractor(beta: &BetaValue, s: &PeriodicSeq) -> Result<bool> {
    let x = pi_beta(beta, s);
    if !in_attractor_interval(beta.approx(), x) {
        return Ok(false);
    }
    is_unique_expansion(beta, s)
}

#[allow(dead_code)]
pub(crate) fn eval_orbit_point(p: &[Rational], x: &Rational) -> Rational {
    poly::eval_rat(p, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PeriodicSeq {
        s.parse().unwrap()
    }

    fn alg(coeffs: &[i64]) -> BetaValue {
        let p = IntPolynomial::from_i64(coeffs).unwrap();
        BetaValue::algebraic(
            AlgebraicReal::new(p, Rational::one(), Rational::from_integer(2.into())).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn greedy_examples() {
        let one = Rational::one();
        assert_eq!(greedy_expansion(&alg(&[-1, -1, 1]), &one, 4).unwrap().to_string(), "1100");
        assert_eq!(greedy_expansion(&alg(&[-1, 1, -2, 1]), &one, 6).unwrap().to_string(), "110100");
        let b = BetaValue::float(1.9).unwrap();
        assert_eq!(greedy_expansion(&b, &Rational::zero(), 5).unwrap().to_string(), "00000");
        assert!(greedy_expansion(&b, &Rational::from_integer(2.into()), 3).is_err());
    }

    #[test]
    fn d_of_beta_examples() {
        let d2 = d_of_beta(&alg(&[-1, -1, 1]));
        assert_eq!(d2.finite_flag(), FiniteFlag::Finite(2));
        assert_eq!(d2.digits(2).unwrap().to_string(), "11");
        let d3 = d_of_beta(&alg(&[-1, -1, -1, 1]));
        assert_eq!(d3.finite_flag(), FiniteFlag::Finite(3));
        let d = d_of_beta(&BetaValue::float(1.9).unwrap());
        assert!(d.digits(5).unwrap().to_string().starts_with("1110"));
        assert!(matches!(d.finite_flag(), FiniteFlag::Unknown(_)));
    }

    #[test]
    fn quasi_greedy_examples() {
        assert_eq!(quasi_greedy(&alg(&[-1, -1, 1])).unwrap(), ps("(10)^w"));
        assert_eq!(quasi_greedy(&alg(&[-1, 1, -2, 1])).unwrap(), ps("(1100)^w"));
        assert_eq!(
            quasi_greedy(&alg(&[-1, 0, -1, 0, -1, -1, 1])).unwrap(),
            ps("(110100)^w")
        );
        assert_eq!(quasi_greedy(&BetaValue::float(1.9).unwrap()), Err(Error::NotParry));
    }

    #[test]
    fn pi_examples() {
        let b = 1.7;
        assert_eq!(pi_beta_f64(b, &ps("(0)^w")), 0.0);
        assert!((pi_beta_f64(b, &ps("(1)^w")) - 1.0 / (b - 1.0)).abs() < 1e-12);
        assert!((pi_beta_f64(b, &ps("(01)^w")) - 1.0 / (b * b - 1.0)).abs() < 1e-12);
        let q = Rational::new(17.into(), 10.into());
        let exact = pi_beta_rational(&q, &ps("1(01)^w"));
        assert!((poly::rational_to_f64(&exact) - pi_beta_f64(1.7, &ps("1(01)^w"))).abs() < 1e-12);
    }

    #[test]
    fn solve_base_examples() {
        let g = solve_base(&ps("(10)^w")).unwrap().approx();
        assert!((g - 1.618033988749895).abs() < 1e-12);
        assert!((solve_base(&ps("(110)^w")).unwrap().approx() - 1.83929).abs() < 1e-5);
        assert!((solve_base(&ps("(11010)^w")).unwrap().approx() - 1.81240).abs() < 1e-5);
        assert!((solve_base(&ps("11(0)^w")).unwrap().approx() - 1.618033988749895).abs() < 1e-12);
        assert!(solve_base(&ps("(1)^w")).is_err());
        assert!(solve_base(&ps("1(0)^w")).is_err());
        assert!(solve_base(&ps("(0)^w")).is_err());
    }

    #[test]
    fn parry_examples() {
        assert!(is_parry_admissible(&ps("11(0)^w")));
        assert!(!is_parry_admissible(&ps("(10)^w")));
        assert!(!is_parry_admissible(&ps("(0)^w")));
    }

    #[test]
    fn uniqueness_examples() {
        let f = |b: f64, s: &str| is_unique_expansion(&BetaValue::float(b).unwrap(), &ps(s)).unwrap();
        assert!(f(1.9, "(01)^w"));
        assert!(!f(1.5, "(01)^w"));
        assert!(f(1.8, "(0011)^w"));
        assert!(!f(1.7, "(0011)^w"));
        assert!(is_unique_expansion(&BetaValue::float(1.9).unwrap(), &ps("11(01)^w")).is_err());
    }

    #[test]
    fn f_beta_examples() {
        let b = BetaValue::float(1.9).unwrap();
        assert_eq!(f_beta(&b, 0.0).unwrap(), 0.0);
        let top = 1.0 / 0.9;
        assert!((f_beta(&b, top).unwrap() - top).abs() < 1e-12);
        let x = pi_beta(&b, &ps("(01)^w"));
        assert!((f_beta(&b, x).unwrap() - pi_beta(&b, &ps("(10)^w"))).abs() < 1e-12);
        assert!(matches!(f_beta(&b, 0.55), Err(Error::MiddleGap(_))));
        assert!(matches!(f_beta(&b, 2.0), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn attractor_examples() {
        let b = BetaValue::float(1.9).unwrap();
        assert!(in_attractor(&b, &ps("(01)^w")).unwrap());
        assert!(!in_attractor(&b, &ps("(0)^w")).unwrap());
        assert!(in_attractor(&BetaValue::float(1.8).unwrap(), &ps("(0011)^w")).unwrap());
    }

    #[test]
    fn beta_parse_print() {
        let b: BetaValue = "poly:[-1,-1,1]@(1,2)".parse().unwrap();
        assert_eq!(b.to_string(), "poly:[-1,-1,1]@(1,2)");
        let f: BetaValue = "float:1.9".parse().unwrap();
        assert_eq!(f.to_string(), "float:1.9");
        assert!("float:2.5".parse::<BetaValue>().is_err());
        assert!("poly:[-1,-1,1]@(2,3)".parse::<BetaValue>().is_err());
        assert!("poly:[-4,0,1]@(3/2,5/2)".parse::<BetaValue>().is_err());
    }

    #[test]
    fn float_tolerance_raises_at_branch_point() {
        // 1.5 * (2/3) = 1 exactly.
        let b = BetaValue::float(1.5).unwrap();
        let x = Rational::new(2.into(), 3.into());
        assert_eq!(greedy_expansion(&b, &x, 3), Err(Error::UndecidableDigit { index: 0 }));
        assert_eq!(greedy_expansion(&b.exact(), &x, 3).unwrap().to_string(), "100");
    }

    #[test]
    fn compare_bases() {
        let g = alg(&[-1, -1, 1]);
        let f = BetaValue::float(1.7).unwrap();
        assert_eq!(g.compare(&f).unwrap(), Ordering::Less);
        assert_eq!(f.compare(&g).unwrap(), Ordering::Greater);
        assert_eq!(g.compare(&alg(&[-1, -1, -1, 1])).unwrap(), Ordering::Less);
        assert!(f.compare(&BetaValue::float(1.7).unwrap()).is_err());
    }
}
