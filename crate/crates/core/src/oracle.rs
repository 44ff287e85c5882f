//! Brute-force checks that do not use the `a_k` construction: necklace
//! enumeration, exhaustive membership tests and bisection over `β`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansions::{BetaValue, UniquenessCriterion};
use crate::thresholds::{beta_n, sharkovskii_cmp};
use crate::words::{in_gamma, lex_cmp, BinaryWord, PeriodicSeq};

pub const MAX_NECKLACE_LENGTH: usize = 24;
pub const MAX_BISECTION_PERIOD: usize = 16;
pub const MAX_ORDERING_N: u64 = 30;

/// A rotation class of primitive binary words, represented by its
/// lexicographically largest rotation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Necklace {
    pub representative: BinaryWord,
    pub period: usize,
}

impl Necklace {
    pub fn sequence(&self) -> PeriodicSeq {
        PeriodicSeq::periodic(self.representative.clone()).expect("nonempty")
    }
}

/// One necklace per rotation class of primitive words of length `n`.
///
/// Lyndon words (least rotations) come from the FKM algorithm; their
/// complements are exactly the greatest rotations.
pub fn enumerate_primitive_necklaces(n: usize) -> Result<Vec<Necklace>> {
    if n == 0 || n > MAX_NECKLACE_LENGTH {
        return Err(Error::TooLarge { n, limit: MAX_NECKLACE_LENGTH });
    }
    let mut out = Vec::new();
    fkm(n, &mut |w: &[u8]| {
        out.push(Necklace {
            representative: BinaryWord::from_bits_unchecked(w.iter().map(|b| 1 - b).collect()),
            period: n,
        })
    });
    out.sort_by(|x, y| x.representative.bits().cmp(y.representative.bits()));
    Ok(out)
}

/// Calls `emit` on every Lyndon word of length `n` over `{0, 1}`.
fn fkm(n: usize, emit: &mut impl FnMut(&[u8])) {
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            emit(&w);
        }
        // Extend periodically to length n, then increment.
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            None => return,
            Some(c) => *c = 1,
        }
    }
}

/// `(1/n) Σ_{d|n} μ(d) 2^{n/d}`.
pub fn mobius_necklace_count(n: usize) -> u64 {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * (1i64 << (n / d)))
        .sum::<i64>() as u64
        / n as u64
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// A purely periodic sequence of smallest period `n` that is the unique
/// expansion of its value, if one exists.
pub fn period_n_witness(beta: &BetaValue, n: usize) -> Result<Option<PeriodicSeq>> {
    let crit = UniquenessCriterion::new(beta);
    let mut undecided = None;
    for neck in enumerate_primitive_necklaces(n)? {
        let s = neck.sequence();
        match crit.check(&s) {
            Ok(true) => return Ok(Some(s)),
            Ok(false) => {}
            Err(e) if e.is_undecided() => undecided = Some(e),
            Err(e) => return Err(e),
        }
    }
    match undecided {
        Some(e) => Err(e),
        None => Ok(None),
    }
}

/// Whether `β ∈ U_n`.
pub fn exists_period_n_unique(beta: &BetaValue, n: usize) -> Result<bool> {
    Ok(period_n_witness(beta, n)?.is_some())
}

/// Membership at a float base, retried exactly and then nudged when the
/// base sits on a decision boundary.
fn robust_witness(b: f64, n: usize) -> Result<(f64, Option<PeriodicSeq>)> {
    match period_n_witness(&BetaValue::float(b)?, n) {
        Err(e) if e.is_undecided() => {}
        other => return other.map(|w| (b, w)),
    }
    match period_n_witness(&BetaValue::float_with_tolerance(b, 0.0)?, n) {
        Err(e) if e.is_undecided() => {}
        other => return other.map(|w| (b, w)),
    }
    let nudged = b + 1e-9;
    period_n_witness(&BetaValue::float(nudged)?, n).map(|w| (nudged, w))
}

#[derive(Debug, Clone, Serialize)]
pub struct MinBetaReport {
    pub n: usize,
    pub beta_lo: f64,
    pub beta_hi: f64,
    /// A witness of `β_hi ∈ U_n`.
    pub witness_sequence: String,
    /// 0-based index of `β_n` in the increasing chain `β_2, …, β_16`
    /// predicted by the Sharkovskiĭ order.
    pub chain_position: usize,
    /// Monotonicity spot-check failures; expected empty.
    pub anomalies: Vec<String>,
}

impl MinBetaReport {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.beta_lo + self.beta_hi)
    }

    pub fn beta(&self) -> Result<BetaValue> {
        BetaValue::float_with_tolerance(self.midpoint(), 0.5 * (self.beta_hi - self.beta_lo))
    }
}

/// `inf U_n` by bisection on the predicate `β ∈ U_n`.
pub fn min_beta_for_period(n: usize, eps: f64) -> Result<MinBetaReport> {
    if !(2..=MAX_BISECTION_PERIOD).contains(&n) {
        return Err(Error::PreconditionViolated(format!(
            "n = {n} must be in 2..={MAX_BISECTION_PERIOD}"
        )));
    }
    if !(eps > 0.0) {
        return Err(Error::PreconditionViolated("eps must be positive".into()));
    }
    let (mut lo, mut hi) = (1.5f64, 1.99f64);
    if robust_witness(lo, n)?.1.is_some() {
        return Err(Error::PreconditionViolated(format!("period {n} already unique at {lo}")));
    }
    let (_, mut witness) = robust_witness(hi, n)?;
    if witness.is_none() {
        return Err(Error::PreconditionViolated(format!("no period {n} at {hi}")));
    }
    let mut anomalies = Vec::new();
    let samples: Vec<f64> = (1..=8).map(|i| lo + (hi - lo) * i as f64 / 9.0).collect();
    let mut seen_true = false;
    let mut sample_values = Vec::new();
    for &x in &samples {
        let v = robust_witness(x, n)?.1.is_some();
        if seen_true && !v {
            anomalies.push(format!("predicate false at {x} after true at a smaller base"));
        }
        seen_true |= v;
        sample_values.push((x, v));
    }
    while hi - lo >= eps {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (at, w) = robust_witness(mid, n)?;
        match w {
            Some(w) => {
                hi = at.max(mid);
                witness = Some(w);
            }
            None => lo = at.min(mid),
        }
    }
    for (x, v) in sample_values {
        if (x < lo && v) || (x > hi && !v) {
            anomalies.push(format!("sample {x} disagrees with the final bracket"));
        }
    }
    let chain_position = (2..=MAX_BISECTION_PERIOD as u64)
        .filter(|&k| sharkovskii_cmp(k, n as u64) == Ordering::Greater)
        .count();
    Ok(MinBetaReport {
        n,
        beta_lo: lo,
        beta_hi: hi,
        witness_sequence: witness.map(|w| w.to_string()).unwrap_or_default(),
        chain_position,
        anomalies,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderingReport {
    pub n_max: u64,
    /// Pairs `(k, m)` whose comparison disagrees with the Sharkovskiĭ order.
    pub violations: Vec<(u64, u64)>,
    /// `k` sorted by increasing `β_k`.
    pub chain: Vec<u64>,
    pub values: Vec<(u64, f64)>,
}

/// Checks `β_k < β_m ⟺ k ◁ m` for all `2 ≤ k, m ≤ n_max`.
pub fn verify_ordering(n_max: u64) -> Result<OrderingReport> {
    if !(2..=MAX_ORDERING_N).contains(&n_max) {
        return Err(Error::PreconditionViolated(format!(
            "N = {n_max} must be in 2..={MAX_ORDERING_N}"
        )));
    }
    let betas = (2..=n_max)
        .map(|k| beta_n(k, 1e-10).map(|b| (k, b)))
        .collect::<Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    for (i, (k, bk)) in betas.iter().enumerate() {
        for (m, bm) in &betas[i + 1..] {
            let numeric = bk.compare(bm)?;
            let expected = sharkovskii_cmp(*k, *m).reverse();
            if numeric != expected {
                violations.push((*k, *m));
            }
        }
    }
    let mut chain: Vec<u64> = (2..=n_max).collect();
    chain.sort_by(|&a, &b| sharkovskii_cmp(b, a));
    let mut by_value: Vec<(u64, f64)> = betas.iter().map(|(k, b)| (*k, b.approx())).collect();
    by_value.sort_by(|a, b| a.1.total_cmp(&b.1));
    let numeric_chain: Vec<u64> = by_value.iter().map(|(k, _)| *k).collect();
    if numeric_chain != chain {
        for w in numeric_chain.windows(2) {
            if sharkovskii_cmp(w[0], w[1]) != Ordering::Greater && !violations.contains(&(w[0], w[1])) {
                violations.push((w[0], w[1]));
            }
        }
    }
    Ok(OrderingReport {
        n_max,
        violations,
        chain: numeric_chain,
        values: by_value,
    })
}

/// The least purely periodic member of `Γ` with smallest period `k`.
pub fn gamma_minimum(k: usize) -> Result<Option<PeriodicSeq>> {
    Ok(enumerate_primitive_necklaces(k)?
        .iter()
        .map(Necklace::sequence)
        .filter(in_gamma)
        .min_by(lex_cmp))
}
