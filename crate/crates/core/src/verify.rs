//! Seeded property suites that exercise the lemmas behind the thresholds.
//!
//! Each suite returns a [`SuiteResult`] with the number of cases checked and
//! a description of every failure, so callers can print one line per suite.

use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::Result;
use crate::expansions::{
    d_of_beta, f_beta_f64, is_parry_admissible, is_unique_expansion, pi_beta, pi_beta_f64, quasi_greedy,
    solve_base, BetaValue, FiniteFlag, GreedyExpansion,
};
use crate::thresholds::beta_n;
use crate::trapezoid::{h_decode, h_encode, point_with_itinerary, t_beta, unimodal_cmp, Itinerary, ItinerarySymbol, TrapezoidParams};
use crate::words::{
    detect_halfmirror, in_gamma, lex_cmp, mirror, mu, mu_word, shift, thue_morse_tail, BinaryWord, PeriodicSeq,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const H_CASES: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

fn random_bits(rng: &mut StdRng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..=1u8)).collect()
}

/// A random eventually periodic sequence with short preperiod and period.
pub fn random_seq(rng: &mut StdRng, max_pre: usize, max_per: usize) -> PeriodicSeq {
    let pre = rng.gen_range(0..=max_pre);
    let per = rng.gen_range(1..=max_per);
    PeriodicSeq::new(
        BinaryWord::new(random_bits(rng, pre)).expect("binary"),
        BinaryWord::new(random_bits(rng, per)).expect("binary"),
    )
    .expect("nonempty period")
}

fn all_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..(1 << len)).map(move |x| (0..len).rev().map(|i| ((x >> i) & 1) as u8).collect())
}

fn table_bases() -> Result<Vec<(u64, BetaValue)>> {
    (2..=8).map(|k| beta_n(k, 1e-12).map(|b| (k, b))).collect()
}

/// Parry-admissible finite words `w` (ending in 1, at least two 1s) with
/// `|w| ≤ max_len`, i.e. greedy expansions `w 0^∞` of 1.
pub fn admissible_words(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 2..=max_len {
        for w in all_words(len) {
            if w[len - 1] != 1 || w.iter().filter(|&&b| b == 1).count() < 2 {
                continue;
            }
            let s = PeriodicSeq::from_bits(w.clone(), vec![0]);
            if is_parry_admissible(&s) {
                out.push(w);
            }
        }
    }
    out
}

/// `d(β) ↦ β` is increasing: random algebraic pairs compare like their
/// greedy expansions of 1.
pub fn monotonicity(seed: u64, pairs: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("monotonicity");
    let mut rng = StdRng::seed_from_u64(seed);
    let words = admissible_words(10);
    for _ in 0..pairs {
        let a = &words[rng.gen_range(0..words.len())];
        let b = &words[rng.gen_range(0..words.len())];
        let ba = solve_base(&PeriodicSeq::from_bits(a.clone(), vec![0]))?;
        let bb = solve_base(&PeriodicSeq::from_bits(b.clone(), vec![0]))?;
        let numeric = ba.compare(&bb)?;
        let da = d_of_beta(&ba).digits(24)?;
        let db = d_of_beta(&bb).digits(24)?;
        let lex = da.bits().cmp(db.bits());
        r.check(numeric == lex, || format!("{a:?} vs {b:?}: numeric {numeric:?}, lex {lex:?}"));
    }
    Ok(r)
}

/// `d(solve_base(w 0^∞)) = w 0^∞` for every admissible `w` with `|w| ≤ 10`.
pub fn parry_round_trip(max_len: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("parry admissibility round-trip");
    for w in admissible_words(max_len) {
        let beta = solve_base(&PeriodicSeq::from_bits(w.clone(), vec![0]))?;
        let d = d_of_beta(&beta);
        let ok = d.finite_flag() == FiniteFlag::Finite(w.len()) && d.digits(w.len())?.bits() == &w[..];
        r.check(ok, || format!("{w:?} -> {}", d.known_digits()));
    }
    Ok(r)
}

/// Compares the lazily expanded `d` with a periodic sequence, giving up after
/// `budget` digits.
fn cmp_expansion(d: &GreedyExpansion, s: &PeriodicSeq, budget: usize) -> Option<Ordering> {
    for i in 0..budget {
        let di = d.digit(i).ok()?;
        match di.cmp(&s.at(i)) {
            Ordering::Equal => continue,
            o => return Some(o),
        }
    }
    None
}

/// No `d(β̃)` fits strictly between `d'(β)` and `d(β)`.
pub fn noroom(seed: u64, per_base: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("noroom");
    let mut rng = StdRng::seed_from_u64(seed);
    for (k, beta) in table_bases()? {
        let q = quasi_greedy(&beta)?;
        let d = d_of_beta(&beta);
        let n = match d.finite_flag() {
            FiniteFlag::Finite(n) => n,
            _ => {
                r.check(false, || format!("d(beta_{k}) not finite"));
                continue;
            }
        };
        let dfull = PeriodicSeq::from_bits(d.digits(n)?.into_bits(), vec![0]);
        for _ in 0..per_base {
            // Half the samples land close to the base itself.
            let t = if rng.gen_bool(0.5) {
                rng.gen_range(1.0001..1.9999)
            } else {
                beta.approx() + rng.gen_range(-1e-3..1e-3)
            };
            let dt = d_of_beta(&BetaValue::float(t)?);
            let above = cmp_expansion(&dt, &q, 128);
            let below = cmp_expansion(&dt, &dfull, 128);
            let inside = above == Some(Ordering::Greater) && below == Some(Ordering::Less);
            r.check(!inside, || format!("d({t}) lies between d'(beta_{k}) and d(beta_{k})"));
        }
    }
    Ok(r)
}

/// `π_β(d'(β)) = 1` on the tabulated bases, and the quasi-greedy identity
/// for sequences that are maximal among their shifts.
pub fn quasi_greedy_is_one(max_len: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("quasi-greedy evaluates to 1");
    for (k, beta) in table_bases()? {
        let q = quasi_greedy(&beta)?;
        let v = pi_beta(&beta, &q);
        r.check((v - 1.0).abs() < 1e-12, || format!("beta_{k}: pi(d') = {v}"));
    }
    for n in 2..=max_len {
        for w in all_words(n) {
            let s = PeriodicSeq::from_bits(vec![], w.clone());
            if s.period_len() != n {
                continue;
            }
            if !(1..n).all(|j| lex_cmp(&shift(&s, j), &s) == Ordering::Less) {
                continue;
            }
            let mut finite = w.clone();
            r.check(w[n - 1] == 0, || format!("{s}: last digit is 1"));
            finite[n - 1] = 1;
            if finite.iter().filter(|&&b| b == 1).count() < 2 {
                continue;
            }
            let beta = solve_base(&PeriodicSeq::from_bits(finite, vec![0]))?;
            let q = quasi_greedy(&beta)?;
            r.check(q == s, || format!("{s}: quasi-greedy {q}"));
        }
    }
    Ok(r)
}

/// `s ∈ Γ ⟺ s` starts with 1 and `μ(s) ∈ Γ`, over every purely periodic `s`
/// of period at most `max_len`.
pub fn gamma_mu_closure(max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("gamma/mu closure");
    for n in 1..=max_len {
        for w in all_words(n) {
            let s = PeriodicSeq::from_bits(vec![], w);
            if s.period_len() != n {
                continue;
            }
            let lhs = in_gamma(&s);
            let rhs = s.at(0) == 1 && in_gamma(&mu(&s));
            r.check(lhs == rhs, || format!("{s}: in_gamma {lhs}, via mu {rhs}"));
        }
    }
    r
}

/// `μ` fixes the shifted Thue–Morse sequence on a prefix of length `2^log_len`.
pub fn mu_fixed_point(log_len: u32) -> SuiteResult {
    let mut r = SuiteResult::new("mu fixed point");
    let half = 1usize << (log_len - 1);
    let image = mu_word(&thue_morse_tail(half));
    let target = thue_morse_tail(2 * half + 1);
    let first_bad = image.bits().iter().zip(target.bits()).position(|(a, b)| a != b);
    r.check(first_bad.is_none() && image.len() == target.len(), || {
        format!("mu(L) differs from L at {first_bad:?}")
    });
    r
}

/// Every `(v v̄)^∞ ∈ Γ` of smallest period `2|v|` with `1 < |v| ≤ max_len`
/// gives `(w0)^∞ ∈ Γ` (`v = w1`) of smallest period `|v|`, below it.
pub fn square_resolution(max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("period-halving square resolution");
    for k in 2..=max_len {
        for v in all_words(k) {
            let mut per = v.clone();
            per.extend(v.iter().map(|b| 1 - b));
            let eps = PeriodicSeq::from_bits(vec![], per);
            if eps.period_len() != 2 * k || !in_gamma(&eps) {
                continue;
            }
            let mut w0 = v.clone();
            let ends_in_one = w0[k - 1] == 1;
            w0[k - 1] = 0;
            let e2 = PeriodicSeq::from_bits(vec![], w0);
            let ok = ends_in_one && in_gamma(&e2) && e2.period_len() == k && lex_cmp(&e2, &eps) == Ordering::Less;
            r.check(ok, || format!("{eps} -> {e2}"));
        }
    }
    r
}

/// `h_decode ∘ h_encode = id` on random sequences, and `h_encode ∘ h_decode
/// = id` on random `{L, R}` itineraries.
pub fn h_round_trip(seed: u64, cases: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("h round-trip");
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..cases {
        if i % 2 == 0 {
            let s = random_seq(&mut rng, 6, 16);
            let back = h_decode(&h_encode(&s))?;
            r.check(back == s, || format!("{s} -> {back}"));
        } else {
            let pre = rng.gen_range(0..=6);
            let per = rng.gen_range(1..=16);
            let sym = |b: u8| if b == 1 { ItinerarySymbol::R } else { ItinerarySymbol::L };
            let it = Itinerary::new(
                random_bits(&mut rng, pre).into_iter().map(sym).collect(),
                random_bits(&mut rng, per).into_iter().map(sym).collect(),
            );
            let back = h_encode(&h_decode(&it)?);
            r.check(back == it, || format!("{it} -> {back}"));
        }
    }
    Ok(r)
}

/// `h` keeps the smallest period `p` or halves it, halving exactly when the
/// period word is `v v̄`.
pub fn h_period_transfer(seed: u64, cases: usize) -> SuiteResult {
    let mut r = SuiteResult::new("h period transfer");
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..cases {
        let s = if i % 4 == 0 {
            // Force some half-mirror periods.
            let k = rng.gen_range(1..=8);
            let v = random_bits(&mut rng, k);
            let mut per = v.clone();
            per.extend(v.iter().map(|b| 1 - b));
            PeriodicSeq::from_bits(vec![], per)
        } else {
            random_seq(&mut rng, 0, 16)
        };
        let p = s.period_len();
        let q = h_encode(&s).period_len();
        let halves = detect_halfmirror(&s.period()).is_some();
        let ok = if halves { 2 * q == p } else { q == p };
        r.check(ok, || format!("{s}: p = {p}, q = {q}, half-mirror {halves}"));
    }
    r
}

/// `ε ≺ ε' ⟺ h(ε) ≺_u h(ε')`.
pub fn h_order_isomorphism(seed: u64, cases: usize) -> SuiteResult {
    let mut r = SuiteResult::new("h order isomorphism");
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..cases {
        let a = random_seq(&mut rng, 6, 12);
        let b = if i % 3 == 0 {
            // Share a long prefix so the comparison is not decided at once.
            let cut = rng.gen_range(0..=20);
            let tail = random_seq(&mut rng, 4, 8);
            let mut pre = a.prefix(cut).into_bits();
            pre.extend_from_slice(tail.pre_bits());
            PeriodicSeq::from_bits(pre, tail.per_bits().to_vec())
        } else {
            random_seq(&mut rng, 6, 12)
        };
        let lex = lex_cmp(&a, &b);
        let uni = unimodal_cmp(&h_encode(&a), &h_encode(&b));
        r.check(lex == uni, || format!("{a} vs {b}: lex {lex:?}, unimodal {uni:?}"));
    }
    r
}

/// The two worked examples of `h`.
pub fn h_golden() -> Result<SuiteResult> {
    let mut r = SuiteResult::new("h golden examples");
    for (s, it) in [("(1100)^w", "(RL)^w"), ("(11010110010100)^w", "(RLRRRRL)^w")] {
        let s: PeriodicSeq = s.parse()?;
        let it: Itinerary = it.parse()?;
        let enc = h_encode(&s);
        r.check(enc == it, || format!("h({s}) = {enc}"));
        let dec = h_decode(&it)?;
        r.check(dec == s, || format!("h^-1({it}) = {dec}"));
        r.check(detect_halfmirror(&s.period()).is_some(), || format!("{s} is not v v-bar"));
    }
    Ok(r)
}

/// `F_β^{ℓ+1}(x) = T_β^{ℓ+1}(x)` for `x` the point coded by `h(1^ℓ 0 …)`.
pub fn conjugacy_segment(seed: u64, cases: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("conjugacy segment");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut attempts = 0;
    while r.cases < cases && attempts < 50 * cases {
        attempts += 1;
        let b = rng.gen_range(1.62..1.98);
        let ell = rng.gen_range(0..=8usize);
        let tail = random_seq(&mut rng, 0, 10);
        let mut pre = vec![1u8; ell];
        pre.push(0);
        let s = PeriodicSeq::from_bits(pre, tail.per_bits().to_vec());
        let beta = BetaValue::float(b)?;
        let p = TrapezoidParams::new(beta.clone());
        let Ok(x) = point_with_itinerary(&p, &h_encode(&s)) else {
            continue;
        };
        let (mut xf, mut xt) = (x, x);
        let mut ok = true;
        for _ in 0..=ell {
            match (f_beta_f64(b, xf), t_beta(&p, xt)) {
                (Ok(a), Ok(c)) => {
                    xf = a;
                    xt = c;
                }
                _ => ok = false,
            }
        }
        if !ok {
            continue;
        }
        r.check((xf - xt).abs() < 1e-10, || format!("beta {b}, {s}: F {xf}, T {xt}"));
    }
    Ok(r)
}

/// `F_β(π_β(s)) = π_β(σ s)` for unique expansions `s`.
pub fn f_conjugacy(seed: u64, cases: usize) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("F conjugacy");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut attempts = 0;
    while r.cases < cases && attempts < 50 * cases {
        attempts += 1;
        let b = rng.gen_range(1.62..1.98);
        let beta = BetaValue::float(b)?;
        let len = rng.gen_range(2..=10);
        let per = random_bits(&mut rng, len);
        let s = PeriodicSeq::from_bits(vec![], per);
        if !matches!(is_unique_expansion(&beta, &s), Ok(true)) {
            continue;
        }
        let lhs = f_beta_f64(b, pi_beta_f64(b, &s))?;
        let rhs = pi_beta_f64(b, &shift(&s, 1));
        r.check((lhs - rhs).abs() < 1e-12, || format!("beta {b}, {s}: {lhs} vs {rhs}"));
    }
    Ok(r)
}

/// `lex_cmp` is a total order on random triples.
pub fn lex_total_order(seed: u64, cases: usize) -> SuiteResult {
    let mut r = SuiteResult::new("lex total order");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..cases {
        let a = random_seq(&mut rng, 4, 6);
        let b = random_seq(&mut rng, 4, 6);
        let c = random_seq(&mut rng, 4, 6);
        let ab = lex_cmp(&a, &b);
        let anti = lex_cmp(&b, &a) == ab.reverse() && ((ab == Ordering::Equal) == (a == b));
        let trans = !(ab != Ordering::Greater && lex_cmp(&b, &c) != Ordering::Greater)
            || lex_cmp(&a, &c) != Ordering::Greater;
        r.check(anti && trans, || format!("{a}, {b}, {c}"));
        let m = mirror(&a);
        r.check(lex_cmp(&mirror(&m), &a) == Ordering::Equal, || format!("mirror {a}"));
    }
    r
}

/// Every suite, in a fixed order.
pub fn run_all(seed: u64) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        monotonicity(seed, 100)?,
        parry_round_trip(10)?,
        noroom(seed, 100)?,
        quasi_greedy_is_one(10)?,
        gamma_mu_closure(12),
        mu_fixed_point(14),
        square_resolution(10),
        h_round_trip(seed, H_CASES)?,
        h_period_transfer(seed, H_CASES),
        h_order_isomorphism(seed, H_CASES),
        h_golden()?,
        conjugacy_segment(seed, 1000)?,
        f_conjugacy(seed, 1000)?,
        lex_total_order(seed, H_CASES),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(parry_round_trip(6).unwrap().passed());
        assert!(gamma_mu_closure(8).passed());
        assert!(mu_fixed_point(10).passed());
        assert!(square_resolution(6).passed());
        assert!(h_golden().unwrap().passed());
        assert!(h_round_trip(1, 200).unwrap().passed());
        assert!(h_period_transfer(1, 200).passed());
        assert!(h_order_isomorphism(1, 200).passed());
    }

    #[test]
    fn admissible_words_are_greedy_shaped() {
        let w = admissible_words(4);
        assert!(w.contains(&vec![1, 1]));
        assert!(w.contains(&vec![1, 1, 0, 1]));
        assert!(!w.contains(&vec![1, 0, 1, 1]));
    }
}
