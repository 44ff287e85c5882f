//! The trapezoidal maps `T_β`, itineraries over `{L, C, R}`, the encoding
//! `h` of digit sequences as itineraries, and periodic orbit search.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansions::{f_beta_f64, pi_beta_f64, BetaValue};
use crate::oracle::enumerate_primitive_necklaces;
use crate::seq::{Lasso, Symbol};
use crate::thresholds::beta_n;
use crate::words::PeriodicSeq;

pub const BOUNDARY_TOLERANCE: f64 = 1e-10;
pub const MAX_CYCLE_LENGTH: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ItinerarySymbol {
    L,
    C,
    R,
}

impl Symbol for ItinerarySymbol {
    fn to_char(self) -> char {
        match self {
            ItinerarySymbol::L => 'L',
            ItinerarySymbol::C => 'C',
            ItinerarySymbol::R => 'R',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'L' => Some(ItinerarySymbol::L),
            'C' => Some(ItinerarySymbol::C),
            'R' => Some(ItinerarySymbol::R),
            _ => None,
        }
    }
}

use ItinerarySymbol::{C, L, R};

/// A finite or eventually periodic word over `{L, C, R}`, kept canonical.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Itinerary(Lasso<ItinerarySymbol>);

impl Itinerary {
    pub fn new(pre: Vec<ItinerarySymbol>, per: Vec<ItinerarySymbol>) -> Self {
        Itinerary(Lasso::new(pre, per))
    }

    pub fn finite(word: Vec<ItinerarySymbol>) -> Self {
        Itinerary(Lasso::finite(word))
    }

    pub fn periodic(per: Vec<ItinerarySymbol>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::PreconditionViolated("empty period".into()));
        }
        Ok(Itinerary(Lasso::new(Vec::new(), per)))
    }

    pub fn preperiod(&self) -> &[ItinerarySymbol] {
        self.0.preperiod()
    }

    pub fn period(&self) -> &[ItinerarySymbol] {
        self.0.period()
    }

    pub fn period_len(&self) -> usize {
        self.0.period().len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.0.is_purely_periodic()
    }

    pub fn get(&self, i: usize) -> Option<ItinerarySymbol> {
        self.0.get(i)
    }

    pub fn prefix(&self, n: usize) -> Vec<ItinerarySymbol> {
        self.0.prefix(n)
    }

    pub fn contains_c(&self) -> bool {
        self.preperiod().contains(&C) || self.period().contains(&C)
    }

    /// Length of a finite itinerary.
    pub fn len(&self) -> Option<usize> {
        self.0.finite_len()
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Itinerary({self})")
    }
}

impl FromStr for Itinerary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lasso::parse(s).map(Itinerary)
    }
}

impl TryFrom<String> for Itinerary {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Itinerary> for String {
    fn from(it: Itinerary) -> String {
        it.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct TrapezoidParams {
    pub beta: BetaValue,
    pub clip: Option<(Side, f64)>,
}

impl TrapezoidParams {
    pub fn new(beta: BetaValue) -> Self {
        TrapezoidParams { beta, clip: None }
    }

    /// The map with its top sawn off at the level of `x1`.
    pub fn clipped(beta: BetaValue, side: Side, x1: f64) -> Result<Self> {
        let b = beta.approx();
        let top = 1.0 / (b - 1.0);
        let ok = match side {
            Side::Left => (0.0..=1.0 / b).contains(&x1),
            Side::Right => (1.0 / (b * (b - 1.0))..=top).contains(&x1),
        };
        if !ok {
            return Err(Error::PreconditionViolated(format!(
                "clip point {x1} is not on the {side:?} branch"
            )));
        }
        Ok(TrapezoidParams {
            beta,
            clip: Some((side, x1)),
        })
    }

    fn b(&self) -> f64 {
        self.beta.approx()
    }

    pub fn domain_end(&self) -> f64 {
        1.0 / (self.b() - 1.0)
    }

    /// Endpoints `(a, b)` of the plateau `C = [a, b]`.
    pub fn plateau(&self) -> (f64, f64) {
        let b = self.b();
        let top = self.domain_end();
        match self.clip {
            None => (1.0 / b, 1.0 / (b * (b - 1.0))),
            Some((Side::Left, x1)) => (x1, top - x1),
            Some((Side::Right, x1)) => (top - x1, x1),
        }
    }
}

/// `T_β(x)`.
pub fn t_beta(p: &TrapezoidParams, x: f64) -> Result<f64> {
    let top = p.domain_end();
    if !(0.0..=top).contains(&x) {
        return Err(Error::OutOfDomain(x));
    }
    let b = p.b();
    let (lo, hi) = p.plateau();
    Ok(if x < lo {
        b * x
    } else if x <= hi {
        b * lo
    } else {
        (b / (b - 1.0) - b * x).max(0.0)
    })
}

fn classify(p: &TrapezoidParams, x: f64, index: usize) -> Result<ItinerarySymbol> {
    let (lo, hi) = p.plateau();
    for edge in [lo, hi] {
        if x != edge && (x - edge).abs() < BOUNDARY_TOLERANCE {
            return Err(Error::BoundaryAmbiguity { index, x });
        }
    }
    Ok(if x < lo {
        L
    } else if x <= hi {
        C
    } else {
        R
    })
}

/// The first `n` symbols of the itinerary of `x`.
pub fn itinerary(p: &TrapezoidParams, x: f64, n: usize) -> Result<Itinerary> {
    let mut word = Vec::with_capacity(n);
    let mut y = x;
    for i in 0..n {
        if !(0.0..=p.domain_end()).contains(&y) {
            return Err(Error::OutOfDomain(y));
        }
        word.push(classify(p, y, i)?);
        y = t_beta(p, y)?;
    }
    Ok(Itinerary::finite(word))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapKind {
    F,
    T,
}

/// `x, M(x), …, M^steps(x)` for `M = F_β` or `T_β`.
pub fn orbit(beta: &BetaValue, kind: MapKind, x: f64, steps: usize) -> Result<Vec<f64>> {
    let p = TrapezoidParams::new(beta.clone());
    let mut out = vec![x];
    let mut y = x;
    for _ in 0..steps {
        y = match kind {
            MapKind::F => f_beta_f64(beta.approx(), y)?,
            MapKind::T => t_beta(&p, y)?,
        };
        out.push(y);
    }
    Ok(out)
}

fn symbols_of(s: &[u8], prev: &mut u8) -> Vec<ItinerarySymbol> {
    s.iter()
        .map(|&b| {
            let sym = if b != *prev { R } else { L };
            *prev = b;
            sym
        })
        .collect()
}

/// `h`: `R` wherever a digit differs from its predecessor (with a virtual
/// leading 0), `L` elsewhere. This is the blockwise rule
/// `h(1^a 0^b 1*) = R L^{a−1} R L^{b−1} h(1*)`, `h(0*) = L h(*)`.
pub fn h_encode(s: &PeriodicSeq) -> Itinerary {
    let mut prev = 0u8;
    let pre = symbols_of(s.pre_bits(), &mut prev);
    // The first period symbol depends on the last preperiod digit, so it
    // joins the preperiod; the rest is periodic with the same length.
    let per = s.per_bits();
    let mut pre = pre;
    pre.extend(symbols_of(&per[..1], &mut prev));
    let mut rotated = per[1..].to_vec();
    rotated.push(per[0]);
    let per = symbols_of(&rotated, &mut prev);
    Itinerary::new(pre, per)
}

/// Inverse of [`h_encode`] on infinite `{L, R}` itineraries.
pub fn h_decode(it: &Itinerary) -> Result<PeriodicSeq> {
    if it.is_finite() || it.contains_c() {
        return Err(Error::NotInImage(it.to_string()));
    }
    let mut cur = 0u8;
    let mut step = |sym: &ItinerarySymbol| {
        if *sym == R {
            cur ^= 1;
        }
        cur
    };
    let pre: Vec<u8> = it.preperiod().iter().map(&mut step).collect();
    let flips = it.period().iter().filter(|&&s| s == R).count();
    let reps = if flips % 2 == 0 { 1 } else { 2 };
    let per: Vec<u8> = it
        .period()
        .iter()
        .cycle()
        .take(reps * it.period_len())
        .map(&mut step)
        .collect();
    Ok(PeriodicSeq::from_bits(pre, per))
}

/// The unimodal order `L ≺ C ≺ R`, reversed after an odd number of `R`s.
pub fn unimodal_cmp(a: &Itinerary, b: &Itinerary) -> Ordering {
    let Some(i) = a.0.first_difference(&b.0) else {
        return Ordering::Equal;
    };
    let flips = (0..i).filter(|&j| a.get(j) == Some(R)).count();
    let o = a.get(i).cmp(&b.get(i));
    if flips % 2 == 1 {
        o.reverse()
    } else {
        o
    }
}

/// `x ↦ αx + c`.
#[derive(Debug, Clone, Copy)]
struct Affine {
    a: f64,
    c: f64,
}

impl Affine {
    fn branch(b: f64, s: ItinerarySymbol) -> Self {
        match s {
            L => Affine { a: b, c: 0.0 },
            _ => Affine {
                a: -b,
                c: b / (b - 1.0),
            },
        }
    }

    /// `g ∘ self`.
    fn then(self, g: Affine) -> Affine {
        Affine {
            a: g.a * self.a,
            c: g.a * self.c + g.c,
        }
    }

    fn fixed_point(self) -> f64 {
        self.c / (1.0 - self.a)
    }
}

fn cycle_point(b: f64, word: &[ItinerarySymbol]) -> f64 {
    word.iter()
        .fold(Affine { a: 1.0, c: 0.0 }, |acc, &s| acc.then(Affine::branch(b, s)))
        .fixed_point()
}

/// A periodic orbit of `T_β` that never enters the plateau.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LrCycle {
    pub itinerary: Itinerary,
    /// Orbit points in itinerary order, starting from the one coded by the
    /// itinerary's first symbol.
    pub points: Vec<f64>,
}

/// All L-R cycles of primitive period `n`, one per cycle, each reported by
/// its largest rotation.
pub fn find_lr_cycle_points(p: &TrapezoidParams, n: usize) -> Result<Vec<LrCycle>> {
    if n == 0 || n > MAX_CYCLE_LENGTH {
        return Err(Error::TooLarge { n, limit: MAX_CYCLE_LENGTH });
    }
    let b = p.b();
    let (lo, hi) = p.plateau();
    let top = p.domain_end();
    let mut out = Vec::new();
    'words: for neck in enumerate_primitive_necklaces(n)? {
        let word: Vec<ItinerarySymbol> = neck
            .representative
            .bits()
            .iter()
            .map(|&d| if d == 1 { R } else { L })
            .collect();
        let mut points = Vec::with_capacity(n);
        for i in 0..n {
            let mut rot = word.clone();
            rot.rotate_left(i);
            let x = cycle_point(b, &rot);
            let inside = match word[i] {
                L => x >= 0.0 && x < lo,
                _ => x > hi && x <= top,
            };
            if !inside {
                continue 'words;
            }
            if (x - lo).abs() < BOUNDARY_TOLERANCE || (x - hi).abs() < BOUNDARY_TOLERANCE {
                return Err(Error::BoundaryAmbiguity { index: i, x });
            }
            points.push(x);
        }
        out.push(LrCycle {
            itinerary: Itinerary::periodic(word)?,
            points,
        });
    }
    Ok(out)
}

pub fn find_lr_cycles(p: &TrapezoidParams, n: usize) -> Result<Vec<Itinerary>> {
    Ok(find_lr_cycle_points(p, n)?.into_iter().map(|c| c.itinerary).collect())
}

/// The clipped map that saws the top off at the cycle point nearest `C`.
pub fn clip_for_cycle(p: &TrapezoidParams, cycle: &LrCycle) -> Result<TrapezoidParams> {
    let (lo, hi) = p.plateau();
    let dist = |x: f64| if x < lo { lo - x } else { x - hi };
    let x1 = cycle
        .points
        .iter()
        .copied()
        .min_by(|a, b| dist(*a).total_cmp(&dist(*b)))
        .ok_or_else(|| Error::PreconditionViolated("empty cycle".into()))?;
    let side = if x1 < lo { Side::Left } else { Side::Right };
    TrapezoidParams::clipped(p.beta.clone(), side, x1)
}

/// The point of `[0, 1/(β−1)]` with a given infinite `{L, R}` itinerary.
///
/// Raises `NotInImage` when the affine solution does not actually follow
/// the itinerary.
pub fn point_with_itinerary(p: &TrapezoidParams, it: &Itinerary) -> Result<f64> {
    if it.is_finite() || it.contains_c() {
        return Err(Error::NotInImage(it.to_string()));
    }
    let b = p.b();
    let mut x = cycle_point(b, it.period());
    for &s in it.preperiod().iter().rev() {
        let f = Affine::branch(b, s);
        x = (x - f.c) / f.a;
    }
    let (lo, hi) = p.plateau();
    let mut y = x;
    for i in 0..it.preperiod().len() + it.period_len() {
        let ok = match it.get(i) {
            Some(L) => y >= 0.0 && y < lo,
            _ => y > hi && y <= p.domain_end(),
        };
        if !ok {
            return Err(Error::NotInImage(it.to_string()));
        }
        y = t_beta(p, y)?;
    }
    Ok(x)
}

/// A cycle of `T_β` passing through the plateau: the orbit of 1 returning
/// to `C` after `period − 1` steps.
pub fn plateau_cycle_period(p: &TrapezoidParams, max_period: usize) -> Option<usize> {
    let (lo, hi) = p.plateau();
    let mut y = 1.0;
    for k in 1..=max_period {
        if (lo..=hi).contains(&y) {
            return Some(k);
        }
        y = t_beta(p, y).ok()?;
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRow {
    pub beta: f64,
    pub period: usize,
    pub lr_cycle: bool,
    pub plateau_cycle: bool,
}

/// For each `β` and each period `2^j ≤ 2^{j_max}`, whether `T_β` has an L-R
/// cycle and whether the orbit of the plateau closes with that period.
/// Exploratory; there is no pass/fail.
pub fn conjecture_scan(betas: &[f64], j_max: u32) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for &b in betas {
        let p = TrapezoidParams::new(BetaValue::float(b)?);
        for j in 1..=j_max {
            let period = 1usize << j;
            let lr_cycle = match find_lr_cycles(&p, period) {
                Ok(c) => !c.is_empty(),
                Err(Error::BoundaryAmbiguity { .. }) => true,
                Err(e) => return Err(e),
            };
            let plateau_cycle = plateau_cycle_period(&p, 64).is_some_and(|q| period.is_multiple_of(q) && q == period);
            rows.push(ConjectureRow {
                beta: b,
                period,
                lr_cycle,
                plateau_cycle,
            });
        }
    }
    Ok(rows)
}

/// A genuine 3-cycle of the continuous extension `S_β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThreeCycle {
    pub x_star: f64,
    pub orbit: [f64; 3],
    /// `π_β((0011)^∞)` and `π_β((0110)^∞)`.
    pub bracket: (f64, f64),
    pub residual: f64,
}

/// `F_β` with its gap bridged linearly from `(1/β, 1)` to
/// `(1/(β(β−1)), (2−β)/(β−1))`.
pub fn s_beta(b: f64, x: f64) -> f64 {
    let a = 1.0 / b;
    let c = 1.0 / (b * (b - 1.0));
    if x <= a {
        b * x
    } else if x >= c {
        b * x - 1.0
    } else {
        let lo_y = 1.0;
        let hi_y = (2.0 - b) / (b - 1.0);
        lo_y + (x - a) * (hi_y - lo_y) / (c - a)
    }
}

fn s3(b: f64, x: f64) -> f64 {
    s_beta(b, s_beta(b, s_beta(b, x)))
}

fn bisect_s3(b: f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = |x: f64| s3(b, x) - x;
    let glo = g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (g(mid) > 0.0) == (glo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Locates a point of period 3 for `S_β` between `π_β((0011)^∞)` and
/// `π_β((0110)^∞)`, which forces every period for `S_β`.
pub fn extension_3cycle(beta: &BetaValue) -> Result<ThreeCycle> {
    let b4 = beta_n(4, 1e-12)?;
    if beta.compare(&b4)? != Ordering::Greater {
        return Err(Error::PreconditionViolated(format!(
            "beta = {} must exceed beta_4 = {:.8}",
            beta.approx(),
            b4.approx()
        )));
    }
    let b = beta.approx();
    let x1 = pi_beta_f64(b, &"(0011)^w".parse()?);
    let x2 = pi_beta_f64(b, &"(0110)^w".parse()?);
    let g = |x: f64| s3(b, x) - x;
    const GRID: usize = 4096;
    let step = (x2 - x1) / GRID as f64;
    let mut prev = (x1, g(x1));
    for i in 1..=GRID {
        let x = if i == GRID { x2 } else { x1 + step * i as f64 };
        let gx = g(x);
        if (gx > 0.0) != (prev.1 > 0.0) {
            let root = bisect_s3(b, prev.0, x);
            let s1 = s_beta(b, root);
            let residual = (s3(b, root) - root).abs();
            if root > x1 && root < x2 && (s1 - root).abs() > 1e-6 && residual < 1e-10 {
                return Ok(ThreeCycle {
                    x_star: root,
                    orbit: [root, s1, s_beta(b, s1)],
                    bracket: (x1, x2),
                    residual,
                });
            }
        }
        prev = (x, gx);
    }
    Err(Error::Undecided { budget: GRID })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn it(s: &str) -> Itinerary {
        s.parse().unwrap()
    }

    fn ps(s: &str) -> PeriodicSeq {
        s.parse().unwrap()
    }

    fn params(b: f64) -> TrapezoidParams {
        TrapezoidParams::new(BetaValue::float(b).unwrap())
    }

    #[test]
    fn t_beta_examples() {
        let p = params(1.7);
        assert!((t_beta(&p, 1.0 / 1.7).unwrap() - 1.0).abs() < 1e-12);
        assert!(t_beta(&p, 1.0 / 0.7).unwrap().abs() < 1e-12);
        assert!((t_beta(&p, 0.2).unwrap() - 0.34).abs() < 1e-12);
        assert!(matches!(t_beta(&p, 2.0), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn itinerary_examples() {
        let p = params(1.8);
        let cyc = find_lr_cycle_points(&p, 2).unwrap();
        let x = cyc[0].points[0];
        assert_eq!(itinerary(&p, x, 6).unwrap(), it("RLRLRL"));
        assert_eq!(itinerary(&p, 0.0, 5).unwrap(), it("LLLLL"));
        let p = params(1.7);
        let w = itinerary(&p, 1.0 / 1.7, 4).unwrap();
        assert_eq!(w.get(0), Some(C));
        assert_eq!(w.prefix(4)[1..], itinerary(&p, 1.0, 3).unwrap().prefix(3)[..]);
        let near = 1.0 / 1.7 + 1e-12;
        assert!(matches!(itinerary(&p, near, 3), Err(Error::BoundaryAmbiguity { index: 0, .. })));
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_encode(&ps("(1100)^w")), it("(RL)^w"));
        assert_eq!(h_encode(&ps("(11010110010100)^w")), it("(RLRRRRL)^w"));
        assert_eq!(h_encode(&ps("(1)^w")), it("R(L)^w"));
        assert_eq!(h_encode(&ps("(0)^w")), it("(L)^w"));
        assert_eq!(h_encode(&ps("110(0)^w")), it("RLRL(L)^w"));
        assert_eq!(h_decode(&it("(RL)^w")).unwrap(), ps("(1100)^w"));
        assert_eq!(h_decode(&it("R(L)^w")).unwrap(), ps("(1)^w"));
        assert_eq!(h_decode(&it("(RLRRRRL)^w")).unwrap(), ps("(11010110010100)^w"));
        assert!(matches!(h_decode(&it("(RC)^w")), Err(Error::NotInImage(_))));
        assert!(matches!(h_decode(&it("RLR")), Err(Error::NotInImage(_))));
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(unimodal_cmp(&it("L(R)^w"), &it("R(L)^w")), Ordering::Less);
        assert_eq!(unimodal_cmp(&it("RL"), &it("RR")), Ordering::Greater);
        assert_eq!(unimodal_cmp(&it("(RL)^w"), &it("(RL)^w")), Ordering::Equal);
        assert_eq!(unimodal_cmp(&it("LC"), &it("LR")), Ordering::Less);
    }

    #[test]
    fn lr_cycle_examples() {
        assert!(find_lr_cycles(&params(1.8), 2).unwrap().contains(&it("(RL)^w")));
        assert!(find_lr_cycles(&params(1.7), 2).unwrap().is_empty());
        assert!(!find_lr_cycles(&params(1.9), 3).unwrap().is_empty());
        assert!(find_lr_cycles(&params(1.9), 25).is_err());
    }

    #[test]
    fn clipped_map_keeps_cycle() {
        let p = params(1.9);
        for n in 2..=7 {
            for cyc in find_lr_cycle_points(&p, n).unwrap() {
                let q = clip_for_cycle(&p, &cyc).unwrap();
                for (i, &x) in cyc.points.iter().enumerate() {
                    let next = cyc.points[(i + 1) % n];
                    assert!((t_beta(&q, x).unwrap() - next).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn point_with_itinerary_inverts() {
        let p = params(1.85);
        for n in 1..=6 {
            for cyc in find_lr_cycles(&p, n).unwrap() {
                for pre in [vec![], vec![L], vec![L, L]] {
                    let w = Itinerary::new(pre, cyc.period().to_vec());
                    let x = point_with_itinerary(&p, &w).unwrap();
                    assert_eq!(itinerary(&p, x, 12).unwrap().prefix(12), w.prefix(12), "{w}");
                }
            }
        }
        assert!(matches!(point_with_itinerary(&p, &it("(RLL)^w")), Err(Error::NotInImage(_))));
    }

    #[test]
    fn extension_examples() {
        let c = extension_3cycle(&BetaValue::float(1.8).unwrap()).unwrap();
        assert!(c.residual < 1e-10);
        assert!(c.bracket.0 < c.x_star && c.x_star < c.bracket.1);
        assert!(s_beta(1.8, c.x_star) > c.x_star);
        assert!(extension_3cycle(&BetaValue::float(1.76).unwrap()).is_ok());
        assert!(matches!(
            extension_3cycle(&BetaValue::float(1.7).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn itinerary_text_round_trip() {
        for s in ["(RL)^w", "RLLR", "C(LR)^w", ""] {
            let w = it(s);
            assert_eq!(w.to_string().parse::<Itinerary>().unwrap(), w);
        }
    }
}
