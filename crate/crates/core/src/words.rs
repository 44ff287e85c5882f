//! Binary words and eventually periodic binary sequences.
//!
//! Positions are 0-based in code; `s.at(0)` is the first digit `ε₁`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{self, Lasso, Symbol};

impl Symbol for u8 {
    fn to_char(self) -> char {
        if self == 0 {
            '0'
        } else {
            '1'
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(0),
            '1' => Some(1),
            _ => None,
        }
    }
}

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        match bits.iter().find(|&&b| b > 1) {
            Some(b) => Err(Error::Parse(format!("binary symbol expected, got {b}"))),
            None => Ok(BinaryWord(bits)),
        }
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinaryWord(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mirror(&self) -> Self {
        BinaryWord(self.0.iter().map(|b| 1 - b).collect())
    }

    pub fn is_primitive(&self) -> bool {
        seq::is_primitive(&self.0)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }
}

impl TryFrom<String> for BinaryWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BinaryWord> for String {
    fn from(w: BinaryWord) -> String {
        w.to_string()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| u8::from_char(c).ok_or_else(|| Error::Parse(format!("unexpected symbol {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

/// An eventually periodic binary sequence `pre·(per)^∞` in canonical form.
///
/// Serialized as its text form, e.g. `11(0)^w` or `(1100)^w`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PeriodicSeq(Lasso<u8>);

impl PeriodicSeq {
    pub fn new(pre: BinaryWord, per: BinaryWord) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::Parse("period must be nonempty".into()));
        }
        Ok(PeriodicSeq(Lasso::new(pre.0, per.0)))
    }

    /// `(per)^∞`.
    pub fn periodic(per: BinaryWord) -> Result<Self> {
        Self::new(BinaryWord::default(), per)
    }

    pub(crate) fn from_bits(pre: Vec<u8>, per: Vec<u8>) -> Self {
        debug_assert!(!per.is_empty());
        PeriodicSeq(Lasso::new(pre, per))
    }

    /// `w·0^∞`, a finite expansion.
    pub fn finite(w: &BinaryWord) -> Self {
        Self::from_bits(w.0.clone(), vec![0])
    }

    pub fn zeros() -> Self {
        Self::from_bits(vec![], vec![0])
    }

    pub fn ones() -> Self {
        Self::from_bits(vec![], vec![1])
    }

    pub fn preperiod(&self) -> BinaryWord {
        BinaryWord(self.0.preperiod().to_vec())
    }

    pub fn period(&self) -> BinaryWord {
        BinaryWord(self.0.period().to_vec())
    }

    pub fn pre_bits(&self) -> &[u8] {
        self.0.preperiod()
    }

    pub fn per_bits(&self) -> &[u8] {
        self.0.period()
    }

    /// Length of the primitive period.
    pub fn period_len(&self) -> usize {
        self.0.period().len()
    }

    pub fn pre_len(&self) -> usize {
        self.0.preperiod().len()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.0.is_purely_periodic()
    }

    /// Digit at 0-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0.at(i)
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord(self.0.prefix(n))
    }

    /// `pre.len() + per.len()`: every shift `σ^j` with `j` at least this
    /// equals one with smaller `j`.
    pub fn distinct_shifts(&self) -> usize {
        self.pre_len() + self.period_len()
    }

    pub fn contains_digit(&self, d: u8) -> bool {
        self.pre_bits().contains(&d) || self.per_bits().contains(&d)
    }
}

impl fmt::Display for PeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for PeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicSeq({})", self.0)
    }
}

impl FromStr for PeriodicSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lasso = Lasso::<u8>::parse(s)?;
        if lasso.is_finite() {
            return Err(Error::Parse(format!("{s:?} has no period; write e.g. 11(0)^w")));
        }
        Ok(PeriodicSeq(lasso))
    }
}

impl TryFrom<String> for PeriodicSeq {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PeriodicSeq> for String {
    fn from(s: PeriodicSeq) -> String {
        s.to_string()
    }
}

impl PartialOrd for PeriodicSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the infinite sequences.
impl Ord for PeriodicSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self, other)
    }
}

/// Lexicographic comparison, exact: the scan stops after
/// `|pre_a| + |pre_b| + lcm(|per_a|, |per_b|)` positions.
pub fn lex_cmp(a: &PeriodicSeq, b: &PeriodicSeq) -> Ordering {
    a.0.lex_cmp(&b.0)
}

/// `σ^j s`.
pub fn shift(s: &PeriodicSeq, j: usize) -> PeriodicSeq {
    PeriodicSeq(s.0.shift(j))
}

/// Complement every digit.
pub fn mirror(s: &PeriodicSeq) -> PeriodicSeq {
    PeriodicSeq(s.0.map(|b| 1 - b))
}

/// `𝔪_k`: parity of the binary digit sum of `k`.
pub fn thue_morse_digit(k: u64) -> u8 {
    (k.count_ones() & 1) as u8
}

/// First `n` symbols `𝔪₀ … 𝔪_{n−1}` of the Thue–Morse sequence.
pub fn thue_morse(n: usize) -> BinaryWord {
    BinaryWord((0..n as u64).map(thue_morse_digit).collect())
}

/// First `n` symbols of `L = 𝔪₁ 𝔪₂ 𝔪₃ …`, the shifted Thue–Morse sequence.
pub fn thue_morse_tail(n: usize) -> BinaryWord {
    BinaryWord((1..=n as u64).map(thue_morse_digit).collect())
}

/// The Thue–Morse morphism `0 → 01, 1 → 10`.
pub fn phi_morphism(w: &BinaryWord) -> BinaryWord {
    BinaryWord(w.0.iter().flat_map(|&b| [b, 1 - b]).collect())
}

fn doubled(bits: &[u8]) -> Vec<u8> {
    bits.iter().flat_map(|&b| [b, 1 - b]).collect()
}

/// `μ(ε) = 1 ε₁ ε̄₁ ε₂ ε̄₂ …`.
pub fn mu(s: &PeriodicSeq) -> PeriodicSeq {
    let mut pre = vec![1];
    pre.extend(doubled(s.pre_bits()));
    PeriodicSeq::from_bits(pre, doubled(s.per_bits()))
}

/// `μ` on a finite prefix: a word of length `n` maps to the length `2n + 1`
/// prefix of the image.
pub fn mu_word(w: &BinaryWord) -> BinaryWord {
    let mut bits = vec![1];
    bits.extend(doubled(&w.0));
    BinaryWord(bits)
}

/// Membership in `Γ = {ε : ε̄ ⪯ σ^k ε ⪯ ε for all k ≥ 0}`.
pub fn in_gamma(s: &PeriodicSeq) -> bool {
    let bar = mirror(s);
    (0..s.distinct_shifts()).all(|k| {
        let t = shift(s, k);
        lex_cmp(&bar, &t) != Ordering::Greater && lex_cmp(&t, s) != Ordering::Greater
    })
}

/// Returns `v` when `u = v·v̄`.
pub fn detect_halfmirror(u: &BinaryWord) -> Option<BinaryWord> {
    let n = u.len();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let (v, rest) = u.0.split_at(n / 2);
    v.iter()
        .zip(rest)
        .all(|(a, b)| a != b)
        .then(|| BinaryWord(v.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PeriodicSeq {
        s.parse().unwrap()
    }

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(ps("(1010)^w").to_string(), "(10)^w");
        assert_eq!(ps("1(01)^w").to_string(), "(10)^w");
        assert_eq!(ps("110(0)^w").to_string(), "11(0)^w");
        assert_eq!(ps("0(01)^w").to_string(), "0(01)^w");
        assert_eq!(ps("00(1)^w").to_string(), "00(1)^w");
        assert!(ps("(1100)^w").is_purely_periodic());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_cmp(&ps("(01)^w"), &ps("(01)^w")), Ordering::Equal);
        assert_eq!(lex_cmp(&ps("0(01)^w"), &ps("1(10)^w")), Ordering::Less);
        // 11001… vs 11010…
        assert_eq!(lex_cmp(&ps("(1100)^w"), &ps("(110100)^w")), Ordering::Less);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&ps("(10)^w"), 1), ps("(01)^w"));
        assert_eq!(shift(&ps("11(0)^w"), 2), ps("(0)^w"));
        assert_eq!(shift(&ps("(1100)^w"), 4), ps("(1100)^w"));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror(&ps("(1100)^w")), ps("(0011)^w"));
        assert_eq!(mirror(&ps("(0)^w")), ps("(1)^w"));
        let s = ps("01(110)^w");
        assert_eq!(mirror(&mirror(&s)), s);
    }

    #[test]
    fn thue_morse_prefixes() {
        assert_eq!(thue_morse(8).to_string(), "01101001");
        assert_eq!(thue_morse(1).to_string(), "0");
        assert_eq!(thue_morse(16).to_string(), "0110100110010110");
        assert_eq!(phi_morphism(&thue_morse(8)), thue_morse(16));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_morphism(&bw("0")).to_string(), "01");
        assert_eq!(phi_morphism(&bw("01")).to_string(), "0110");
        assert_eq!(phi_morphism(&bw("0110")).to_string(), "01101001");
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&ps("(0)^w")), ps("(10)^w"));
        assert_eq!(mu(&ps("(1)^w")), ps("1(10)^w"));
        assert_eq!(mu(&ps("(10)^w")), ps("(1100)^w"));
    }

    #[test]
    fn gamma_examples() {
        assert!(in_gamma(&ps("(10)^w")));
        assert!(!in_gamma(&ps("(0)^w")));
        assert!(in_gamma(&ps("(1100)^w")));
        assert!(in_gamma(&ps("(1)^w")));
        assert!(!in_gamma(&ps("(1000)^w")));
    }

    #[test]
    fn halfmirror_examples() {
        assert_eq!(detect_halfmirror(&bw("1100")), Some(bw("11")));
        assert_eq!(
            detect_halfmirror(&bw("11010110010100")),
            Some(bw("1101011"))
        );
        assert_eq!(detect_halfmirror(&bw("110")), None);
        assert_eq!(detect_halfmirror(&bw("1101")), None);
    }

    #[test]
    fn parse_errors() {
        assert!("1101".parse::<PeriodicSeq>().is_err());
        assert!("1(2)^w".parse::<PeriodicSeq>().is_err());
        assert!("()^w".parse::<PeriodicSeq>().is_err());
        assert!("(1".parse::<PeriodicSeq>().is_err());
    }

    #[test]
    fn serde_uses_text_form() {
        let s = ps("11(0)^w");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"11(0)^w\"");
        assert_eq!(serde_json::from_str::<PeriodicSeq>(&json).unwrap(), s);
    }
}
