//! Eventually periodic sequences over a small ordered alphabet.
//!
//! A [`Lasso`] is a finite preperiod followed by a period repeated forever.
//! Values are always kept in canonical form: the period is primitive and the
//! preperiod is as short as possible. Two lassos denote the same infinite
//! sequence iff their canonical forms are identical, so the derived `Eq` is
//! sequence equality.
//!
//! An empty period is allowed and denotes a finite word; this is only used
//! for itineraries truncated to a fixed length.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A letter of a sequence alphabet, ordered by `Ord`.
pub trait Symbol: Copy + Eq + Ord + fmt::Debug {
    fn to_char(self) -> char;
    fn from_char(c: char) -> Option<Self>;
}

/// Length of the shortest word `r` with `w = r^k` (the primitive root).
pub fn primitive_root_len<S: Eq>(w: &[S]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // Failure function; the longest proper border gives the smallest period.
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

pub fn is_primitive<S: Eq>(w: &[S]) -> bool {
    !w.is_empty() && primitive_root_len(w) == w.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lasso<S> {
    pre: Vec<S>,
    per: Vec<S>,
}

impl<S: Symbol> Lasso<S> {
    pub fn new(pre: Vec<S>, per: Vec<S>) -> Self {
        let mut s = Lasso { pre, per };
        s.canonicalize();
        s
    }

    pub fn finite(word: Vec<S>) -> Self {
        Lasso {
            pre: word,
            per: Vec::new(),
        }
    }

    fn canonicalize(&mut self) {
        if self.per.is_empty() {
            return;
        }
        let p = primitive_root_len(&self.per);
        self.per.truncate(p);
        while let (Some(&a), Some(&b)) = (self.pre.last(), self.per.last()) {
            if a != b {
                break;
            }
            self.per.rotate_right(1);
            self.pre.pop();
        }
    }

    pub fn preperiod(&self) -> &[S] {
        &self.pre
    }

    pub fn period(&self) -> &[S] {
        &self.per
    }

    pub fn is_finite(&self) -> bool {
        self.per.is_empty()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.pre.is_empty() && !self.per.is_empty()
    }

    /// Length of a finite word; `None` for infinite sequences.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.pre.len())
    }

    /// Symbol at 0-based position `i`, or `None` past the end of a finite word.
    pub fn get(&self, i: usize) -> Option<S> {
        if i < self.pre.len() {
            Some(self.pre[i])
        } else if self.per.is_empty() {
            None
        } else {
            Some(self.per[(i - self.pre.len()) % self.per.len()])
        }
    }

    /// Symbol at 0-based position `i` of an infinite sequence.
    pub fn at(&self, i: usize) -> S {
        self.get(i).expect("position past the end of a finite word")
    }

    pub fn prefix(&self, n: usize) -> Vec<S> {
        (0..n).map_while(|i| self.get(i)).collect()
    }

    /// Number of positions after which any two sequences with these shapes
    /// that have not differed are equal forever.
    pub fn scan_bound(&self, other: &Self) -> usize {
        let (pa, pb) = (self.per.len().max(1), other.per.len().max(1));
        self.pre.len() + other.pre.len() + pa.lcm(&pb)
    }

    /// Position of the first difference, if any. Finite words are compared
    /// over their common length only.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let cap = match (self.finite_len(), other.finite_len()) {
            (None, None) => self.scan_bound(other),
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
        };
        (0..cap).find(|&i| self.get(i) != other.get(i))
    }

    /// Lexicographic comparison by symbol order.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        match self.first_difference(other) {
            Some(i) => self.at(i).cmp(&other.at(i)),
            None => Ordering::Equal,
        }
    }

    pub fn shift(&self, j: usize) -> Self {
        if j <= self.pre.len() {
            return Lasso::new(self.pre[j..].to_vec(), self.per.clone());
        }
        if self.per.is_empty() {
            return Lasso::finite(Vec::new());
        }
        let mut per = self.per.clone();
        let k = (j - self.pre.len()) % per.len();
        per.rotate_left(k);
        Lasso { pre: Vec::new(), per }
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Lasso::new(
            self.pre.iter().map(|&s| f(s)).collect(),
            self.per.iter().map(|&s| f(s)).collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let symbols = |part: &str| -> Result<Vec<S>> {
            part.chars()
                .map(|c| {
                    S::from_char(c).ok_or_else(|| Error::Parse(format!("unexpected symbol {c:?}")))
                })
                .collect()
        };
        match text.find('(') {
            None => Ok(Lasso::finite(symbols(&text)?)),
            Some(open) => {
                let rest = &text[open + 1..];
                let close = rest
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in {text:?}")))?;
                let tail = &rest[close + 1..];
                if tail != "^w" && tail != "^ω" && tail != "^∞" {
                    return Err(Error::Parse(format!("expected ')^w' in {text:?}")));
                }
                let per = symbols(&rest[..close])?;
                if per.is_empty() {
                    return Err(Error::Parse("empty period".into()));
                }
                Ok(Lasso::new(symbols(&text[..open])?, per))
            }
        }
    }
}

impl<S: Symbol> fmt::Display for Lasso<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.pre {
            write!(f, "{}", s.to_char())?;
        }
        if !self.per.is_empty() {
            f.write_str("(")?;
            for s in &self.per {
                write!(f, "{}", s.to_char())?;
            }
            f.write_str(")^w")?;
        }
        Ok(())
    }
}
