use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{perm, BasisIndex};
use crate::error::{Error, Result};

/// A generator `T_i`, `T_i^{-1}` or `P_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    TInv(usize),
    P(usize),
}

impl Letter {
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            Letter::T(i) | Letter::TInv(i) => i >= 1 && i < n,
            Letter::P(j) => j >= 1 && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(format!("{self} in rank {n}")))
        }
    }

    pub fn shifted(self, by: usize) -> Self {
        match self {
            Letter::T(i) => Letter::T(i + by),
            Letter::TInv(i) => Letter::TInv(i + by),
            Letter::P(j) => Letter::P(j + by),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::TInv(i) => write!(f, "T{i}^-1"),
            Letter::P(j) => write!(f, "P{j}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}"));
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (head, num) = body.split_at(body.char_indices().nth(1).map_or(body.len(), |(i, _)| i));
        let i: usize = num.parse().map_err(|_| bad())?;
        match (head, inv) {
            ("T", false) => Ok(Letter::T(i)),
            ("T", true) => Ok(Letter::TInv(i)),
            ("P", false) => Ok(Letter::P(i)),
            _ => Err(bad()),
        }
    }
}

/// A word in the generators, read left to right as a product.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn reversed(&self) -> Self {
        Self { letters: self.letters.iter().rev().copied().collect() }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Whitespace-separated letters such as `"T1 P2 T1^-1"`; `"1"` is empty.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .filter(|t| *t != "1")
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }
}

/// `T_{j,i} = T_{j-1} ... T_i`.
fn t_ji(j: usize, i: usize) -> impl Iterator<Item = usize> {
    (i..j).rev()
}

/// The word `T_A P_k T_w T_B^{-1}` with `T_w` given by [`perm::reduced_word`].
pub fn basis_word(idx: &BasisIndex) -> GeneratorWord {
    let k = idx.k();
    let mut letters = Vec::new();
    for (i, &a) in idx.a.iter().enumerate() {
        letters.extend(t_ji(a, i + 1).map(Letter::T));
    }
    if k > 0 {
        letters.push(Letter::P(k));
    }
    letters.extend(perm::reduced_word(&idx.w).into_iter().map(Letter::T));
    let mut tb = Vec::new();
    for (i, &b) in idx.b.iter().enumerate() {
        tb.extend(t_ji(b, i + 1));
    }
    letters.extend(tb.into_iter().rev().map(Letter::TInv));
    GeneratorWord { letters }
}
