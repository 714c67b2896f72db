use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

/// An index word `(k_1, ..., k_n)` with letters in `1..=r+1`.
pub type TensorWord = Vec<u8>;

/// A sparse vector in `V_{r+1}^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorState {
    n: usize,
    r: usize,
    terms: BTreeMap<TensorWord, LaurentScalar>,
}

impl TensorState {
    pub fn zero(n: usize, r: usize) -> Self {
        Self { n, r, terms: BTreeMap::new() }
    }

    /// The basis vector `u_{k_1} ⊗ ... ⊗ u_{k_n}`.
    pub fn basis(r: usize, word: TensorWord) -> Result<Self> {
        if word.iter().any(|&k| k == 0 || k as usize > r + 1) {
            return Err(Error::OutOfRange(format!("tensor word {word:?} has letters outside 1..={}", r + 1)));
        }
        let n = word.len();
        Ok(Self { n, r, terms: BTreeMap::from([(word, LaurentScalar::one())]) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> LaurentScalar {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: TensorWord, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorState, c: &LaurentScalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n, self.r);
        out.add_scaled(self, c);
        out
    }
}

/// Every word of length `n` over `1..=r+1`, lexicographically.
pub fn all_words(n: usize, r: usize) -> Vec<TensorWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=(r + 1) as u8).map(move |k| {
                    let mut w2 = w.clone();
                    w2.push(k);
                    w2
                })
            })
            .collect();
    }
    out
}

/// How many times each of `1..=r` occurs in `word`.
pub fn content(word: &[u8], r: usize) -> Vec<usize> {
    let mut c = vec![0; r];
    for &k in word {
        if (k as usize) <= r {
            c[k as usize - 1] += 1;
        }
    }
    c
}
