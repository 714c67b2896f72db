use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::BasisIndex;
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

/// A linear combination of standard basis elements of `H_n(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BasisIndex, LaurentScalar>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(BasisIndex::identity(n))
    }

    pub fn basis(idx: BasisIndex) -> Self {
        let n = idx.n();
        Self { n, terms: BTreeMap::from([(idx, LaurentScalar::one())]) }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisIndex, LaurentScalar)>,
    {
        let mut out = Self::zero(n);
        for (idx, c) in terms {
            idx.validate()?;
            if idx.n() != n {
                return Err(Error::InvalidIndex(format!("{idx} does not have rank {n}")));
            }
            out.add_term(idx, &c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, idx: &BasisIndex) -> LaurentScalar {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient lies in `Z[q, q^-1]`.
    pub fn is_even(&self) -> bool {
        self.terms.values().all(LaurentScalar::is_even)
    }

    pub(crate) fn add_term(&mut self, idx: BasisIndex, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &LaurentScalar) {
        for (idx, d) in &other.terms {
            self.add_term(idx.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &AlgebraElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::one());
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::constant(-1));
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T{idx:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[n={}]({self})", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    index: BasisIndex,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(i, c)| WireTerm { index: i.clone(), coeff: c.clone() }).collect();
        Wire { n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        Self::from_terms(wire.n, wire.terms.into_iter().map(|t| (t.index, t.coeff))).map_err(serde::de::Error::custom)
    }
}
