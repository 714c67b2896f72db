use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinatorics::{kostka, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

/// A symmetric polynomial in `r` variables, in the monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    r: usize,
    terms: BTreeMap<Partition, LaurentScalar>,
}

impl SymPoly {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, LaurentScalar::one())
    }

    pub fn constant(r: usize, c: LaurentScalar) -> Self {
        let mut out = Self::zero(r);
        out.add_term(Partition::empty(), &c);
        out
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> LaurentScalar {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c m_μ`; terms with `ℓ(μ) > r` vanish and are dropped.
    pub fn add_term(&mut self, mu: Partition, c: &LaurentScalar) {
        if c.is_zero() || mu.len() > self.r {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymPoly, c: &LaurentScalar) {
        for (mu, d) in &other.terms {
            self.add_term(mu.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.r);
        out.add_scaled(self, c);
        out
    }

    /// Applies `q -> q^{-1}` to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        Self { r: self.r, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect() }
    }

    pub fn add(&self, other: &SymPoly) -> Result<Self> {
        check_r(self.r, other.r)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<Self> {
        check_r(self.r, other.r)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::constant(-1));
        Ok(out)
    }

    /// Adds the dominant monomial `c x^α`; non-dominant exponents are ignored,
    /// which is the right bookkeeping when summing a symmetric expression
    /// monomial by monomial.
    pub(crate) fn add_if_dominant(&mut self, alpha: &[usize], c: &LaurentScalar) {
        if alpha.windows(2).all(|w| w[0] >= w[1]) {
            self.add_term(Partition::from_unsorted(alpha.to_vec()), c);
        }
    }
}

fn check_r(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(format!("r = {a} vs r = {b}")));
    }
    Ok(())
}

fn padded(mu: &Partition, r: usize) -> Vec<usize> {
    let mut v = mu.parts().to_vec();
    v.resize(r, 0);
    v
}

/// Distinct rearrangements of `v`.
pub(crate) fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `m_μ(x_1..x_r)`, zero when `ℓ(μ) > r`.
pub fn m_sym(mu: &Partition, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    out.add_term(mu.clone(), &LaurentScalar::one());
    out
}

/// `s_λ(x_1..x_r) = Σ_μ K_{λμ} m_μ`.
pub fn schur(lambda: &Partition, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    if lambda.len() > r {
        return out;
    }
    for mu in partitions_of(lambda.size()) {
        if mu.len() <= r && lambda.dominates(&mu) {
            let k = kostka(lambda, &mu).expect("sizes agree");
            out.add_term(mu, &LaurentScalar::constant(k));
        }
    }
    out
}

/// Product in the monomial basis.
///
/// The coefficient of `m_ν` in `m_λ m_μ` is `|O(λ)|/|O(ν)|` times the number
/// of rearrangements `β` of `μ` with `λ + β` a rearrangement of `ν`.
pub fn mul_sym(a: &SymPoly, b: &SymPoly) -> Result<SymPoly> {
    check_r(a.r, b.r)?;
    let r = a.r;
    let orbit_size = |v: &[usize]| distinct_permutations(v).len() as i64;
    let mut orbits: HashMap<&Partition, Vec<Vec<usize>>> = HashMap::new();
    for mu in b.terms.keys() {
        orbits.insert(mu, distinct_permutations(&padded(mu, r)));
    }
    let mut out = SymPoly::zero(r);
    for (lambda, c) in &a.terms {
        let lam = padded(lambda, r);
        let size_lambda = orbit_size(&lam);
        for (mu, d) in &b.terms {
            let cd = c * d;
            let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
            for beta in &orbits[mu] {
                let sum: Vec<usize> = lam.iter().zip(beta).map(|(x, y)| x + y).collect();
                *counts.entry(Partition::from_unsorted(sum)).or_insert(0) += 1;
            }
            for (nu, cnt) in counts {
                let size_nu = orbit_size(&padded(&nu, r));
                let coeff = cnt * size_lambda;
                debug_assert_eq!(coeff % size_nu, 0);
                out.add_term(nu, &cd.scale_i64(coeff / size_nu));
            }
        }
    }
    Ok(out)
}

/// Coefficients in the Schur basis, by peeling off lexicographically
/// largest monomials.
pub fn schur_expand(p: &SymPoly) -> Result<BTreeMap<Partition, LaurentScalar>> {
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rem.terms.iter().max_by(|x, y| x.0.parts().cmp(y.0.parts())).map(|(k, c)| (k.clone(), c.clone())) {
        let s = schur(&lead, rem.r);
        if s.coeff(&lead) != LaurentScalar::one() {
            return Err(Error::NotInSchurSpan);
        }
        rem.add_scaled(&s, &-c.clone());
        out.insert(lead, c);
    }
    Ok(out)
}

/// `Σ_λ c_λ s_λ` back in the monomial basis.
pub fn from_schur(coeffs: &BTreeMap<Partition, LaurentScalar>, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    for (lambda, c) in coeffs {
        out.add_scaled(&schur(lambda, r), c);
    }
    out
}

#[derive(Serialize)]
struct WireTerm<'a> {
    partition: &'a Partition,
    coeff: &'a LaurentScalar,
}

impl Serialize for SymPoly {
    /// `{"r": r, "basis": "m", "terms": [...]}`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_terms(s, self.r, "m", &self.terms)
    }
}

pub(crate) fn serialize_terms<S: Serializer>(
    s: S,
    r: usize,
    basis: &str,
    terms: &BTreeMap<Partition, LaurentScalar>,
) -> std::result::Result<S::Ok, S::Error> {
    let wire: Vec<WireTerm> = terms.iter().map(|(partition, coeff)| WireTerm { partition, coeff }).collect();
    let mut st = s.serialize_struct("SymPoly", 3)?;
    st.serialize_field("r", &r)?;
    st.serialize_field("basis", basis)?;
    st.serialize_field("terms", &wire)?;
    st.end()
}

/// A Schur-basis expansion with its variable count, for JSON output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub r: usize,
    pub coeffs: BTreeMap<Partition, LaurentScalar>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_terms(s, self.r, "s", &self.coeffs)
    }
}
