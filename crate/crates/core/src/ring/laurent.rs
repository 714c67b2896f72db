//! Laurent polynomials in `v` with integer coefficients. The Hecke parameter
//! is `q = v^2`, so the even-exponent subring is `Z[q, q^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Z[v, v^-1]`, stored sparsely by `v`-exponent.
///
/// No stored coefficient is ever zero, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `c * q^exp`.
    pub fn q_monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        Self::monomial(c, 2 * exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 2)
    }

    pub fn q_inv() -> Self {
        Self::monomial(1, -2)
    }

    /// `q - 1`, which shows up everywhere.
    pub fn q_minus_one() -> Self {
        Self::from_q_coeffs(&[(1, 1), (0, -1)])
    }

    /// Builds `sum c * q^e` from `(e, c)` pairs.
    pub fn from_q_coeffs(pairs: &[(i32, i64)]) -> Self {
        let mut out = Self::zero();
        for &(e, c) in pairs {
            out.add_term(2 * e, BigInt::from(c));
        }
        out
    }

    /// Builds `sum c * v^e` from `(e, c)` pairs.
    pub fn from_v_coeffs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(v-exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, v_exp: i32) -> BigInt {
        self.coeffs.get(&v_exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Returns the constant integer if the scalar has no `v` dependence.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Leading coefficient (highest exponent).
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub(crate) fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// The bar involution `v -> v^-1` (equivalently `q -> q^-1`).
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `x^k` for signed `k`, only defined for units `±v^e`.
    pub fn powi(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        let inv = self.unit_inverse().ok_or(Error::NotAUnit)?;
        Ok(inv.pow((-k) as u32))
    }

    /// Inverse of a unit `±v^e`; `None` otherwise.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }

    /// Evaluates at `v = v0` (or `q = q0` when every exponent is even).
    pub fn specialize(&self, at: &Specialization) -> Result<BigRational> {
        if at.q.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let term = if e % 2 == 0 {
                pow_rational(&at.q, e / 2)
            } else {
                let v0 = at.v.as_ref().ok_or(Error::MissingSquareRoot)?;
                pow_rational(v0, *e)
            };
            acc += term * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Exact division in `Z[v, v^-1]`; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (num, num_shift) = self.to_dense();
        let (den, den_shift) = divisor.to_dense();
        let quot = dense::div_exact(&num, &den)?;
        Some(Self::from_dense(&quot, num_shift - den_shift))
    }

    /// Dense coefficient vector (ascending powers of `v`) together with the
    /// exponent of its first entry.
    pub fn to_dense(&self) -> (Vec<BigInt>, i32) {
        let Some(lo) = self.min_exp() else {
            return (Vec::new(), 0);
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            out[(e - lo) as usize] = c.clone();
        }
        (out, lo)
    }

    pub fn from_dense(coeffs: &[BigInt], shift: i32) -> Self {
        let mut out = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(i as i32 + shift, c.clone());
        }
        out
    }

    /// Renders in the variable `q` when possible, otherwise in `v`.
    pub fn to_poly_string(&self) -> String {
        if self.is_even() {
            self.render('q', 2)
        } else {
            self.render('v', 1)
        }
    }

    fn render(&self, var: char, step: i32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let e = e / step;
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let unit = abs.is_one();
            if e == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !unit {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }
}

fn pow_rational(base: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// A point at which to evaluate: `q = q0` and optionally `v = v0` with `v0^2 = q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub q: BigRational,
    pub v: Option<BigRational>,
}

impl Specialization {
    pub fn at_q(q: BigRational) -> Self {
        Self { q, v: None }
    }

    pub fn at_q_int(q: i64) -> Self {
        Self::at_q(BigRational::from_integer(q.into()))
    }

    /// Specialization at `v = v0`, `q = v0^2`.
    pub fn at_v(v: BigRational) -> Self {
        Self { q: &v * &v, v: Some(v) }
    }

    pub fn at_v_int(v: i64) -> Self {
        Self::at_v(BigRational::from_integer(v.into()))
    }

    pub fn new(q: BigRational, v: BigRational) -> Result<Self> {
        if &v * &v != q {
            return Err(Error::MissingSquareRoot);
        }
        Ok(Self { q, v: Some(v) })
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly_string())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({})", self.to_poly_string())
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentScalar {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        Self {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -(self.clone())
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}

/// Dense polynomial helpers over `Z`, coefficients in ascending order.
pub(crate) mod dense {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    pub fn trim(p: &mut Vec<BigInt>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn degree(p: &[BigInt]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    /// Exact quotient `num / den` over `Z[x]`, or `None` if the division leaves a
    /// remainder or needs fractions.
    pub fn div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
        let dd = degree(den)?;
        let mut rem: Vec<BigInt> = num.to_vec();
        trim(&mut rem);
        if rem.is_empty() {
            return Some(Vec::new());
        }
        let nd = rem.len() - 1;
        if nd < dd {
            return None;
        }
        let lead = &den[dd];
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in den.iter().enumerate().take(dd + 1) {
                rem[i + j] -= &qc * dj;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        trim(&mut quot);
        Some(quot)
    }

    pub fn content(p: &[BigInt]) -> BigInt {
        p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
        let c = content(p);
        if c.is_zero() || c.is_one() {
            return p.to_vec();
        }
        p.iter().map(|x| x / &c).collect()
    }

    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = degree(b).expect("nonzero divisor");
        let mut r = a.to_vec();
        trim(&mut r);
        let lead = b[db].clone();
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = r[dr].clone();
            for x in r.iter_mut() {
                *x *= &lead;
            }
            for j in 0..=db {
                r[dr - db + j] -= &c * &b[j];
            }
            trim(&mut r);
        }
        r
    }

    /// Polynomial gcd over `Z[x]` by the primitive remainder sequence, with a
    /// positive leading coefficient.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        if a.is_empty() {
            return normalize_sign(b);
        }
        if b.is_empty() {
            return normalize_sign(a);
        }
        let cont = content(&a).gcd(&content(&b));
        let mut a = primitive(&a);
        let mut b = primitive(&b);
        if degree(&a) < degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = prem(&a, &b);
            a = b;
            b = if r.is_empty() { r } else { primitive(&r) };
        }
        let g: Vec<BigInt> = a.iter().map(|x| x * &cont).collect();
        normalize_sign(g)
    }

    fn normalize_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
        trim(&mut p);
        if p.last().is_some_and(|c| c.is_negative()) {
            for x in p.iter_mut() {
                *x = -x.clone();
            }
        }
        p
    }

    pub fn is_one(p: &[BigInt]) -> bool {
        p.len() == 1 && p[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentScalar {
        LaurentScalar::q()
    }

    #[test]
    fn ring_identities() {
        let one = LaurentScalar::one();
        assert_eq!(&(&q() - &one) + &one, q());
        assert_eq!(&LaurentScalar::v() * &LaurentScalar::v(), q());
        let lhs = &(&q() - &one) * &(&q() + &one);
        assert_eq!(lhs, LaurentScalar::from_q_coeffs(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(q().bar(), LaurentScalar::q_inv());
        let qm1 = LaurentScalar::q_minus_one();
        assert_eq!(qm1.bar(), LaurentScalar::from_q_coeffs(&[(-1, 1), (0, -1)]));
        let x = LaurentScalar::from_q_coeffs(&[(2, 1), (1, -1)]);
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn specialize_examples() {
        let half = BigRational::new(1.into(), 2.into());
        let qm1 = LaurentScalar::q_minus_one();
        assert_eq!(qm1.specialize(&Specialization::at_q_int(3)).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(LaurentScalar::q_inv().specialize(&Specialization::at_q_int(2)).unwrap(), half);
        let v2 = LaurentScalar::monomial(1, 2);
        assert_eq!(v2.specialize(&Specialization::at_v_int(2)).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn specialize_rejects_zero_and_missing_root() {
        assert!(matches!(q().specialize(&Specialization::at_q_int(0)), Err(Error::ZeroSpecialization)));
        assert!(matches!(
            LaurentScalar::v().specialize(&Specialization::at_q_int(3)),
            Err(Error::MissingSquareRoot)
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentScalar::from_q_coeffs(&[(2, 1), (1, -1), (0, 1)]).to_string(), "q^2-q+1");
        assert_eq!(LaurentScalar::q_inv().to_string(), "q^-1");
        assert_eq!(LaurentScalar::monomial(-3, 1).to_string(), "-3*v");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = LaurentScalar::from_q_coeffs(&[(2, 1), (0, -1)]);
        let b = LaurentScalar::q_minus_one();
        assert_eq!(a.div_exact(&b).unwrap(), &q() + &LaurentScalar::one());
        assert!(b.div_exact(&a).is_none());
        let c = LaurentScalar::from_q_coeffs(&[(-3, 2), (-1, 4)]);
        assert_eq!(c.div_exact(&LaurentScalar::constant(2)).unwrap(), LaurentScalar::from_q_coeffs(&[(-3, 1), (-1, 2)]));
    }
}
