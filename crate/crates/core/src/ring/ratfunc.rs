use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::laurent::{dense, LaurentScalar};
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials, kept reduced.
///
/// Normal form: `gcd(num, den) = 1`, the denominator has a nonzero constant
/// term in `v` (powers of `v` live in the numerator) and a positive leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RationalFunction {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_laurent(x: LaurentScalar) -> Self {
        Self { num: x, den: LaurentScalar::one() }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentScalar::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentScalar::one())
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this value equals, if any.
    pub fn as_laurent(&self) -> Option<LaurentScalar> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    fn reduce(num: LaurentScalar, den: LaurentScalar) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (n, n_shift) = num.to_dense();
        let (d, d_shift) = den.to_dense();
        let g = dense::gcd(&n, &d);
        let (mut n, mut d) = if dense::is_one(&g) {
            (n, d)
        } else {
            (
                dense::div_exact(&n, &g).expect("gcd divides numerator"),
                dense::div_exact(&d, &g).expect("gcd divides denominator"),
            )
        };
        if d.last().is_some_and(|c| c.is_negative()) {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = -x.clone();
            }
        }
        debug_assert!(d.first().is_some_and(|c| !c.is_zero()));
        Self {
            num: LaurentScalar::from_dense(&n, n_shift - d_shift),
            den: LaurentScalar::from_dense(&d, 0),
        }
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }
}

impl From<LaurentScalar> for RationalFunction {
    fn from(x: LaurentScalar) -> Self {
        Self::from_laurent(x)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[(i32, i64)], d: &[(i32, i64)]) -> RationalFunction {
        RationalFunction::new(LaurentScalar::from_q_coeffs(n), LaurentScalar::from_q_coeffs(d)).unwrap()
    }

    #[test]
    fn reduces_common_factor() {
        // (q^2 - 1) / (q - 1) = q + 1
        let x = rf(&[(2, 1), (0, -1)], &[(1, 1), (0, -1)]);
        assert_eq!(x.as_laurent().unwrap(), LaurentScalar::from_q_coeffs(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn sign_and_unit_normalization() {
        let a = rf(&[(0, 1)], &[(1, -1)]);
        let b = rf(&[(-1, -1)], &[(0, 1)]);
        assert_eq!(a, b);
        let c = rf(&[(0, 2)], &[(1, 4), (0, -2)]);
        let d = rf(&[(0, 1)], &[(1, 2), (0, -1)]);
        assert_eq!(c, d);
    }

    #[test]
    fn field_ops_round_trip() {
        let a = rf(&[(1, 1), (0, 3)], &[(2, 1), (0, 1)]);
        let b = rf(&[(0, -2)], &[(1, 1), (0, -1)]);
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        let p = &a * &b;
        assert_eq!((&p / &b).unwrap(), a);
        assert_eq!(&a * &a.recip().unwrap(), RationalFunction::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(LaurentScalar::one(), LaurentScalar::zero()).is_err());
        assert!(RationalFunction::zero().recip().is_err());
    }
}
