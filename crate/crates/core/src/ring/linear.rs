//! Exact linear algebra: fraction-free elimination over `Z[v, v^-1]` and
//! plain Gaussian elimination over `Q` for specialized matrices.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentScalar;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Solves `m * x = c` exactly over the fraction field of `Z[v, v^-1]`.
///
/// Forward elimination is Bareiss-style, so every intermediate entry stays a
/// Laurent polynomial; only back-substitution produces fractions.
pub fn solve_linear(m: &[Vec<LaurentScalar>], c: &[LaurentScalar]) -> Result<Vec<RationalFunction>> {
    let n = m.len();
    if c.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "expected a square {n}x{n} system with {n} right-hand entries"
        )));
    }
    let mut a: Vec<Vec<LaurentScalar>> = m
        .iter()
        .zip(c)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = LaurentScalar::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss quotient is exact");
            }
            a[i][k] = LaurentScalar::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![RationalFunction::zero(); n];
    for i in (0..n).rev() {
        let mut acc = RationalFunction::from_laurent(a[i][n].clone());
        for j in i + 1..n {
            if a[i][j].is_zero() {
                continue;
            }
            acc = &acc - &(&RationalFunction::from_laurent(a[i][j].clone()) * &x[j]);
        }
        x[i] = (&acc / &RationalFunction::from_laurent(a[i][i].clone()))?;
    }
    Ok(x)
}

/// Determinant of a square matrix over `Q`.
pub fn determinant_rational(m: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("determinant needs a square matrix".into()));
    }
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    Ok(det)
}

/// Rank over `Q` of a list of sparse rows (column index -> value).
pub fn rank_sparse_rational(rows: &[BTreeMap<usize, BigRational>]) -> usize {
    // Echelon basis keyed by pivot column; each stored row has its pivot
    // entry normalized to one.
    let mut basis: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, BigRational> =
            row.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (*k, v.clone())).collect();
        while let Some((&col, lead)) = r.iter().next() {
            match basis.get(&col) {
                Some(b) => {
                    let f = lead.clone();
                    for (c, v) in b {
                        let e = r.entry(*c).or_insert_with(BigRational::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            r.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead.recip();
                    for v in r.values_mut() {
                        *v *= &inv;
                    }
                    basis.insert(col, r);
                    break;
                }
            }
        }
    }
    basis.len()
}
