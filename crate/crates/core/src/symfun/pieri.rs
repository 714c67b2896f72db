use std::collections::BTreeMap;

use super::poly::{mul_sym, schur, schur_expand};
use super::qfun::qtilde;
use crate::characters::{g_coeff, wtbar, GVariant};
use crate::combinatorics::{partitions_of, strip_data, Partition};
use crate::error::Result;
use crate::ring::LaurentScalar;

/// `q̃_m s_ν` in the Schur basis, from the strip formula
/// `Σ_λ g_{|λ/ν|,m} wtbar(λ/ν) s_λ` over strips with at most `m` boxes.
pub fn pieri_qtilde(m: usize, nu: &Partition, r: usize, variant: GVariant) -> Result<BTreeMap<Partition, LaurentScalar>> {
    let mut out = BTreeMap::new();
    for size in nu.size()..=nu.size() + m {
        for lambda in partitions_of(size) {
            if lambda.len() > r || !lambda.contains(nu) {
                continue;
            }
            let data = strip_data(&lambda, nu)?;
            if !data.is_strip {
                continue;
            }
            let c = &g_coeff(data.size, m, variant)? * &wtbar(&lambda, nu)?;
            if !c.is_zero() {
                out.insert(lambda, c);
            }
        }
    }
    Ok(out)
}

/// `q̃_m s_ν` in the Schur basis by multiplying out in the monomial basis.
pub fn pieri_brute_force(m: usize, nu: &Partition, r: usize) -> Result<BTreeMap<Partition, LaurentScalar>> {
    schur_expand(&mul_sym(&qtilde(m, r), &schur(nu, r))?)
}
