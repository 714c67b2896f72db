use std::collections::BTreeMap;

use rayon::prelude::*;

use super::action::psi_element;
use super::state::{all_words, content, TensorState};
use crate::algebra::AlgebraElement;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;
use crate::symfun::{schur_expand, SymPoly};

/// Words whose content in `1..=r` is weakly decreasing.
pub fn dominant_words(n: usize, r: usize) -> Vec<Vec<u8>> {
    all_words(n, r).into_iter().filter(|w| content(w, r).windows(2).all(|p| p[0] >= p[1])).collect()
}

fn diagonal(x: &AlgebraElement, r: usize, words: &[Vec<u8>]) -> Result<Vec<(Vec<usize>, LaurentScalar)>> {
    words
        .par_iter()
        .map(|w| {
            let image = psi_element(x, &TensorState::basis(r, w.clone())?)?;
            Ok((content(w, r), image.coeff(w)))
        })
        .collect()
}

/// `tr(D Ψ(x))` on `V_{r+1}^{⊗n}`, as a symmetric polynomial in `x_1..x_r`.
///
/// Each weight space is `Ψ`-stable and the result is symmetric, so only the
/// dominant weight spaces are traced.
pub fn trace_d(x: &AlgebraElement, r: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(r);
    for (alpha, c) in diagonal(x, r, &dominant_words(x.n(), r))? {
        out.add_term(Partition::from_unsorted(alpha), &c);
    }
    Ok(out)
}

/// The trace over every weight space, returned monomial by monomial.
/// Used to confirm symmetry of [`trace_d`] on small cases.
pub fn trace_d_full(x: &AlgebraElement, r: usize) -> Result<BTreeMap<Vec<usize>, LaurentScalar>> {
    let mut out: BTreeMap<Vec<usize>, LaurentScalar> = BTreeMap::new();
    for (alpha, c) in diagonal(x, r, &all_words(x.n(), r))? {
        *out.entry(alpha).or_default() += &c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Character values `χ_λ(x)` for all `|λ| <= n` with `ℓ(λ) <= r`, read off
/// the Schur expansion of the weighted trace.
pub fn char_oracle(x: &AlgebraElement, r: usize) -> Result<BTreeMap<Partition, LaurentScalar>> {
    if r < x.n() {
        return Err(Error::OutOfRange(format!("the oracle needs r >= n, got r={r}, n={}", x.n())));
    }
    schur_expand(&trace_d(x, r)?).map_err(|_| Error::Defect("weighted trace is not in the Schur span".into()))
}
