use super::state::TensorState;
use crate::algebra::{basis_word, AlgebraElement, GeneratorWord, Letter};
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

fn check_pos(i: usize, upper: usize, what: &str) -> Result<()> {
    if i == 0 || i > upper {
        return Err(Error::OutOfRange(format!("{what} position {i} outside 1..={upper}")));
    }
    Ok(())
}

/// `R̆_i` on tensor factors `i, i+1`.
pub fn apply_r(i: usize, v: &TensorState) -> Result<TensorState> {
    check_pos(i, v.n().saturating_sub(1), "R")?;
    let minus_v = LaurentScalar::v().scale_i64(-1);
    let qm1 = LaurentScalar::q_minus_one();
    let mut out = TensorState::zero(v.n(), v.r());
    for (w, c) in v.terms() {
        let (a, b) = (w[i - 1], w[i]);
        if a == b {
            out.add_term(w.clone(), &-c.clone());
            continue;
        }
        let mut s = w.clone();
        s.swap(i - 1, i);
        out.add_term(s, &(c * &minus_v));
        if a > b {
            out.add_term(w.clone(), &(c * &qm1));
        }
    }
    Ok(out)
}

/// `R̆_i^{-1} = q^{-1}(R̆_i - (q-1))`.
pub fn apply_r_inv(i: usize, v: &TensorState) -> Result<TensorState> {
    let mut out = apply_r(i, v)?;
    out.add_scaled(v, &-LaurentScalar::q_minus_one());
    Ok(out.scale(&LaurentScalar::q_inv()))
}

/// `ĕ_j`: keeps the words whose first `j` letters are all `r+1`.
pub fn apply_e(j: usize, v: &TensorState) -> Result<TensorState> {
    check_pos(j, v.n(), "e")?;
    let top = (v.r() + 1) as u8;
    let mut out = TensorState::zero(v.n(), v.r());
    for (w, c) in v.terms() {
        if w[..j].iter().all(|&k| k == top) {
            out.add_term(w.clone(), c);
        }
    }
    Ok(out)
}

pub fn apply_letter(g: Letter, v: &TensorState) -> Result<TensorState> {
    match g {
        Letter::T(i) => apply_r(i, v),
        Letter::TInv(i) => apply_r_inv(i, v),
        Letter::P(j) => apply_e(j, v),
    }
}

/// `Ψ(word) v`, rightmost letter first.
pub fn psi_apply(word: &GeneratorWord, v: &TensorState) -> Result<TensorState> {
    word.letters.iter().rev().try_fold(v.clone(), |acc, &g| apply_letter(g, &acc))
}

/// `Ψ(x) v` for an algebra element.
pub fn psi_element(x: &AlgebraElement, v: &TensorState) -> Result<TensorState> {
    if x.n() != v.n() {
        return Err(Error::RankMismatch { left: x.n(), right: v.n() });
    }
    let mut out = TensorState::zero(v.n(), v.r());
    for (idx, c) in x.terms() {
        out.add_scaled(&psi_apply(&basis_word(idx), v)?, c);
    }
    Ok(out)
}
