use super::element::AlgebraElement;
use super::rewrite::rmul;
use super::word::{basis_word, GeneratorWord, Letter};
use crate::combinatorics::{BasisIndex, Composition};
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

/// `x * g` for a single generator.
pub fn rmul_gen(x: &AlgebraElement, g: Letter) -> Result<AlgebraElement> {
    g.validate(x.n())?;
    Ok(rmul(x, g))
}

/// `x * word`.
pub fn rmul_word(x: &AlgebraElement, word: &GeneratorWord) -> Result<AlgebraElement> {
    word.letters.iter().try_fold(x.clone(), |acc, &g| rmul_gen(&acc, g))
}

/// The basis expansion of a word.
pub fn reduce_word(n: usize, word: &GeneratorWord) -> Result<AlgebraElement> {
    rmul_word(&AlgebraElement::one(n), word)
}

pub fn generator(n: usize, g: Letter) -> Result<AlgebraElement> {
    reduce_word(n, &GeneratorWord::new(vec![g]))
}

/// `T_0 = q(1 - P_1) - 1`.
pub fn t0(n: usize) -> AlgebraElement {
    let mut out = AlgebraElement::one(n).scale(&LaurentScalar::q_minus_one());
    out.add_term(BasisIndex::p(n, 1), &-LaurentScalar::q());
    out
}

pub fn mul(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.n() != y.n() {
        return Err(Error::RankMismatch { left: x.n(), right: y.n() });
    }
    let mut out = AlgebraElement::zero(x.n());
    for (idx, c) in y.terms() {
        let mut z = x.clone();
        for &g in &basis_word(idx).letters {
            z = rmul(&z, g);
        }
        out.add_scaled(&z, c);
    }
    Ok(out)
}

/// Product of a list of elements, left to right.
pub fn product(n: usize, factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
    factors.iter().try_fold(AlgebraElement::one(n), |acc, f| mul(&acc, f))
}

/// The word `P_{n-|μ|} T_{w_{μ↑n}}`.
pub fn hat_t_word(n: usize, mu: &Composition) -> Result<GeneratorWord> {
    let lifted = mu.lift(n)?;
    let k = mu.size();
    let mut letters = Vec::new();
    if n > k {
        letters.push(Letter::P(n - k));
    }
    let mut start = 0;
    for &part in lifted.parts() {
        letters.extend((start + 1..start + part).map(Letter::T));
        start += part;
    }
    Ok(GeneratorWord::new(letters))
}

/// The cocenter representative `P_{n-|μ|} T_{w_{μ↑n}}`.
pub fn hat_t(n: usize, mu: &Composition) -> Result<AlgebraElement> {
    if mu.parts().contains(&0) {
        return Err(Error::Parse(format!("composition {:?} has a zero part", mu.parts())));
    }
    reduce_word(n, &hat_t_word(n, mu)?)
}

fn map_words<F>(x: &AlgebraElement, n: usize, f: F) -> Result<AlgebraElement>
where
    F: Fn(GeneratorWord) -> GeneratorWord,
{
    let mut out = AlgebraElement::zero(n);
    for (idx, c) in x.terms() {
        out.add_scaled(&reduce_word(n, &f(basis_word(idx)))?, c);
    }
    Ok(out)
}

/// Shift every generator index up by one, from rank `n-1` into rank `n`.
pub fn iota(x: &AlgebraElement) -> Result<AlgebraElement> {
    let n = x.n() + 1;
    map_words(x, n, |w| GeneratorWord::new(w.letters.into_iter().map(|g| g.shifted(1)).collect()))
}

/// `P_1 ι(x)`.
pub fn rho(x: &AlgebraElement) -> Result<AlgebraElement> {
    let n = x.n() + 1;
    map_words(x, n, |w| {
        let mut letters = vec![Letter::P(1)];
        letters.extend(w.letters.into_iter().map(|g| g.shifted(1)));
        GeneratorWord::new(letters)
    })
}

/// The anti-automorphism fixing every generator.
pub fn star(x: &AlgebraElement) -> Result<AlgebraElement> {
    map_words(x, x.n(), |w| w.reversed())
}
