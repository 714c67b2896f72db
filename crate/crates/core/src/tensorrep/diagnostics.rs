use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use super::action::{apply_letter, psi_apply};
use super::state::{all_words, TensorState, TensorWord};
use crate::algebra::{basis_word, GeneratorWord, Letter};
use crate::combinatorics::standard_basis;
use crate::error::Result;
use crate::ring::{rank_sparse_rational, LaurentScalar, Specialization};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// `{"check": name, "n":, "r":, "status": "pass"|"fail", "witness": word}`.
#[derive(Clone, Debug, Serialize)]
pub struct Diagnostic {
    pub check: String,
    pub n: usize,
    pub r: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Diagnostic {
    pub fn new(check: impl Into<String>, n: usize, r: usize, pass: bool, witness: Option<String>) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Self { check: check.into(), n, r, status, witness: if pass { None } else { witness } }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type Combo = Vec<(LaurentScalar, GeneratorWord)>;

fn eval(combo: &Combo, v: &TensorState) -> Result<TensorState> {
    let mut out = TensorState::zero(v.n(), v.r());
    for (c, w) in combo {
        out.add_scaled(&psi_apply(w, v)?, c);
    }
    Ok(out)
}

fn w(letters: &[Letter]) -> GeneratorWord {
    GeneratorWord::new(letters.to_vec())
}

fn one(letters: &[Letter]) -> Combo {
    vec![(LaurentScalar::one(), w(letters))]
}

fn compare(name: String, n: usize, r: usize, words: &[TensorWord], lhs: &Combo, rhs: &Combo) -> Result<Diagnostic> {
    for word in words {
        let v = TensorState::basis(r, word.clone())?;
        if eval(lhs, &v)? != eval(rhs, &v)? {
            let witness = Some(word.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
            return Ok(Diagnostic { check: name, n, r, status: Status::Fail, witness });
        }
    }
    Ok(Diagnostic { check: name, n, r, status: Status::Pass, witness: None })
}

/// Checks the defining relations as operator identities on every basis
/// vector of `V_{r+1}^{⊗n}`.
pub fn verify_rep_relations(n: usize, r: usize) -> Result<Vec<Diagnostic>> {
    use Letter::{TInv, P, T};
    let words = all_words(n, r);
    let q = LaurentScalar::q();
    let qm1 = LaurentScalar::q_minus_one();
    let neg = |c: &LaurentScalar| -c.clone();
    let mut out = Vec::new();
    let mut push = |name: String, lhs: Combo, rhs: Combo| -> Result<()> {
        out.push(compare(name, n, r, &words, &lhs, &rhs)?);
        Ok(())
    };
    for i in 1..n {
        push(format!("quadratic i={i}"), one(&[T(i), T(i)]), vec![(qm1.clone(), w(&[T(i)])), (q.clone(), w(&[]))])?;
        push(format!("inverse i={i}"), one(&[T(i), TInv(i)]), one(&[]))?;
        if i + 1 < n {
            push(format!("braid i={i}"), one(&[T(i), T(i + 1), T(i)]), one(&[T(i + 1), T(i), T(i + 1)]))?;
        }
        for j in i + 2..n {
            push(format!("commute i={i},j={j}"), one(&[T(i), T(j)]), one(&[T(j), T(i)]))?;
        }
    }
    for i in 1..=n {
        push(format!("idempotent i={i}"), one(&[P(i), P(i)]), one(&[P(i)]))?;
        for j in 1..i {
            push(format!("absorb i={i},j={j}"), one(&[P(i), P(j)]), one(&[P(i)]))?;
            push(format!("absorb i={i},j={j} (left)"), one(&[P(j), P(i)]), one(&[P(i)]))?;
        }
        for j in 1..n {
            if i < j {
                push(format!("commute P{i} T{j}"), one(&[P(i), T(j)]), one(&[T(j), P(i)]))?;
            } else if j < i {
                let minus_p = vec![(LaurentScalar::constant(-1), w(&[P(i)]))];
                push(format!("sign P{i} T{j}"), one(&[P(i), T(j)]), minus_p.clone())?;
                push(format!("sign T{j} P{i}"), one(&[T(j), P(i)]), minus_p)?;
            }
        }
        if i >= 2 {
            let qi = LaurentScalar::q_inv();
            let lhs = vec![(neg(&qi), w(&[P(i - 1), T(i - 1), P(i - 1)])), (&qi * &qm1, w(&[P(i - 1)]))];
            push(format!("projector recursion i={i}"), lhs, one(&[P(i)]))?;
        }
    }
    Ok(out)
}

/// Rank over `Q` of the span of `Ψ(T_(A,B,w))` at a numeric point.
pub fn image_rank(n: usize, r: usize, at: &Specialization) -> Result<usize> {
    let words = all_words(n, r);
    let index: BTreeMap<&TensorWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = words.len();
    let mut rows = Vec::new();
    for idx in standard_basis(n) {
        let word = basis_word(&idx);
        let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (col, u) in words.iter().enumerate() {
            let image = word.letters.iter().rev().try_fold(TensorState::basis(r, u.clone())?, |acc, &g| apply_letter(g, &acc))?;
            for (target, c) in image.terms() {
                let val = c.specialize(at)?;
                if val != BigRational::from_integer(0.into()) {
                    row.insert(index[target] * dim + col, val);
                }
            }
        }
        rows.push(row);
    }
    Ok(rank_sparse_rational(&rows))
}
