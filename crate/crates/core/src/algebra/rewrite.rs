//! Right multiplication of standard basis elements by single generators.
//!
//! Write `X = T_A P_k T_w T_B^{-1}`. A simple reflection on the right first
//! meets `T_B^{-1}`, whose interaction is governed by where `i` and `i+1` sit
//! relative to `B`. `P_1` on the right is pushed through `T_B^{-1}` one
//! column at a time using `P_{j+1} = -P_j T_j^{-1} P_j` until it merges with
//! `P_k`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::element::AlgebraElement;
use super::word::Letter;
use crate::combinatorics::{perm, BasisIndex};
use crate::ring::LaurentScalar;

type Terms = Vec<(BasisIndex, LaurentScalar)>;
type Cache = RwLock<HashMap<(BasisIndex, Letter), Arc<Terms>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn q() -> LaurentScalar {
    LaurentScalar::q()
}

fn q_inv() -> LaurentScalar {
    LaurentScalar::q_inv()
}

fn neg_one() -> LaurentScalar {
    LaurentScalar::constant(-1)
}

fn with_b(idx: &BasisIndex, b: Vec<usize>) -> BasisIndex {
    BasisIndex { a: idx.a.clone(), b, w: idx.w.clone() }
}

fn with_w(idx: &BasisIndex, w: Vec<usize>) -> BasisIndex {
    BasisIndex { a: idx.a.clone(), b: idx.b.clone(), w }
}

/// `T_(idx) * letter` expanded in the standard basis.
pub fn rmul_basis(idx: &BasisIndex, letter: Letter) -> Arc<Terms> {
    let key = (idx.clone(), letter);
    if let Some(hit) = cache().read().get(&key) {
        return hit.clone();
    }
    let out = Arc::new(compute(idx, letter));
    cache().write().insert(key, out.clone());
    out
}

fn compute(idx: &BasisIndex, letter: Letter) -> Terms {
    match letter {
        Letter::T(i) => rmul_t(idx, i, false),
        Letter::TInv(i) => rmul_t(idx, i, true),
        Letter::P(1) => rmul_p1(idx),
        Letter::P(j) => {
            // X P_j = -((X P_{j-1}) T_{j-1}^{-1}) P_{j-1}
            let x = AlgebraElement::basis(idx.clone());
            let y = rmul(&rmul(&rmul(&x, Letter::P(j - 1)), Letter::TInv(j - 1)), Letter::P(j - 1));
            y.scale(&neg_one()).terms().map(|(i, c)| (i.clone(), c.clone())).collect()
        }
    }
}

fn rmul_t(idx: &BasisIndex, i: usize, inv: bool) -> Terms {
    let b = &idx.b;
    let has_i = b.contains(&i);
    let has_next = b.contains(&(i + 1));
    let x = idx.clone();
    match (has_i, has_next) {
        (true, false) => {
            let bp = with_b(idx, b.iter().map(|&e| if e == i { i + 1 } else { e }).collect());
            if inv {
                vec![(bp, LaurentScalar::one())]
            } else {
                vec![(bp, q()), (x, LaurentScalar::q_minus_one())]
            }
        }
        (false, true) => {
            let bp = with_b(idx, b.iter().map(|&e| if e == i + 1 { i } else { e }).collect());
            if inv {
                vec![(x, &q_inv() - &LaurentScalar::one()), (bp, q_inv())]
            } else {
                vec![(bp, LaurentScalar::one())]
            }
        }
        _ => {
            // T_B^{-1} T_i = T_j T_B^{-1} with j = d_B^{-1}(i).
            let d = perm::min_coset_rep(idx.n(), b);
            let j = d.iter().position(|&e| e == i).expect("i is in range") + 1;
            if j < idx.k() {
                return vec![(x, neg_one())];
            }
            let ws = with_w(idx, perm::times_simple(&idx.w, j));
            let ascent = idx.w[j - 1] < idx.w[j];
            match (ascent, inv) {
                (true, false) => vec![(ws, LaurentScalar::one())],
                (true, true) => vec![(ws, q_inv()), (x, &q_inv() - &LaurentScalar::one())],
                (false, false) => vec![(x, LaurentScalar::q_minus_one()), (ws, q())],
                (false, true) => vec![(ws, LaurentScalar::one())],
            }
        }
    }
}

/// `T_A T_w P_{k+1}` for `w` fixing `1..k`, assuming `k < n`.
fn merge_projector(n: usize, a: &[usize], w: &[usize]) -> Terms {
    let k = a.len();
    let u = perm::compose(&perm::min_coset_rep(n, a), w);
    let mut head: Vec<usize> = u[..=k].to_vec();
    let sign = perm::length(&head) % 2;
    head.sort_unstable();
    let d = perm::min_coset_rep(n, &head);
    let y = perm::compose(&perm::inverse(&d), &u);
    let mut y2: Vec<usize> = (1..=k + 1).collect();
    y2.extend_from_slice(&y[k + 1..]);
    let c = if sign == 0 { LaurentScalar::one() } else { neg_one() };
    vec![(BasisIndex { a: head, b: (1..=k + 1).collect(), w: y2 }, c)]
}

fn rmul_p1(idx: &BasisIndex) -> Terms {
    if idx.k() == 0 {
        return merge_projector(idx.n(), &idx.a, &idx.w);
    }
    let y = rmul_pj(idx, 1);
    y.terms().map(|(i, c)| (i.clone(), c.clone())).collect()
}

/// `X P_j` for `1 <= j <= k` when `{1..j-1} ⊆ B`.
fn rmul_pj(idx: &BasisIndex, j: usize) -> AlgebraElement {
    let k = idx.k();
    let c = idx.b[j - 1];
    if c == j {
        return AlgebraElement::basis(idx.clone());
    }
    let mut bp = idx.b.clone();
    bp[j - 1] = j;
    let xp = with_b(idx, bp);
    let mut y = if j == k {
        AlgebraElement::from_terms(idx.n(), merge_projector(idx.n(), &idx.a, &idx.w)).expect("valid index")
    } else {
        rmul_pj(&xp, j + 1)
    };
    for l in j + 1..c {
        y = rmul(&y, Letter::TInv(l));
    }
    y.scale(&neg_one())
}

/// `x * letter` in the standard basis.
pub fn rmul(x: &AlgebraElement, letter: Letter) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.n());
    for (idx, c) in x.terms() {
        for (j, d) in rmul_basis(idx, letter).iter() {
            out.add_term(j.clone(), &(c * d));
        }
    }
    out
}
