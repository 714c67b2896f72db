use std::collections::BTreeMap;

use super::poly::{mul_sym, SymPoly};
use crate::combinatorics::{partitions_of, Partition};
use crate::ring::LaurentScalar;

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `m_μ(x_1, ..., x_r, 1)` as a polynomial in `x_1..x_r`.
pub fn m_sym_with_one(mu: &Partition, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    out.add_term(mu.clone(), &LaurentScalar::one());
    for (value, _) in mu.multiplicities() {
        let rest = mu.without_part(value).expect("value is a part");
        out.add_term(rest, &LaurentScalar::one());
    }
    out
}

/// `q̃_m(x_1, ..., x_r, 1; q) = Σ_{μ ⊢ m} (-1)^{m-ℓ} (q-1)^{ℓ-1} m_μ(x, 1)`.
pub fn qtilde(m: usize, r: usize) -> SymPoly {
    if m == 0 {
        return SymPoly::one(r);
    }
    let mut out = SymPoly::zero(r);
    for mu in partitions_of(m) {
        let l = mu.len();
        let c = LaurentScalar::q_minus_one().pow(l as u32 - 1).scale_i64(sign(m - l));
        out.add_scaled(&m_sym_with_one(&mu, r), &c);
    }
    out
}

/// `Π_i q̃_{μ_i}`.
pub fn qtilde_mu(parts: &[usize], r: usize) -> SymPoly {
    parts.iter().fold(SymPoly::one(r), |acc, &m| mul_sym(&acc, &qtilde(m, r)).expect("same r"))
}

/// Weakly monotone index sequences of length `m` over `1..=top`, each
/// paired with its counts of equal and strict adjacent steps.
fn monotone_sequences(m: usize, top: usize) -> Vec<(Vec<usize>, usize, usize)> {
    fn rec(m: usize, top: usize, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize, usize)>) {
        if cur.len() == m {
            let eq = cur.windows(2).filter(|w| w[0] == w[1]).count();
            out.push((cur.clone(), eq, m.saturating_sub(1) - eq));
            return;
        }
        let start = cur.last().copied().unwrap_or(1);
        for i in start..=top {
            cur.push(i);
            rec(m, top, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, top, &mut Vec::new(), &mut out);
    out
}

fn exponents(seq: &[usize], r: usize) -> Vec<usize> {
    let mut alpha = vec![0; r];
    for &i in seq {
        if i <= r {
            alpha[i - 1] += 1;
        }
    }
    alpha
}

/// `g_m(x_1, ..., x_r, 1; q)`, summed over weakly increasing sequences with
/// weight `q^{#equal steps} (q-1)^{#strict steps}`.
pub fn g_poly(m: usize, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    if m == 0 {
        return SymPoly::one(r);
    }
    for (seq, eq, strict) in monotone_sequences(m, r + 1) {
        let c = &LaurentScalar::q().pow(eq as u32) * &LaurentScalar::q_minus_one().pow(strict as u32);
        out.add_if_dominant(&exponents(&seq, r), &c);
    }
    out
}

/// The sequence-sum form of `tr(D T_{w_(m)})`: weakly decreasing sequences
/// with weight `(-1)^{#equal steps} (q-1)^{#strict steps}`.
pub fn trace_wn_sequence_sum(m: usize, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(r);
    for (seq, eq, strict) in monotone_sequences(m, r + 1) {
        // Reversing an increasing sequence gives the decreasing one with the
        // same step counts.
        let c = LaurentScalar::q_minus_one().pow(strict as u32).scale_i64(sign(eq));
        out.add_if_dominant(&exponents(&seq, r), &c);
    }
    out
}

/// `q̃_m = (-q)^{m-1} g_m(·; q^{-1})`, with the parameter inverted in the
/// coefficients only.
pub fn check_two_symmetric(m: usize, r: usize) -> bool {
    let factor = LaurentScalar::q_monomial(sign(m.saturating_sub(1)), m as i32 - 1);
    qtilde(m, r) == g_poly(m, r).bar_coeffs().scale(&factor)
}

/// Coefficient of `y^m` in `Π_{i=1}^{r+1} (1 - t x_i y)/(1 - x_i y)` at
/// `t = q`, with `x_{r+1} = 1`, by truncated series multiplication.
pub fn hall_littlewood_q(m: usize, r: usize) -> SymPoly {
    // Series keyed by exponent vectors of (x_1..x_r); the y-degree equals the
    // total degree in all r+1 variables, so it is tracked separately.
    type Series = BTreeMap<(usize, Vec<usize>), LaurentScalar>;
    let mut acc: Series = BTreeMap::from([((0, vec![0; r]), LaurentScalar::one())]);
    for var in 0..=r {
        // (1 - t x y) Σ_j (x y)^j = 1 + Σ_{j>=1} (1 - t) (x y)^j
        let mut next: Series = BTreeMap::new();
        for ((deg, alpha), c) in &acc {
            for j in 0..=m - deg {
                let f = if j == 0 { c.clone() } else { c * &(&LaurentScalar::one() - &LaurentScalar::q()) };
                let mut beta = alpha.clone();
                if var < r {
                    beta[var] += j;
                }
                let e = next.entry((deg + j, beta)).or_default();
                *e += &f;
            }
        }
        acc = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    let mut out = SymPoly::zero(r);
    for ((deg, alpha), c) in acc {
        if deg == m {
            out.add_if_dominant(&alpha, &c);
        }
    }
    out
}

/// `(q-1)(-1)^m q̃_m = q_m(x; q)` for `m >= 1`.
pub fn check_generating_function(m: usize, r: usize) -> bool {
    let lhs = qtilde(m, r).scale(&LaurentScalar::q_minus_one().scale_i64(sign(m)));
    lhs == hall_littlewood_q(m, r)
}
