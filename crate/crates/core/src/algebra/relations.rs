use serde::Serialize;

use super::element::AlgebraElement;
use super::ops::{generator, mul, t0};
use super::word::Letter;
use crate::error::Result;
use crate::ring::LaurentScalar;

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, relation: &str, instance: String, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        self.checks.push(RelationCheck { relation: relation.into(), instance, pass: lhs == rhs });
    }
}

fn l(pairs: &[(i32, i64)]) -> LaurentScalar {
    LaurentScalar::from_q_coeffs(pairs)
}

/// Evaluates every defining relation of both presentations in rank `n`.
pub fn check_relations(n: usize) -> Result<RelationReport> {
    let one = AlgebraElement::one(n);
    let t: Vec<AlgebraElement> = std::iter::once(Ok(t0(n)))
        .chain((1..n).map(|i| generator(n, Letter::T(i))))
        .collect::<Result<_>>()?;
    let t_inv: Vec<AlgebraElement> =
        std::iter::once(Ok(AlgebraElement::zero(n))).chain((1..n).map(|i| generator(n, Letter::TInv(i)))).collect::<Result<_>>()?;
    let p: Vec<AlgebraElement> =
        std::iter::once(Ok(one.clone())).chain((1..=n).map(|j| generator(n, Letter::P(j)))).collect::<Result<_>>()?;
    let m = |a: &AlgebraElement, b: &AlgebraElement| mul(a, b);
    let lin = |terms: &[(&AlgebraElement, LaurentScalar)]| {
        let mut out = AlgebraElement::zero(n);
        for (e, c) in terms {
            out.add_scaled(e, c);
        }
        out
    };
    let mut rep = RelationReport { n, ..Default::default() };

    // T_0^2 = (q-2) T_0 + (q-1)
    rep.push("mH-1", "T0".into(), &m(&t[0], &t[0])?, &lin(&[(&t[0], l(&[(1, 1), (0, -2)])), (&one, l(&[(1, 1), (0, -1)]))]));
    for i in 1..n {
        let lhs = m(&t[i], &t[i])?;
        rep.push("mH-2", format!("i={i}"), &lhs, &lin(&[(&t[i], l(&[(1, 1), (0, -1)])), (&one, l(&[(1, 1)]))]));
        rep.push("inverse", format!("i={i}"), &m(&t[i], &t_inv[i])?, &one);
    }
    for i in 0..n {
        for j in i + 2..n {
            rep.push("mH-3", format!("i={i},j={j}"), &m(&t[i], &t[j])?, &m(&t[j], &t[i])?);
        }
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = m(&m(&t[i], &t[i + 1])?, &t[i])?;
        let rhs = m(&m(&t[i + 1], &t[i])?, &t[i + 1])?;
        rep.push("mH-4", format!("i={i}"), &lhs, &rhs);
    }
    if n >= 2 {
        let (a, b) = (&t[0], &t[1]);
        let aba = m(&m(a, b)?, a)?;
        let bab = m(&m(b, a)?, b)?;
        let qm1 = l(&[(1, 1), (0, -1)]);
        let lhs5 = m(&aba, b)?;
        let rhs5 = lin(&[(&bab, qm1.clone()), (&m(b, a)?, qm1.clone()), (&aba, l(&[(0, -1)]))]);
        rep.push("mH-5", "T0T1T0T1".into(), &lhs5, &rhs5);
        let lhs6 = m(&bab, a)?;
        let rhs6 = lin(&[(&bab, qm1.clone()), (&m(a, b)?, qm1), (&aba, l(&[(0, -1)]))]);
        rep.push("mH-6", "T1T0T1T0".into(), &lhs6, &rhs6);
    }
    for i in 1..=n {
        rep.push("new-pre-1", format!("i={i}"), &m(&p[i], &p[i])?, &p[i]);
        for j in 1..i {
            rep.push("new-pre-2", format!("i={i},j={j}"), &m(&p[i], &p[j])?, &p[i]);
            rep.push("new-pre-2", format!("i={i},j={j} (left)"), &m(&p[j], &p[i])?, &p[i]);
        }
        let neg_pi = p[i].scale(&LaurentScalar::constant(-1));
        for (j, tj) in t.iter().enumerate().take(n).skip(1) {
            if i < j {
                rep.push("new-pre-3", format!("i={i},j={j}"), &m(&p[i], tj)?, &m(tj, &p[i])?);
            } else if j < i {
                rep.push("new-pre-4", format!("i={i},j={j}"), &m(&p[i], tj)?, &neg_pi);
                rep.push("new-pre-4", format!("i={i},j={j} (left)"), &m(tj, &p[i])?, &neg_pi);
            }
        }
        if i >= 2 {
            let pt = m(&m(&p[i - 1], &t_inv[i - 1])?, &p[i - 1])?;
            rep.push("Pi", format!("i={i}"), &pt.scale(&l(&[(0, -1)])), &p[i]);
            let ptp = m(&m(&p[i - 1], &t[i - 1])?, &p[i - 1])?;
            let inner = lin(&[(&ptp, l(&[(0, 1)])), (&m(&p[i - 1], &p[i - 1])?, l(&[(1, -1), (0, 1)]))]);
            rep.push("Pi-expanded", format!("i={i}"), &inner.scale(&l(&[(-1, -1)])), &p[i]);
        }
    }
    // P_1 = 1 - q^{-1}(T_0 + 1)
    let rhs = lin(&[(&one, l(&[(0, 1), (-1, -1)])), (&t[0], l(&[(-1, -1)]))]);
    rep.push("P1", "P1".into(), &p[1], &rhs);
    Ok(rep)
}
