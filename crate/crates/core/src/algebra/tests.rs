use super::*;
use crate::combinatorics::{standard_basis, BasisIndex, Composition};
use crate::ring::LaurentScalar;

fn idx(s: &str) -> BasisIndex {
    s.parse().unwrap()
}

fn l(pairs: &[(i32, i64)]) -> LaurentScalar {
    LaurentScalar::from_q_coeffs(pairs)
}

fn elt(n: usize, terms: &[(&str, LaurentScalar)]) -> AlgebraElement {
    AlgebraElement::from_terms(n, terms.iter().map(|(s, c)| (idx(s), c.clone()))).unwrap()
}

fn word(n: usize, s: &str) -> AlgebraElement {
    reduce_word(n, &s.parse().unwrap()).unwrap()
}

#[test]
fn generator_products_rank_two() {
    let p1 = AlgebraElement::basis(BasisIndex::p(2, 1));
    assert_eq!(rmul_gen(&p1, Letter::P(1)).unwrap(), p1);
    let expected = elt(2, &[("A=1;B=2;w=1,2", l(&[(1, 1)])), ("A=1;B=1;w=1,2", l(&[(1, 1), (0, -1)]))]);
    assert_eq!(rmul_gen(&p1, Letter::T(1)).unwrap(), expected);
    let p2 = AlgebraElement::basis(BasisIndex::p(2, 2));
    assert_eq!(rmul_gen(&p2, Letter::T(1)).unwrap(), p2.scale(&l(&[(0, -1)])));
    let ptp = word(2, "P1 T1 P1");
    assert_eq!(ptp, elt(2, &[("A=1;B=1;w=1,2", l(&[(1, 1), (0, -1)])), ("A=1,2;B=1,2;w=1,2", l(&[(1, -1)]))]));
    let t1 = word(2, "T1");
    assert_eq!(mul(&t1, &t1).unwrap(), elt(2, &[("A=;B=;w=2,1", l(&[(1, 1), (0, -1)])), ("A=;B=;w=1,2", l(&[(1, 1)]))]));
    assert_eq!(mul(&p2, &p1).unwrap(), p2);
}

#[test]
fn basis_words_reduce_to_themselves() {
    for n in 1..=4 {
        for i in standard_basis(n) {
            assert_eq!(reduce_word(n, &basis_word(&i)).unwrap(), AlgebraElement::basis(i.clone()), "{i}");
        }
    }
}

#[test]
fn listed_word_for_p2_agrees() {
    assert_eq!(word(2, "T1 P2 T1^-1"), word(2, "P2"));
}

#[test]
fn hat_t_small_cases() {
    let c = |s: &str| s.parse::<Composition>().unwrap();
    assert_eq!(hat_t(2, &c("")).unwrap(), AlgebraElement::basis(BasisIndex::p(2, 2)));
    assert_eq!(hat_t(2, &c("1.1")).unwrap(), AlgebraElement::one(2));
    assert_eq!(hat_t(2, &c("2")).unwrap(), AlgebraElement::basis(idx("A=;B=;w=2,1")));
    assert!(hat_t(2, &c("3")).is_err());
    assert_eq!(iota(&hat_t(2, &c("2")).unwrap()).unwrap(), word(3, "T2"));
    for mu in ["", "1", "2", "1.1"] {
        assert_eq!(rho(&hat_t(2, &c(mu)).unwrap()).unwrap(), hat_t(3, &c(mu)).unwrap());
    }
}

#[test]
fn iota_rho_and_star() {
    let p1 = AlgebraElement::basis(BasisIndex::p(1, 1));
    assert_eq!(iota(&p1).unwrap(), AlgebraElement::basis(BasisIndex::p(2, 2)));
    assert_eq!(rho(&AlgebraElement::one(2)).unwrap(), AlgebraElement::basis(BasisIndex::p(3, 1)));
    assert_eq!(star(&word(2, "T1 P1")).unwrap(), word(2, "P1 T1"));
    let x = hat_t(2, &"2".parse().unwrap()).unwrap();
    assert_eq!(star(&star(&x).unwrap()).unwrap(), x);
}

#[test]
fn relations_hold_small_ranks() {
    for n in 1..=3 {
        let rep = check_relations(n).unwrap();
        let bad: Vec<_> = rep.failures().collect();
        assert!(bad.is_empty(), "n={n}: {bad:?}");
    }
}

#[test]
fn json_round_trip() {
    let x = word(2, "P1 T1");
    let s = serde_json::to_string(&x).unwrap();
    assert!(s.starts_with(r#"{"n":2,"terms":[{"index":{"A":[1],"B":[1],"w":[1,2]}"#));
    assert_eq!(serde_json::from_str::<AlgebraElement>(&s).unwrap(), x);
}
