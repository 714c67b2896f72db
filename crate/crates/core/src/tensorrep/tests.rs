use super::*;
use crate::algebra::{hat_t, AlgebraElement, GeneratorWord};
use crate::combinatorics::Partition;
use crate::ring::LaurentScalar;
use crate::symfun::{m_sym, qtilde, qtilde_mu, SymPoly};

fn basis(r: usize, w: &[u8]) -> TensorState {
    TensorState::basis(r, w.to_vec()).unwrap()
}

fn word(s: &str) -> GeneratorWord {
    s.parse().unwrap()
}

#[test]
fn r_matrix_cases() {
    assert_eq!(apply_r(1, &basis(1, &[1, 1])).unwrap(), basis(1, &[1, 1]).scale(&LaurentScalar::constant(-1)));
    assert_eq!(apply_r(1, &basis(1, &[1, 2])).unwrap(), basis(1, &[2, 1]).scale(&LaurentScalar::v().scale_i64(-1)));
    let mut expected = basis(1, &[1, 2]).scale(&LaurentScalar::v().scale_i64(-1));
    expected.add_scaled(&basis(1, &[2, 1]), &LaurentScalar::q_minus_one());
    assert_eq!(apply_r(1, &basis(1, &[2, 1])).unwrap(), expected);
}

#[test]
fn projections() {
    assert_eq!(apply_e(1, &basis(1, &[2, 1])).unwrap(), basis(1, &[2, 1]));
    assert!(apply_e(1, &basis(1, &[1, 2])).unwrap().is_zero());
    assert!(apply_e(2, &basis(2, &[3, 1])).unwrap().is_zero());
    assert_eq!(psi_apply(&word("P1"), &basis(1, &[2, 1])).unwrap(), basis(1, &[2, 1]));
}

#[test]
fn relations_on_tensor_space() {
    for (n, r) in [(2, 1), (3, 2)] {
        let bad: Vec<_> = verify_rep_relations(n, r).unwrap().into_iter().filter(|d| !d.passed()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}

#[test]
fn traces() {
    let id = AlgebraElement::one(1);
    let mut expected = SymPoly::one(1);
    expected.add_scaled(&m_sym(&"1".parse().unwrap(), 1), &LaurentScalar::one());
    assert_eq!(trace_d(&id, 1).unwrap(), expected);
    for m in 1..=3 {
        let mu = Partition::from_unsorted(vec![m]);
        assert_eq!(trace_d(&hat_t(m, &(&mu).into()).unwrap(), 3).unwrap(), qtilde(m, 3));
    }
    let x = hat_t(3, &"2".parse().unwrap()).unwrap();
    assert_eq!(trace_d(&x, 3).unwrap(), qtilde_mu(&[2], 3));
}

#[test]
fn dominant_trace_is_symmetric() {
    let x = crate::algebra::reduce_word(3, &word("T1 P1 T2^-1 T1")).unwrap();
    let full = trace_d_full(&x, 3).unwrap();
    let dom = trace_d(&x, 3).unwrap();
    for (alpha, c) in &full {
        let lam = Partition::from_unsorted(alpha.clone());
        assert_eq!(&dom.coeff(&lam), c, "{alpha:?}");
    }
}

#[test]
fn image_rank_small() {
    let at = crate::ring::Specialization::at_v_int(2);
    assert_eq!(image_rank(1, 1, &at).unwrap(), 2);
    assert_eq!(image_rank(2, 2, &at).unwrap(), 7);
}

#[test]
fn diagnostic_json() {
    let d = &verify_rep_relations(2, 1).unwrap()[0];
    let s = serde_json::to_string(d).unwrap();
    assert!(s.starts_with(r#"{"check":"quadratic i=1","n":2,"r":1,"status":"pass""#));
}
