use std::collections::BTreeMap;

use mirhecke::algebra::{
    generator, hat_t, iota, mul, reduce_word, rho, star, t0, AlgebraElement, GeneratorWord, Letter,
};
use mirhecke::combinatorics::{standard_basis, BasisIndex, Composition, Partition};
use mirhecke::ring::{rank_sparse_rational, LaurentScalar, Specialization};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn basis(idx: &BasisIndex) -> AlgebraElement {
    AlgebraElement::basis(idx.clone())
}

fn word(n: usize, s: &str) -> AlgebraElement {
    reduce_word(n, &s.parse::<GeneratorWord>().unwrap()).unwrap()
}

fn random_element(n: usize, rng: &mut StdRng) -> AlgebraElement {
    let b = standard_basis(n);
    let mut x = AlgebraElement::zero(n);
    for _ in 0..3 {
        let c = LaurentScalar::from_q_coeffs(&[(rng.gen_range(-1..=1), rng.gen_range(-2..=2))]);
        x = x.add(&AlgebraElement::basis(b.choose(rng).unwrap().clone()).scale(&c));
    }
    x
}

#[test]
fn associativity_exhaustive_small() {
    for n in 1..=2 {
        let b = standard_basis(n);
        for x in &b {
            for y in &b {
                let xy = mul(&basis(x), &basis(y)).unwrap();
                for z in &b {
                    let lhs = mul(&xy, &basis(z)).unwrap();
                    let rhs = mul(&basis(x), &mul(&basis(y), &basis(z)).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "({x})({y})({z})");
                }
            }
        }
    }
}

#[test]
fn associativity_sampled() {
    let mut rng = StdRng::seed_from_u64(7);
    for (n, count) in [(3, 400), (4, 60)] {
        for _ in 0..count {
            let (x, y, z) = (random_element(n, &mut rng), random_element(n, &mut rng), random_element(n, &mut rng));
            let lhs = mul(&mul(&x, &y).unwrap(), &z).unwrap();
            let rhs = mul(&x, &mul(&y, &z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn unit_and_even_exponents() {
    for n in 0..=3 {
        let one = AlgebraElement::one(n);
        let b = standard_basis(n);
        for x in &b {
            assert_eq!(mul(&one, &basis(x)).unwrap(), basis(x));
            assert_eq!(mul(&basis(x), &one).unwrap(), basis(x));
            for y in &b {
                assert!(mul(&basis(x), &basis(y)).unwrap().is_even(), "{x} * {y}");
            }
        }
    }
}

#[test]
fn star_is_an_anti_involution() {
    for n in 1..=3 {
        let b = standard_basis(n);
        for x in &b {
            assert_eq!(star(&star(&basis(x)).unwrap()).unwrap(), basis(x));
            for y in &b {
                let lhs = star(&mul(&basis(x), &basis(y)).unwrap()).unwrap();
                let rhs = mul(&star(&basis(y)).unwrap(), &star(&basis(x)).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{x} {y}");
            }
        }
    }
}

#[test]
fn iota_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=3 {
        for _ in 0..150 {
            let (x, y) = (random_element(n, &mut rng), random_element(n, &mut rng));
            let lhs = iota(&mul(&x, &y).unwrap()).unwrap();
            let rhs = mul(&iota(&x).unwrap(), &iota(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

/// Linear independence of the images, checked at a generic point.
fn rank_at(images: &[AlgebraElement], at: &Specialization) -> usize {
    let mut column: BTreeMap<BasisIndex, usize> = BTreeMap::new();
    let rows: Vec<_> = images
        .iter()
        .map(|x| {
            x.terms()
                .map(|(idx, c)| {
                    let next = column.len();
                    (*column.entry(idx.clone()).or_insert(next), c.specialize(at).unwrap())
                })
                .collect()
        })
        .collect();
    rank_sparse_rational(&rows)
}

#[test]
fn embeddings_are_injective() {
    for n in 1..=3 {
        let b = standard_basis(n);
        for f in [iota, rho] {
            let images: Vec<_> = b.iter().map(|x| f(&basis(x)).unwrap()).collect();
            assert_eq!(rank_at(&images, &Specialization::at_v_int(3)), b.len(), "n = {n}");
        }
    }
}

#[test]
fn t0_has_eigenvalues_q_minus_one_and_minus_one() {
    // (T0 - (q-1))(T0 + 1) = 0, since P1 is idempotent.
    let q_minus_2 = LaurentScalar::from_q_coeffs(&[(1, 1), (0, -2)]);
    for n in 1..=3 {
        let t = t0(n);
        let lhs = mul(&t, &t).unwrap();
        let one = AlgebraElement::one(n);
        let rhs = t.scale(&q_minus_2).add(&one.scale(&LaurentScalar::q_minus_one()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn generators_invert() {
    for n in 2..=4 {
        for i in 1..n {
            let prod = mul(&generator(n, Letter::T(i)).unwrap(), &generator(n, Letter::TInv(i)).unwrap()).unwrap();
            assert_eq!(prod, AlgebraElement::one(n));
        }
    }
}

#[test]
fn hat_t_projector_rank() {
    for n in 1..=4 {
        for k in 0..=n {
            for mu in mirhecke::combinatorics::compositions_of(k) {
                let x = hat_t(n, &mu).unwrap();
                assert!(x.terms().all(|(idx, _)| idx.k() == n - k), "n = {n}, mu = {mu:?}");
            }
        }
    }
    let x = hat_t(3, &Composition::from(&"1".parse::<Partition>().unwrap())).unwrap();
    assert_eq!(x, word(3, "P2"));
}
