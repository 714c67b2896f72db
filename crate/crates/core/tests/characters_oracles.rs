use std::collections::BTreeMap;

use mirhecke::algebra::{hat_t, AlgebraElement};
use mirhecke::characters::{class_polynomials, mn_character, CharacterTable, GVariant, MnEngine};
use mirhecke::combinatorics::{kostka_content, partitions_of, partitions_up_to, standard_basis, Composition, Partition};
use mirhecke::ring::{LaurentScalar, Specialization};
use mirhecke::symfun::{schur, SymPoly};
use mirhecke::tensorrep::char_oracle;
use num_bigint::BigInt;
use num_rational::BigRational;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[test]
fn table_n1() {
    let t = CharacterTable::compute(1, &MnEngine::new(GVariant::Oracle), 1).unwrap();
    let one = LaurentScalar::one();
    assert_eq!(t.entries, vec![vec![one.clone(), one.clone()], vec![LaurentScalar::zero(), one]]);
    assert_eq!(t.to_csv(), "lambda\\mu,0,1\n0,1,1\n1,0,1\n");
}

#[test]
fn identity_characters_are_rook_degrees() {
    // χ_λ(1) = C(n, |λ|) f^λ with f^λ the number of standard tableaux.
    let engine = MnEngine::new(GVariant::Oracle);
    for n in 0..=6 {
        let t = CharacterTable::compute(n, &engine, 1).unwrap();
        for (lambda, chi) in t.rows.iter().zip(t.identity_column()) {
            let f = kostka_content(lambda, &vec![1; lambda.size()]);
            assert_eq!(chi, LaurentScalar::constant(binom(n, lambda.size()) * f), "n = {n}, {lambda}");
        }
    }
}

#[test]
fn characters_at_classical_q_are_integers() {
    // The ring specialization q = 1 is well defined on every entry.
    let t = CharacterTable::compute(4, &MnEngine::new(GVariant::Oracle), 1).unwrap();
    for row in &t.entries {
        for c in row {
            assert!(c.is_even());
            assert!(c.specialize(&Specialization::at_q_int(1)).unwrap().is_integer());
        }
    }
}

#[test]
fn parallel_and_serial_tables_agree() {
    let a = CharacterTable::compute(5, &MnEngine::new(GVariant::Oracle), 1).unwrap();
    let b = CharacterTable::compute(5, &MnEngine::new(GVariant::Oracle), 4).unwrap();
    assert_eq!(a, b);
}

#[test]
fn removal_order_does_not_matter() {
    let engine = MnEngine::new(GVariant::Oracle);
    for n in 1..=5 {
        for lambda in partitions_up_to(n) {
            for mu in partitions_up_to(n) {
                let want = engine.character(n, &lambda, &mu).unwrap();
                for pos in 0..mu.len() {
                    assert_eq!(engine.character_removing(n, &lambda, &mu, pos).unwrap(), want, "{lambda} {mu} {pos}");
                }
            }
        }
    }
}

#[test]
fn recursion_matches_trace_oracle_with_extra_variable() {
    // r = n + 1 must give the same traces as r = n.
    let engine = MnEngine::new(GVariant::Oracle);
    for n in 1..=3 {
        for mu in partitions_up_to(n) {
            let traces = char_oracle(&hat_t(n, &Composition::from(&mu)).unwrap(), n + 1).unwrap();
            for lambda in partitions_up_to(n) {
                let got = traces.get(&lambda).cloned().unwrap_or_default();
                assert_eq!(got, engine.character(n, &lambda, &mu).unwrap(), "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn paper_variant_changes_the_table() {
    let oracle = mn_character(2, &p("0"), &p("2"), GVariant::Oracle).unwrap();
    let paper = mn_character(2, &p("0"), &p("2"), GVariant::Paper).unwrap();
    assert_eq!(oracle, LaurentScalar::constant(-1));
    assert_ne!(oracle, paper);
}

#[test]
fn disk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let engine = MnEngine::with_cache_dir(GVariant::Oracle, dir.path()).unwrap();
    let table = CharacterTable::compute(3, &engine, 1).unwrap();
    engine.save().unwrap();
    assert!(dir.path().join("mn-oracle.json").exists());
    let again = MnEngine::with_cache_dir(GVariant::Oracle, dir.path()).unwrap();
    assert_eq!(again.memo_len(), engine.memo_len());
    assert_eq!(CharacterTable::compute(3, &again, 1).unwrap(), table);
    let paper = MnEngine::with_cache_dir(GVariant::Paper, dir.path()).unwrap();
    assert_eq!(paper.memo_len(), 0);
}

#[test]
fn pure_hecke_elements_have_top_degree_class_polynomials() {
    let engine = MnEngine::new(GVariant::Oracle);
    for n in 1..=3 {
        let table = CharacterTable::compute(n, &engine, 1).unwrap();
        for idx in standard_basis(n).into_iter().filter(|i| i.k() == 0) {
            let f = class_polynomials(&table, &idx, n).unwrap();
            assert!(f.coeffs.keys().all(|nu| nu.size() == n), "{idx}");
        }
    }
}

#[test]
fn class_polynomials_of_the_identity() {
    // 1 = T̂_{(1^n)} exactly.
    let engine = MnEngine::new(GVariant::Oracle);
    for n in 1..=3 {
        let table = CharacterTable::compute(n, &engine, 1).unwrap();
        let one = standard_basis(n).into_iter().find(|i| AlgebraElement::basis(i.clone()) == AlgebraElement::one(n)).unwrap();
        let f = class_polynomials(&table, &one, n).unwrap();
        let ones = Partition::new(vec![1; n]).unwrap();
        assert_eq!(f.coeffs, BTreeMap::from([(ones, LaurentScalar::one())]));
    }
}

/// Evaluates a symmetric polynomial at integer points through its monomial
/// expansion.
fn eval_sym(f: &SymPoly, x: &[i64]) -> BigRational {
    let at = Specialization::at_q_int(2);
    let mut total = BigRational::from_integer(0.into());
    for (mu, c) in f.terms() {
        let mut padded = mu.parts().to_vec();
        padded.resize(x.len(), 0);
        padded.sort_unstable();
        let mut m = BigInt::from(0);
        loop {
            m += padded.iter().zip(x).map(|(&e, &xi)| BigInt::from(xi).pow(e as u32)).product::<BigInt>();
            if !next_permutation(&mut padded) {
                break;
            }
        }
        total += c.specialize(&at).unwrap() * BigRational::from_integer(m);
    }
    total
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else { return false };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Sum over semistandard tableaux of `x^T`.
fn schur_by_tableaux(lambda: &Partition, x: &[i64]) -> BigInt {
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|i| (0..lambda.part(i)).map(move |j| (i, j))).collect();
    fn go(k: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, x: &[i64]) -> BigInt {
        if k == cells.len() {
            return fill.iter().flatten().map(|&v| BigInt::from(x[v])).product();
        }
        let (i, j) = cells[k];
        let mut total = BigInt::from(0);
        for v in 0..x.len() {
            if (j > 0 && fill[i][j - 1] > v) || (i > 0 && fill[i - 1][j] >= v) {
                continue;
            }
            fill[i][j] = v;
            total += go(k + 1, cells, fill, x);
        }
        total
    }
    let mut fill: Vec<Vec<usize>> = (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect();
    go(0, &cells, &mut fill, x)
}

#[test]
fn schur_polynomials_match_tableau_sums() {
    let x = [2i64, -1, 3, 5];
    for n in 0..=5 {
        for lambda in partitions_of(n) {
            for r in 1..=4 {
                let want = if lambda.len() > r { BigInt::from(0) } else { schur_by_tableaux(&lambda, &x[..r]) };
                assert_eq!(eval_sym(&schur(&lambda, r), &x[..r]), BigRational::from_integer(want), "{lambda} r = {r}");
            }
        }
    }
}
