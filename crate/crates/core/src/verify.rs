//! Verification suites: each check compares two independent computations
//! exactly and reports a [`Diagnostic`].

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::algebra::{basis_word, check_relations, hat_t, mul, AlgebraElement};
use crate::characters::{class_polynomials, CharacterTable, GVariant, MnEngine};
use crate::combinatorics::{
    basis_iter, compositions_of, dimension, partitions_up_to, standard_basis, BasisIndex, Composition, Partition,
};
use crate::error::Result;
use crate::ring::{LaurentScalar, Specialization};
use crate::symfun::{
    check_generating_function, check_two_symmetric, pieri_brute_force, pieri_qtilde, qtilde, qtilde_mu, schur,
    trace_wn_sequence_sum, SymPoly,
};
use crate::tensorrep::{all_words, char_oracle, image_rank, psi_apply, verify_rep_relations, Diagnostic, TensorState};

type SparseVec = BTreeMap<usize, LaurentScalar>;

/// `Ψ(T_idx)` for every basis index, stored column by column.
pub struct PsiTable {
    r: usize,
    dim: usize,
    ops: HashMap<BasisIndex, Vec<SparseVec>>,
}

impl PsiTable {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        let words = all_words(n, r);
        let index: HashMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let ops = standard_basis(n)
            .into_par_iter()
            .map(|idx| {
                let word = basis_word(&idx);
                let cols = words
                    .iter()
                    .map(|u| {
                        let image = psi_apply(&word, &TensorState::basis(r, u.clone())?)?;
                        Ok(image.terms().map(|(w, c)| (index[w], c.clone())).collect())
                    })
                    .collect::<Result<Vec<SparseVec>>>()?;
                Ok((idx, cols))
            })
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(Self { r, dim: words.len(), ops })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn apply(&self, x: &AlgebraElement, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (idx, c) in x.terms() {
            let op = &self.ops[idx];
            for (j, a) in v {
                let ca = c * a;
                for (i, b) in &op[*j] {
                    let e = out.entry(*i).or_default();
                    *e += &(&ca * b);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Does `Ψ(ab) = Ψ(a) Ψ(b)` hold on every basis vector?
    pub fn multiplicative_on(&self, a: &BasisIndex, b: &BasisIndex) -> Result<bool> {
        let (ea, eb) = (AlgebraElement::basis(a.clone()), AlgebraElement::basis(b.clone()));
        let prod = mul(&ea, &eb)?;
        for j in 0..self.dim {
            let unit = SparseVec::from([(j, LaurentScalar::one())]);
            if self.apply(&prod, &unit) != self.apply(&ea, &self.apply(&eb, &unit)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Algebra relations in rank `n`, plus their operator forms on tensor space
/// when `r` is given.
pub fn relations(n: usize, r: Option<usize>) -> Result<Vec<Diagnostic>> {
    let rep = check_relations(n)?;
    let mut out: Vec<Diagnostic> = rep
        .checks
        .iter()
        .map(|c| Diagnostic::new(format!("algebra {} {}", c.relation, c.instance), n, 0, c.pass, None))
        .collect();
    if let Some(r) = r {
        out.extend(verify_rep_relations(n, r)?.into_iter().map(|mut d| {
            d.check = format!("tensor {}", d.check);
            d
        }));
    }
    Ok(out)
}

/// Enumerated `|Γ^(n)|` against `Σ C(n,k)^2 k!`.
pub fn basis_count(n: usize) -> Diagnostic {
    let count = num_bigint::BigUint::from(basis_iter(n).count());
    let closed = dimension(n);
    Diagnostic::new("basis count", n, 0, count == closed, Some(format!("enumerated {count}, closed form {closed}")))
}

/// `Ψ(ab) = Ψ(a)Ψ(b)` over all basis pairs, or `sample` random pairs.
pub fn oracle_equivalence(n: usize, r: usize, sample: Option<(usize, u64)>) -> Result<Diagnostic> {
    let table = PsiTable::new(n, r)?;
    let basis = standard_basis(n);
    let pairs: Vec<(BasisIndex, BasisIndex)> = match sample {
        None => basis.iter().flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone()))).collect(),
        Some((count, seed)) => {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..count)
                .map(|_| (basis.choose(&mut rng).unwrap().clone(), basis.choose(&mut rng).unwrap().clone()))
                .collect()
        }
    };
    let bad = pairs
        .par_iter()
        .map(|(a, b)| Ok((!table.multiplicative_on(a, b)?).then(|| format!("{a} * {b}"))))
        .collect::<Result<Vec<Option<String>>>>()?
        .into_iter()
        .flatten()
        .next();
    let name = format!("oracle equivalence ({} pairs)", pairs.len());
    Ok(Diagnostic::new(name, n, r, bad.is_none(), bad))
}

/// `q̃_μ = Σ_λ s_λ χ_λ(T̂_μ)` for every `|μ| <= n`.
pub fn frobenius(n: usize, r: usize, engine: &MnEngine) -> Result<Diagnostic> {
    let parts = partitions_up_to(n);
    let bad = parts
        .par_iter()
        .map(|mu| {
            let mut rhs = SymPoly::zero(r);
            for lambda in &parts {
                let chi = engine.character(n, lambda, mu)?;
                if !chi.is_zero() {
                    rhs.add_scaled(&schur(lambda, r), &chi);
                }
            }
            Ok((qtilde_mu(mu.parts(), r) != rhs).then(|| format!("mu = {mu}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Diagnostic::new("frobenius identity", n, r, bad.is_none(), bad))
}

/// Trace-oracle characters of `T̂_μ` for every `|μ| <= n`, by column.
pub fn oracle_columns(n: usize, r: usize) -> Result<BTreeMap<Partition, BTreeMap<Partition, LaurentScalar>>> {
    partitions_up_to(n)
        .into_par_iter()
        .map(|mu| {
            let x = hat_t(n, &Composition::from(&mu))?;
            Ok((mu, char_oracle(&x, r)?))
        })
        .collect()
}

/// Murnaghan-Nakayama columns against the trace oracle.
pub fn mn_vs_oracle(n: usize, r: usize, engine: &MnEngine) -> Result<Diagnostic> {
    let cols = oracle_columns(n, r)?;
    let mut bad = None;
    'outer: for (mu, col) in &cols {
        for lambda in partitions_up_to(n) {
            let oracle = col.get(&lambda).cloned().unwrap_or_default();
            if engine.character(n, &lambda, mu)? != oracle {
                bad = Some(format!("lambda = {lambda}, mu = {mu}"));
                break 'outer;
            }
        }
    }
    Ok(Diagnostic::new("mn vs trace oracle", n, r, bad.is_none(), bad))
}

/// Strip formula against direct multiplication for `m <= max`, `|ν| <= max - m`.
pub fn pieri(max: usize, r: usize, variant: GVariant) -> Result<Vec<Diagnostic>> {
    let mut out = Vec::new();
    for m in 1..=max {
        for nu in partitions_up_to(max - m) {
            if nu.len() > r {
                continue;
            }
            let ok = pieri_qtilde(m, &nu, r, variant)? == pieri_brute_force(m, &nu, r)?;
            out.push(Diagnostic::new(format!("pieri m={m} nu={} ({variant})", nu.to_dotted()), max, r, ok, None));
        }
    }
    Ok(out)
}

pub fn two_symmetric(max_m: usize, max_r: usize) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for m in 1..=max_m {
            out.push(Diagnostic::new(format!("two-symmetric m={m}"), m, r, check_two_symmetric(m, r), None));
        }
    }
    out
}

pub fn generating_function(max_m: usize, max_r: usize) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for m in 1..=max_m {
            out.push(Diagnostic::new(format!("generating function m={m}"), m, r, check_generating_function(m, r), None));
            let ok = trace_wn_sequence_sum(m, r) == qtilde(m, r);
            out.push(Diagnostic::new(format!("trace sequence sum m={m}"), m, r, ok, None));
        }
    }
    out
}

/// Class polynomials of every basis element: Laurent entries, support on
/// `|ν| = n` for pure Hecke elements, and reconstruction of the oracle
/// traces through trace-oracle columns.
pub fn class_polynomial_checks(n: usize, r: usize, engine: &MnEngine) -> Result<Vec<Diagnostic>> {
    let table = CharacterTable::compute(n, engine, 1)?;
    let cols = oracle_columns(n, r)?;
    standard_basis(n)
        .into_par_iter()
        .map(|idx| {
            let name = format!("class polynomials {idx}");
            let f = match class_polynomials(&table, &idx, r) {
                Ok(f) => f,
                Err(e) => return Ok(Diagnostic::new(name, n, r, false, Some(e.to_string()))),
            };
            if idx.k() == 0 && f.coeffs.keys().any(|nu| nu.size() != n) {
                return Ok(Diagnostic::new(name, n, r, false, Some("pure Hecke element has support below n".into())));
            }
            let traces = char_oracle(&AlgebraElement::basis(idx.clone()), r)?;
            for lambda in &table.rows {
                let mut acc = LaurentScalar::zero();
                for (nu, c) in &f.coeffs {
                    acc += &(c * &cols[nu].get(lambda).cloned().unwrap_or_default());
                }
                if acc != traces.get(lambda).cloned().unwrap_or_default() {
                    return Ok(Diagnostic::new(name, n, r, false, Some(format!("row {lambda}"))));
                }
            }
            Ok(Diagnostic::new(name, n, r, true, None))
        })
        .collect()
}

/// Nonzero determinant at each `q0` and the vanishing pattern.
pub fn table_checks(n: usize, engine: &MnEngine, q0s: &[i64]) -> Result<Vec<Diagnostic>> {
    let table = CharacterTable::compute(n, engine, 1)?;
    let mut out = Vec::new();
    for &q0 in q0s {
        let det = table.determinant_at(&Specialization::at_q_int(q0))?;
        let ok = det != num_rational::BigRational::from_integer(0.into());
        out.push(Diagnostic::new(format!("determinant at q={q0}"), n, 0, ok, Some(det.to_string())));
    }
    out.push(Diagnostic::new("vanishing above the diagonal", n, 0, table.vanishing_check(), None));
    Ok(out)
}

/// `Σ_λ χ_λ(1)^2 = dim H_n(q)` with positive integer values.
pub fn dimension_identity(n: usize, engine: &MnEngine) -> Result<Diagnostic> {
    let table = CharacterTable::compute(n, engine, 1)?;
    let mut total = num_bigint::BigInt::from(0);
    let mut ok = true;
    for v in table.identity_column() {
        match v.as_integer() {
            Some(d) if d > 0.into() => total += &d * &d,
            _ => ok = false,
        }
    }
    let ok = ok && total == num_bigint::BigInt::from(dimension(n));
    Ok(Diagnostic::new("sum of squared degrees", n, 0, ok, Some(format!("sum = {total}"))))
}

/// Oracle traces of `T̂_γ` agree with those of `T̂_{sort γ}`.
pub fn composition_invariance(n: usize, r: usize) -> Result<Diagnostic> {
    let gammas: Vec<Composition> = (0..=n).flat_map(compositions_of).collect();
    let bad = gammas
        .par_iter()
        .map(|g| {
            let lhs = char_oracle(&hat_t(n, g)?, r)?;
            let rhs = char_oracle(&hat_t(n, &Composition::from(&g.sorted()))?, r)?;
            Ok((lhs != rhs).then(|| format!("gamma = {:?}", g.parts())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Diagnostic::new(format!("composition invariance ({} compositions)", gammas.len()), n, r, bad.is_none(), bad))
}

/// Rank of the image of the standard basis at `v = v0` for each `v0`.
pub fn image_rank_checks(n: usize, r: usize, v0s: &[i64]) -> Result<Vec<Diagnostic>> {
    let expected = usize::try_from(dimension(n)).map_err(|_| crate::Error::OutOfRange(format!("dim H_{n}")))?;
    v0s.iter()
        .map(|&v0| {
            let rank = image_rank(n, r, &Specialization::at_v_int(v0))?;
            let name = format!("image rank at v={v0} (q={})", v0 * v0);
            Ok(Diagnostic::new(name, n, r, rank == expected, Some(format!("rank {rank}, expected {expected}"))))
        })
        .collect()
}
