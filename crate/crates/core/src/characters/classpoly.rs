use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::table::CharacterTable;
use crate::algebra::AlgebraElement;
use crate::combinatorics::{BasisIndex, Partition};
use crate::error::{Error, Result};
use crate::ring::{solve_linear, LaurentScalar};
use crate::tensorrep::char_oracle;

/// Coefficients `f^ν` with `T_(A,B,w) ≡ Σ_ν f^ν T̂_ν` modulo commutators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPolyVector {
    pub index: BasisIndex,
    pub coeffs: BTreeMap<Partition, LaurentScalar>,
}

impl Serialize for ClassPolyVector {
    /// `{"index": ..., "f": {"2.1": coeff, ...}}`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let f: BTreeMap<String, &LaurentScalar> = self.coeffs.iter().map(|(p, c)| (p.to_dotted(), c)).collect();
        let mut st = s.serialize_struct("ClassPolyVector", 2)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("f", &f)?;
        st.end()
    }
}

/// Solves `Σ_ν f^ν χ_λ(T̂_ν) = χ_λ(x)` for every row `λ`, with the right-hand
/// side taken from the tensor-space trace oracle in `r` variables.
pub fn class_polynomials_of(table: &CharacterTable, x: &AlgebraElement, r: usize) -> Result<BTreeMap<Partition, LaurentScalar>> {
    let traces = char_oracle(x, r)?;
    let rhs: Vec<LaurentScalar> = table.rows.iter().map(|l| traces.get(l).cloned().unwrap_or_default()).collect();
    let sol = solve_linear(&table.entries, &rhs)?;
    let mut out = BTreeMap::new();
    for (nu, f) in table.cols.iter().zip(sol) {
        let f = f.as_laurent().ok_or_else(|| Error::Defect(format!("class polynomial f^{nu} = {f} is not a Laurent polynomial")))?;
        if !f.is_zero() {
            out.insert(nu.clone(), f);
        }
    }
    Ok(out)
}

pub fn class_polynomials(table: &CharacterTable, idx: &BasisIndex, r: usize) -> Result<ClassPolyVector> {
    if idx.n() != table.n {
        return Err(Error::RankMismatch { left: idx.n(), right: table.n });
    }
    let coeffs = class_polynomials_of(table, &AlgebraElement::basis(idx.clone()), r)?;
    Ok(ClassPolyVector { index: idx.clone(), coeffs })
}
