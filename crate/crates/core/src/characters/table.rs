use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::engine::MnEngine;
use crate::combinatorics::{partitions_up_to, Partition};
use crate::error::Result;
use crate::ring::{determinant_rational, LaurentScalar, Specialization};

/// `χ^{(n)}_{(λ,|λ|)}(T̂_μ)` for all `|λ|, |μ| <= n`, rows `λ` and columns
/// `μ` in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<LaurentScalar>>,
}

impl CharacterTable {
    /// Fills the table; `jobs > 1` computes rows on a thread pool of that size.
    pub fn compute(n: usize, engine: &MnEngine, jobs: usize) -> Result<Self> {
        let parts = partitions_up_to(n);
        let row = |lambda: &Partition| parts.iter().map(|mu| engine.character(n, lambda, mu)).collect::<Result<Vec<_>>>();
        let entries = if jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| crate::Error::Defect(format!("thread pool: {e}")))?;
            pool.install(|| parts.par_iter().map(row).collect::<Result<Vec<_>>>())?
        } else {
            parts.iter().map(row).collect::<Result<Vec<_>>>()?
        };
        Ok(Self { n, rows: parts.clone(), cols: parts, entries })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentScalar> {
        let i = self.rows.iter().position(|p| p == lambda)?;
        let j = self.cols.iter().position(|p| p == mu)?;
        Some(&self.entries[i][j])
    }

    /// The column at `μ = (1^n)`, i.e. the values at the identity.
    pub fn identity_column(&self) -> Vec<LaurentScalar> {
        let ones = Partition::from_unsorted(vec![1; self.n]);
        let j = self.cols.iter().position(|p| *p == ones).expect("(1^n) is a column");
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    /// Every entry with `|λ| > |μ|` is zero.
    pub fn vanishing_check(&self) -> bool {
        self.rows.iter().zip(&self.entries).all(|(lambda, row)| {
            self.cols.iter().zip(row).all(|(mu, v)| lambda.size() <= mu.size() || v.is_zero())
        })
    }

    pub fn determinant_at(&self, at: &Specialization) -> Result<BigRational> {
        let m = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.specialize(at)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        determinant_rational(&m)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda\\mu");
        for mu in &self.cols {
            out.push(',');
            out.push_str(&mu.to_dotted());
        }
        out.push('\n');
        for (lambda, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&lambda.to_dotted());
            for v in row {
                out.push(',');
                out.push_str(&v.to_poly_string());
            }
            out.push('\n');
        }
        out
    }
}
