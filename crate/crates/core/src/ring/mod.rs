//! Exact scalars: Laurent polynomials in `v` (with `q = v^2`), their fraction
//! field, and exact linear solving.

mod laurent;
mod linear;
mod ratfunc;
mod serde_impl;

pub use laurent::{LaurentScalar, Specialization};
pub use linear::{determinant_rational, rank_sparse_rational, solve_linear};
pub use ratfunc::RationalFunction;
