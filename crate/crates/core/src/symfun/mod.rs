//! Symmetric polynomials in finitely many variables over `Z[v, v^-1]`.

mod pieri;
mod poly;
mod qfun;

pub use pieri::{pieri_brute_force, pieri_qtilde};
pub use poly::{from_schur, m_sym, mul_sym, schur, schur_expand, SchurExpansion, SymPoly};
pub use qfun::{
    check_generating_function, check_two_symmetric, g_poly, hall_littlewood_q, m_sym_with_one, qtilde, qtilde_mu,
    trace_wn_sequence_sum,
};
