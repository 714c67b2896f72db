//! The action of `H_n(q)` on `V_{r+1}^{⊗n}` and the weighted-trace oracle.

mod action;
mod diagnostics;
mod state;
mod trace;

pub use action::{apply_e, apply_letter, apply_r, apply_r_inv, psi_apply, psi_element};
pub use diagnostics::{image_rank, verify_rep_relations, Diagnostic, Status};
pub use state::{all_words, content, TensorState, TensorWord};
pub use trace::{char_oracle, dominant_words, trace_d, trace_d_full};

#[cfg(test)]
mod tests;
