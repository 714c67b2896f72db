//! The mirabolic Hecke algebra in its standard basis.

mod element;
mod ops;
mod relations;
mod rewrite;
mod word;

pub use element::AlgebraElement;
pub use ops::{generator, hat_t, hat_t_word, iota, mul, product, reduce_word, rho, rmul_gen, rmul_word, star, t0};
pub use relations::{check_relations, RelationCheck, RelationReport};
pub use rewrite::rmul_basis;
pub use word::{basis_word, GeneratorWord, Letter};

#[cfg(test)]
mod tests;
