//! Irreducible characters: strip weights, the Murnaghan-Nakayama recursion,
//! character tables and class polynomials.

mod classpoly;
mod engine;
mod table;
mod weights;

pub use classpoly::{class_polynomials, class_polynomials_of, ClassPolyVector};
pub use engine::{default_cache_dir, MnEngine};
pub use table::CharacterTable;
pub use weights::{g_coeff, wtbar, GVariant};

use crate::combinatorics::Partition;
use crate::error::Result;
use crate::ring::LaurentScalar;

/// One character value with a fresh, uncached engine.
pub fn mn_character(n: usize, lambda: &Partition, mu: &Partition, variant: GVariant) -> Result<LaurentScalar> {
    MnEngine::new(variant).character(n, lambda, mu)
}

/// The character table with the default coefficients and no disk cache.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    CharacterTable::compute(n, &MnEngine::new(GVariant::Oracle), 1)
}
