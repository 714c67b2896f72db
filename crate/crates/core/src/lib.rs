//! Exact computations in the mirabolic Hecke algebra `H_n(q)`: standard-basis
//! arithmetic, class polynomials, and character tables computed two ways (a
//! Murnaghan-Nakayama recursion and weighted traces on tensor space).

pub mod algebra;
pub mod characters;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod ring;
pub mod symfun;
pub mod tensorrep;
pub mod verify;

pub use error::{Error, Result};
