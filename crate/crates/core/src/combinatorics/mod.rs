//! Partitions, permutations, skew strips, Kostka numbers and the standard
//! basis index set.

mod basis;
mod kostka;
mod partition;
pub mod perm;
mod strip;

pub use basis::{basis_iter, dimension, standard_basis, BasisIndex};
pub use kostka::{horizontal_strips, kostka, kostka_content};
pub use partition::{compositions_of, partitions_of, partitions_up_to, Composition, Partition};
pub use strip::{skew_boxes, strip_data, subpartitions, SkewStripData};
