//! Symmetric-group combinatorics: partitions, cycle types, conjugacy
//! class data, irreducible characters, and decomposition of class
//! functions into irreducibles.

pub mod character;
pub mod classfn;
pub mod decompose;
pub mod partition;
pub mod permutation;

pub use character::{character_table, irreducible_character, mn_character};
pub use classfn::{class_size, classes, ClassFunction};
pub use decompose::{decompose, length_of, DecomposeError, IrrDecomposition};
pub use partition::{partitions, CycleType, PadError, Partition};
pub use permutation::Permutation;
