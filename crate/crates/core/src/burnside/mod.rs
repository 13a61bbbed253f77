//! Burnside rings: tables of marks, the ghost embedding, G-sets,
//! restriction and induction, and prime ideals.

mod gset;
mod mackey;
mod marks;
mod prime;

pub use gset::GSet;
pub use mackey::{double_coset_formula, induce_along, induction, inclusion_table, orbit_count, restrict_along, restriction};
pub use marks::{BurnsideElement, MarkVector, TableOfMarks};
pub use prime::PrimeIdealLabel;
