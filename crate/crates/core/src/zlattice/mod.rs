//! Integer lattices and finitely generated abelian groups.

mod abelian;
mod lattice;
mod matrix;
mod normal_form;

pub use abelian::{
    cokernel, kernel, kernel_cokernel, snf_quotient, AbelianMap, Cokernel, FgAbelianGroup, Kernel,
    QuotientWitness, SubgroupPresentation,
};
pub use lattice::{hnf, lattice_product, IntegerLattice, StructureConstants};
pub use matrix::IntMatrix;
pub use normal_form::{echelon, left_kernel, smith, Echelon, Smith};
