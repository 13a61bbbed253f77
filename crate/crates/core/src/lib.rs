//! Exact-arithmetic machinery around Burnside rings of finite groups.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`groups`]: permutation groups, subgroup lattices, Sylow and p-residual subgroups;
//! * [`zlattice`]: Hermite/Smith normal forms and finitely generated abelian groups;
//! * [`burnside`]: tables of marks, ghost-ring arithmetic, prime ideals, restriction
//!   and induction;
//! * [`promod`]: towers of abelian groups, strict morphisms and finitary pro-checks;
//! * [`completion`]: powers of ideals in a Burnside ring and I-adic quotient towers;
//! * [`segal`]: finite orbit-category diagrams of families of finite subgroups and the
//!   prime-ideal containment verifier built on them.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod burnside;
pub mod completion;
mod error;
pub mod groups;
pub mod promod;
pub mod segal;
pub mod zlattice;

pub use error::{Error, Result};
