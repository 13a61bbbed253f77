//! Towers of finitely generated abelian groups as pro-objects: strict
//! morphisms, pro-triviality, pro-isomorphism and pro-exactness checks,
//! and inverse limits.
//!
//! Every `∀m ∃n` statement is checked up to a finite bound and answered
//! with a [`ProVerdict`]. A negative answer needs a [`TowerCertificate`]
//! from a generating rule; running out of levels only ever gives
//! [`Status::Inconclusive`].

mod limit;
mod morphism;
mod tower;
mod verdict;

pub use limit::{lim1_vanishing, lim_tower, LimitReport, ProfinitePattern};
pub use morphism::{
    cokernel_tower, homology_tower, kernel_tower, Components, MaterializedMorphism, MorphismRule, StrictMorphism,
};
pub use tower::{
    composite_map, ConstantRule, ExplicitTower, MultiplicationRule, Realization, Tower, TowerCertificate, TowerRule,
};
pub use verdict::{
    is_pro_trivial, pro_exactness_check, pro_iso_check, tested_levels, ProVerdict, Refutation, Status, DEFAULT_BOUND,
};
