//! Finite permutation groups: element arithmetic, conjugacy classes of
//! subgroups, Sylow subgroups and p-residuals, injective homomorphisms.

pub(crate) mod bits;
mod classes;
mod group;
mod hom;
mod parse;
mod perm;
mod subgroup;
mod sylow;

pub use classes::{all_subgroup_classes, is_conjugate, SubgroupClass};
pub(crate) use classes::raw_classes;
pub use group::{is_prime, prime_factors, PermGroup, DEFAULT_ORDER_BOUND};
pub use hom::{injective_homs, GroupHom};
pub(crate) use hom::is_injective;
pub use parse::{parse_group, parse_group_on, parse_group_with_bound};
pub use perm::Perm;
pub use subgroup::Subgroup;
pub use sylow::{p_residual, p_residual_of, sylow_subgroup};
