//! I-adic towers over Burnside rings: powers of ideals, the quotient
//! towers `{M / I^n M}`, and completion reports.

mod ideal;
mod module;

pub use ideal::{CompletionReport, IdealTower, DEFAULT_HORIZON};
pub use module::{ModuleMap, RingModule};
