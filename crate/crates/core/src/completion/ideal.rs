use alloc::vec::Vec;

use num_bigint::BigInt;

use super::module::RingModule;
use crate::burnside::TableOfMarks;
use crate::promod::{lim_tower, LimitReport, ProfinitePattern, Tower};
use crate::zlattice::{lattice_product, FgAbelianGroup, IntegerLattice, StructureConstants};
use crate::{Error, Result};

/// Default number of levels for completion reports.
pub const DEFAULT_HORIZON: usize = 10;

/// An ideal `I` of a ring free over `Z`, with memoized powers `I^n`.
///
/// `ideal_power` only reads the cache; `extend_to` fills it. Both give
/// the same lattices as the uncached computation.
#[derive(Clone, Debug)]
pub struct IdealTower {
    constants: StructureConstants,
    ideal: IntegerLattice,
    powers: Vec<IntegerLattice>,
}

impl IdealTower {
    pub fn new(constants: StructureConstants, ideal: IntegerLattice) -> Result<Self> {
        if ideal.ambient_rank() != constants.rank() {
            return Err(Error::Dimension(alloc::format!(
                "ideal in Z^{} for a ring of rank {}",
                ideal.ambient_rank(),
                constants.rank()
            )));
        }
        let ideal_closed = ideal.basis_rows().iter().all(|x| {
            (0..constants.rank()).all(|i| {
                let mut e = alloc::vec![BigInt::from(0); constants.rank()];
                e[i] = BigInt::from(1);
                ideal.contains(&constants.mul(&e, x))
            })
        });
        if !ideal_closed {
            return Err(Error::Module("lattice is not an ideal".into()));
        }
        Ok(IdealTower { powers: alloc::vec![ideal.clone()], constants, ideal })
    }

    /// The augmentation ideal of a Burnside ring.
    pub fn augmentation(tom: &TableOfMarks) -> Result<Self> {
        Self::new(tom.structure_constants()?, tom.augmentation_ideal())
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn ideal(&self) -> &IntegerLattice {
        &self.ideal
    }

    pub fn rank(&self) -> usize {
        self.constants.rank()
    }

    /// Caches `I^1, …, I^n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.powers.len() < n {
            let next = lattice_product(self.powers.last().expect("I^1 is cached"), &self.ideal, &self.constants)?;
            self.powers.push(next);
        }
        Ok(())
    }

    /// `I^n` for `n ≥ 1`; `I^0` is the whole ring.
    pub fn ideal_power(&self, n: usize) -> Result<IntegerLattice> {
        if n == 0 {
            return Ok(IntegerLattice::full(self.rank()));
        }
        if let Some(p) = self.powers.get(n - 1) {
            return Ok(p.clone());
        }
        let mut p = self.powers.last().expect("I^1 is cached").clone();
        for _ in self.powers.len()..n {
            p = lattice_product(&p, &self.ideal, &self.constants)?;
        }
        Ok(p)
    }

    /// `I^1, …, I^n`.
    pub fn powers_up_to(&self, n: usize) -> Result<Vec<IntegerLattice>> {
        let mut out: Vec<IntegerLattice> = self.powers.iter().take(n).cloned().collect();
        while out.len() < n {
            let next = lattice_product(out.last().expect("I^1 is cached"), &self.ideal, &self.constants)?;
            out.push(next);
        }
        Ok(out)
    }

    /// `{M / I^n M}` as a generated tower with the quotient surjections.
    pub fn quotient_tower(&self, module: &RingModule) -> Result<Tower> {
        module.check_ring(self.rank())?;
        Ok(module.adic_tower(self))
    }

    /// Levels of `{A / I^n}` and the detected shape of the limit.
    pub fn complete(&self, horizon: usize) -> Result<CompletionReport> {
        if horizon < 4 {
            return Err(Error::Index(alloc::format!("completion horizon {horizon} is below 4")));
        }
        let tower = self.quotient_tower(&RingModule::ring(self.rank()))?;
        let levels = tower.materialize(horizon)?.levels().to_vec();
        let (report, _) = lim_tower(&tower, horizon)?;
        let pattern = match report {
            LimitReport::Group(g) => Some(ProfinitePattern {
                free_rank: g.free_rank(),
                padic_ranks: Vec::new(),
                finite_part: g.invariant_factors(),
                certified: false,
                window: (1, horizon),
            }),
            LimitReport::Profinite(p) => Some(p),
            LimitReport::Inconclusive(_) => None,
        };
        Ok(CompletionReport { levels, pattern, pattern_certified: false })
    }

    /// Least `k ≤ horizon` with `I^k ⊆ j`; `None` when the horizon is reached.
    pub fn nilpotence_bound(&self, j: &IntegerLattice, horizon: usize) -> Result<Option<usize>> {
        if j.ambient_rank() != self.rank() {
            return Err(Error::Dimension("quotient ideal in a different ring".into()));
        }
        let powers = self.powers_up_to(horizon)?;
        Ok(powers.iter().position(|p| j.contains_lattice(p)).map(|i| i + 1))
    }
}

/// `A/I^n` up to a horizon plus the detected limit pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletionReport {
    pub levels: Vec<FgAbelianGroup>,
    pub pattern: Option<ProfinitePattern>,
    /// Always `false`: the pattern is read off finitely many levels.
    pub pattern_certified: bool,
}
