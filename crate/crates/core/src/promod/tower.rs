use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::zlattice::{AbelianMap, FgAbelianGroup, IntMatrix};
use crate::{Error, Result};

/// Finitely many levels `M_1, …, M_N` of a tower with maps
/// `α_n: M_n → M_{n-1}`; `maps[i]` is `α_{i+2}`.
#[derive(Clone, Debug)]
pub struct ExplicitTower {
    levels: Vec<FgAbelianGroup>,
    maps: Vec<AbelianMap>,
}

impl ExplicitTower {
    pub fn new(levels: Vec<FgAbelianGroup>, maps: Vec<AbelianMap>) -> Result<Self> {
        if maps.len() + 1 != levels.len().max(1) {
            return Err(Error::Dimension(alloc::format!("{} levels need {} maps", levels.len(), levels.len().saturating_sub(1))));
        }
        for (i, a) in maps.iter().enumerate() {
            let (src, dst) = (&levels[i + 1], &levels[i]);
            if a.source().ngens() != src.ngens() || a.source() != src || a.target().ngens() != dst.ngens() || a.target() != dst {
                return Err(Error::Dimension(alloc::format!("structure map at level {} does not match its levels", i + 2)));
            }
        }
        Ok(ExplicitTower { levels, maps })
    }

    pub fn horizon(&self) -> usize {
        self.levels.len()
    }

    /// `M_n`, `n ≥ 1`.
    pub fn level(&self, n: usize) -> &FgAbelianGroup {
        &self.levels[n - 1]
    }

    pub fn levels(&self) -> &[FgAbelianGroup] {
        &self.levels
    }

    /// `α_n: M_n → M_{n-1}`, `n ≥ 2`.
    pub fn alpha(&self, n: usize) -> &AbelianMap {
        &self.maps[n - 2]
    }

    /// `α^m_n = α_{m+1} ∘ ⋯ ∘ α_n: M_n → M_m`.
    pub fn composite(&self, n: usize, m: usize) -> Result<AbelianMap> {
        if m == 0 || m > n || n > self.horizon() {
            return Err(Error::Index(alloc::format!("composite from level {n} to level {m} (horizon {})", self.horizon())));
        }
        let mut c = AbelianMap::identity(self.level(m));
        for k in m + 1..=n {
            c = self.alpha(k).then(&c)?;
        }
        Ok(c)
    }

    pub fn truncate(&self, upto: usize) -> ExplicitTower {
        let upto = upto.min(self.horizon());
        ExplicitTower { levels: self.levels[..upto].to_vec(), maps: self.maps[..upto.saturating_sub(1)].to_vec() }
    }
}

/// Facts a generating rule proves about every level, not just the
/// materialized ones. Refutations and certified limits only come from here.
#[derive(Clone, Debug, Default)]
pub struct TowerCertificate {
    /// `α_n` is surjective for every `n ≥` this.
    pub surjective_from: Option<usize>,
    /// `α_n` is injective for every `n ≥` this.
    pub injective_from: Option<usize>,
    /// `α^m_n ≠ 0` for all `n ≥ m ≥` this.
    pub nonvanishing_from: Option<usize>,
    /// The inverse limit, when the rule determines it.
    pub limit: Option<FgAbelianGroup>,
}

/// A deterministic recipe for arbitrarily deep levels.
pub trait TowerRule: fmt::Debug + Send + Sync {
    fn name(&self) -> String;

    /// Levels `1..=upto` with their structure maps.
    fn materialize(&self, upto: usize) -> Result<ExplicitTower>;

    fn certificate(&self) -> TowerCertificate {
        TowerCertificate::default()
    }
}

#[derive(Clone, Debug)]
pub enum Realization {
    Explicit(ExplicitTower),
    Generated(Arc<dyn TowerRule>),
}

/// An inverse system `{M_n, α_n}` indexed by `n ≥ 1`.
#[derive(Clone, Debug)]
pub struct Tower {
    realization: Realization,
}

impl Tower {
    pub fn explicit(levels: Vec<FgAbelianGroup>, maps: Vec<AbelianMap>) -> Result<Self> {
        Ok(Tower { realization: Realization::Explicit(ExplicitTower::new(levels, maps)?) })
    }

    pub fn from_explicit(t: ExplicitTower) -> Self {
        Tower { realization: Realization::Explicit(t) }
    }

    pub fn generated(rule: Arc<dyn TowerRule>) -> Self {
        Tower { realization: Realization::Generated(rule) }
    }

    /// `{M, id}`.
    pub fn constant(group: FgAbelianGroup) -> Self {
        Self::generated(Arc::new(ConstantRule { group }))
    }

    /// `Z ←k Z ←k ⋯`.
    pub fn multiplication(factor: BigInt) -> Self {
        Self::generated(Arc::new(MultiplicationRule { factor }))
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    /// Number of available levels; `None` for generated towers.
    pub fn horizon(&self) -> Option<usize> {
        match &self.realization {
            Realization::Explicit(t) => Some(t.horizon()),
            Realization::Generated(_) => None,
        }
    }

    /// Levels `1..=min(upto, horizon)`.
    pub fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        match &self.realization {
            Realization::Explicit(t) => Ok(t.truncate(upto)),
            Realization::Generated(rule) => rule.materialize(upto),
        }
    }

    pub fn certificate(&self) -> TowerCertificate {
        match &self.realization {
            Realization::Explicit(_) => TowerCertificate::default(),
            Realization::Generated(rule) => rule.certificate(),
        }
    }

    pub fn describe(&self) -> String {
        match &self.realization {
            Realization::Explicit(t) => alloc::format!("explicit tower with {} levels", t.horizon()),
            Realization::Generated(rule) => rule.name(),
        }
    }
}

/// `α^m_n`, materializing only the levels it needs.
pub fn composite_map(t: &Tower, n: usize, m: usize) -> Result<AbelianMap> {
    if m == 0 || m > n {
        return Err(Error::Index(alloc::format!("composite from level {n} to level {m}")));
    }
    let levels = t.materialize(n)?;
    if levels.horizon() < n {
        return Err(Error::Horizon(levels.horizon()));
    }
    levels.composite(n, m)
}

#[derive(Clone, Debug)]
pub struct ConstantRule {
    pub group: FgAbelianGroup,
}

impl TowerRule for ConstantRule {
    fn name(&self) -> String {
        "constant".into()
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let levels = alloc::vec![self.group.clone(); upto];
        let maps = alloc::vec![AbelianMap::identity(&self.group); upto.saturating_sub(1)];
        ExplicitTower::new(levels, maps)
    }

    fn certificate(&self) -> TowerCertificate {
        TowerCertificate {
            surjective_from: Some(2),
            injective_from: Some(2),
            nonvanishing_from: (!self.group.is_trivial()).then_some(1),
            limit: Some(self.group.clone()),
        }
    }
}

/// Every level is `Z` and every map is multiplication by `factor`.
#[derive(Clone, Debug)]
pub struct MultiplicationRule {
    pub factor: BigInt,
}

impl TowerRule for MultiplicationRule {
    fn name(&self) -> String {
        alloc::format!("multiplication by {}", self.factor)
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let z = FgAbelianGroup::free(1);
        let map = AbelianMap::new(z.clone(), z.clone(), IntMatrix::from_rows(1, alloc::vec![alloc::vec![self.factor.clone()]]))?;
        ExplicitTower::new(alloc::vec![z; upto], alloc::vec![map; upto.saturating_sub(1)])
    }

    fn certificate(&self) -> TowerCertificate {
        let unit = self.factor.abs().is_one();
        let zero = self.factor.is_zero();
        TowerCertificate {
            surjective_from: unit.then_some(2),
            injective_from: (!zero).then_some(2),
            nonvanishing_from: (!zero).then_some(1),
            // ⋂ k^j Z = 0 for |k| ≥ 2; for k = 0 the limit of zero maps is 0 as well
            limit: Some(if unit { FgAbelianGroup::free(1) } else { FgAbelianGroup::trivial() }),
        }
    }
}
