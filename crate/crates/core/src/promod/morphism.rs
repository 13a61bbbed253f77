use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::tower::{ExplicitTower, Tower, TowerCertificate, TowerRule};
use crate::zlattice::{
    cokernel, kernel, snf_quotient, AbelianMap, FgAbelianGroup, IntMatrix, IntegerLattice, SubgroupPresentation,
};
use crate::{Error, Result};

/// Produces the component `f_n` of a generated strict morphism.
pub trait MorphismRule: fmt::Debug + Send + Sync {
    fn name(&self) -> String;
    fn component(&self, n: usize, source: &FgAbelianGroup, target: &FgAbelianGroup) -> Result<AbelianMap>;
}

#[derive(Clone, Debug)]
pub enum Components {
    /// `f_1, f_2, …` up to some horizon.
    Explicit(Vec<AbelianMap>),
    Identity,
    Zero,
    Generated(Arc<dyn MorphismRule>),
}

/// Levelwise maps `f_n: M_n → N_n` with `β_n ∘ f_n = f_{n-1} ∘ α_n`.
#[derive(Clone, Debug)]
pub struct StrictMorphism {
    source: Tower,
    target: Tower,
    components: Components,
}

/// Levels `1..=N` of a strict morphism, squares already checked.
#[derive(Clone, Debug)]
pub struct MaterializedMorphism {
    pub source: ExplicitTower,
    pub target: ExplicitTower,
    pub maps: Vec<AbelianMap>,
}

impl MaterializedMorphism {
    pub fn horizon(&self) -> usize {
        self.maps.len()
    }

    /// `f_n`
    pub fn component(&self, n: usize) -> &AbelianMap {
        &self.maps[n - 1]
    }
}

impl StrictMorphism {
    pub fn new(source: Tower, target: Tower, components: Components) -> Self {
        StrictMorphism { source, target, components }
    }

    pub fn identity(t: &Tower) -> Self {
        Self::new(t.clone(), t.clone(), Components::Identity)
    }

    pub fn zero(source: &Tower, target: &Tower) -> Self {
        Self::new(source.clone(), target.clone(), Components::Zero)
    }

    pub fn source(&self) -> &Tower {
        &self.source
    }

    pub fn target(&self) -> &Tower {
        &self.target
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    /// Materializes levels `1..=min(upto, horizons)`, failing with
    /// [`Error::NonCommutingSquare`] at the first bad square.
    pub fn materialize(&self, upto: usize) -> Result<MaterializedMorphism> {
        let src = self.source.materialize(upto)?;
        let dst = self.target.materialize(upto)?;
        let mut horizon = src.horizon().min(dst.horizon());
        if let Components::Explicit(maps) = &self.components {
            horizon = horizon.min(maps.len());
        }
        let mut maps = Vec::with_capacity(horizon);
        for n in 1..=horizon {
            let (a, b) = (src.level(n), dst.level(n));
            let f = match &self.components {
                Components::Explicit(maps) => maps[n - 1].clone(),
                Components::Identity => {
                    if a.ngens() != b.ngens() || a != b {
                        return Err(Error::Dimension(alloc::format!("identity between different groups at level {n}")));
                    }
                    AbelianMap::identity(a)
                }
                Components::Zero => AbelianMap::zero(a, b),
                Components::Generated(rule) => rule.component(n, a, b)?,
            };
            if f.source().ngens() != a.ngens() || f.target().ngens() != b.ngens() {
                return Err(Error::Dimension(alloc::format!("component {n} does not match the tower levels")));
            }
            maps.push(f);
        }
        for n in 2..=horizon {
            let down_then_f = src.alpha(n).then(&maps[n - 2])?;
            let f_then_down = maps[n - 1].then(dst.alpha(n))?;
            if !down_then_f.agrees_with(&f_then_down) {
                return Err(Error::NonCommutingSquare { level: n });
            }
        }
        Ok(MaterializedMorphism { source: src.truncate(horizon), target: dst.truncate(horizon), maps })
    }

    fn tag(&self) -> &'static str {
        match self.components {
            Components::Explicit(_) => "explicit",
            Components::Identity => "identity",
            Components::Zero => "zero",
            Components::Generated(_) => "generated",
        }
    }
}

/// `{ker f_n}` with the restricted structure maps.
pub fn kernel_tower(f: &StrictMorphism) -> Tower {
    Tower::generated(Arc::new(KernelRule { f: f.clone() }))
}

/// `{coker f_n}` with the induced structure maps.
pub fn cokernel_tower(f: &StrictMorphism) -> Tower {
    Tower::generated(Arc::new(CokernelRule { f: f.clone() }))
}

/// `{ker g_n / im f_n}`; fails on materialization if `g ∘ f ≠ 0`.
pub fn homology_tower(f: &StrictMorphism, g: &StrictMorphism) -> Tower {
    Tower::generated(Arc::new(HomologyRule { f: f.clone(), g: g.clone() }))
}

/// Coordinates of `x` (a vector of the parent) in a presented subgroup;
/// structure maps of subquotient towers land there by commutativity.
fn into_subgroup(p: &SubgroupPresentation, x: &[BigInt], level: usize) -> Result<Vec<BigInt>> {
    p.coordinates(x).ok_or(Error::NonCommutingSquare { level })
}

#[derive(Debug)]
struct KernelRule {
    f: StrictMorphism,
}

impl TowerRule for KernelRule {
    fn name(&self) -> String {
        alloc::format!("kernel of a {} morphism", self.f.tag())
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let m = self.f.materialize(upto)?;
        let kers: Vec<_> = m.maps.iter().map(kernel).collect();
        let mut maps = Vec::new();
        for n in 2..=m.horizon() {
            let (hi, lo) = (&kers[n - 1], &kers[n - 2]);
            let rows = hi
                .presentation
                .generator_vectors(m.source.level(n))
                .iter()
                .map(|v| into_subgroup(&lo.presentation, &m.source.alpha(n).apply(v), n))
                .collect::<Result<Vec<_>>>()?;
            maps.push(AbelianMap::new(hi.group.clone(), lo.group.clone(), IntMatrix::from_rows(lo.group.ngens(), rows))?);
        }
        ExplicitTower::new(kers.into_iter().map(|k| k.group).collect(), maps)
    }

    fn certificate(&self) -> TowerCertificate {
        match self.f.components {
            // the kernel of the zero morphism is the source itself
            Components::Zero => self.f.source.certificate(),
            Components::Identity => zero_tower_certificate(),
            _ => TowerCertificate::default(),
        }
    }
}

#[derive(Debug)]
struct CokernelRule {
    f: StrictMorphism,
}

impl TowerRule for CokernelRule {
    fn name(&self) -> String {
        alloc::format!("cokernel of a {} morphism", self.f.tag())
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let m = self.f.materialize(upto)?;
        let cokers: Vec<_> = m.maps.iter().map(cokernel).collect();
        let mut maps = Vec::new();
        for n in 2..=m.horizon() {
            let (hi, lo) = (&cokers[n - 1], &cokers[n - 2]);
            let rows = (0..hi.group.ngens())
                .map(|j| lo.group.from_ambient(&m.target.alpha(n).apply(&hi.group.lift(j)?)))
                .collect::<Result<Vec<_>>>()?;
            maps.push(AbelianMap::new(hi.group.clone(), lo.group.clone(), IntMatrix::from_rows(lo.group.ngens(), rows))?);
        }
        ExplicitTower::new(cokers.into_iter().map(|c| c.group).collect(), maps)
    }

    fn certificate(&self) -> TowerCertificate {
        match self.f.components {
            Components::Zero => self.f.target.certificate(),
            Components::Identity => zero_tower_certificate(),
            _ => TowerCertificate::default(),
        }
    }
}

#[derive(Debug)]
struct HomologyRule {
    f: StrictMorphism,
    g: StrictMorphism,
}

impl TowerRule for HomologyRule {
    fn name(&self) -> String {
        alloc::format!("homology of {} and {} morphisms", self.f.tag(), self.g.tag())
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let mf = self.f.materialize(upto)?;
        let mg = self.g.materialize(upto)?;
        let horizon = mf.horizon().min(mg.horizon());
        let mut levels = Vec::with_capacity(horizon);
        let mut kers = Vec::with_capacity(horizon);
        for n in 1..=horizon {
            let (f, g) = (mf.component(n), mg.component(n));
            if f.target().ngens() != g.source().ngens() {
                return Err(Error::Dimension(alloc::format!("morphisms do not compose at level {n}")));
            }
            if !f.then(g)?.is_zero() {
                return Err(Error::NonzeroComposite { level: n });
            }
            let k = kernel(g).presentation;
            // im f_n as a sublattice of ker g_n, both in M_n coordinates
            let coords = f
                .image_lattice()
                .basis_rows()
                .iter()
                .map(|v| k.lattice.coordinates(v).ok_or(Error::NonzeroComposite { level: n }))
                .collect::<Result<Vec<_>>>()?;
            let r = k.lattice.rank();
            levels.push(snf_quotient(r, &IntegerLattice::from_generators(r, coords))?);
            kers.push(k);
        }
        let mut maps = Vec::new();
        for n in 2..=horizon {
            let (hi, lo) = (&levels[n - 1], &levels[n - 2]);
            let rows = (0..hi.ngens())
                .map(|j| {
                    let v = kers[n - 1].lattice.basis().apply(&hi.lift(j)?);
                    let w = mg.source.alpha(n).matrix().apply(&v);
                    let c = kers[n - 2].lattice.coordinates(&w).ok_or(Error::NonCommutingSquare { level: n })?;
                    lo.from_ambient(&c)
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(AbelianMap::new(hi.clone(), lo.clone(), IntMatrix::from_rows(lo.ngens(), rows))?);
        }
        ExplicitTower::new(levels, maps)
    }

    fn certificate(&self) -> TowerCertificate {
        match (&self.f.components, &self.g.components) {
            (Components::Zero, Components::Zero) => self.f.target.certificate(),
            (Components::Zero, _) => KernelRule { f: self.g.clone() }.certificate(),
            (_, Components::Zero) => CokernelRule { f: self.f.clone() }.certificate(),
            _ => TowerCertificate::default(),
        }
    }
}

fn zero_tower_certificate() -> TowerCertificate {
    TowerCertificate {
        surjective_from: Some(2),
        injective_from: Some(2),
        nonvanishing_from: None,
        limit: Some(FgAbelianGroup::trivial()),
    }
}
