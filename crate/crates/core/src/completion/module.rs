use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ideal::IdealTower;
use crate::promod::{Components, ExplicitTower, MorphismRule, StrictMorphism, Tower, TowerCertificate, TowerRule};
use crate::zlattice::{snf_quotient, AbelianMap, FgAbelianGroup, IntMatrix, IntegerLattice, StructureConstants};
use crate::{Error, Result};

/// A finitely generated module `L / L₀` over a ring `A` free over `Z`,
/// with `L₀ ⊆ L ⊆ A^k` submodules of the free module of `copies = k`
/// copies of `A` (coordinates concatenated).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingModule {
    ring_rank: usize,
    copies: usize,
    generators: IntegerLattice,
    relations: IntegerLattice,
}

impl RingModule {
    /// `A` itself.
    pub fn ring(ring_rank: usize) -> Self {
        Self::free(ring_rank, 1)
    }

    /// `A^copies`.
    pub fn free(ring_rank: usize, copies: usize) -> Self {
        let n = ring_rank * copies;
        RingModule { ring_rank, copies, generators: IntegerLattice::full(n), relations: IntegerLattice::zero(n) }
    }

    /// `L / L₀` for submodules of `A^copies`, both checked for closure
    /// under `A` and `L₀ ⊆ L`.
    pub fn new(
        constants: &StructureConstants,
        copies: usize,
        generators: IntegerLattice,
        relations: IntegerLattice,
    ) -> Result<Self> {
        let n = constants.rank() * copies;
        if generators.ambient_rank() != n || relations.ambient_rank() != n {
            return Err(Error::Dimension(alloc::format!("module lattices must live in Z^{n}")));
        }
        let m = RingModule { ring_rank: constants.rank(), copies, generators, relations };
        for (lattice, what) in [(&m.generators, "generators"), (&m.relations, "relations")] {
            if !m.is_submodule(constants, lattice) {
                return Err(Error::Module(alloc::format!("{what} are not closed under the ring action")));
            }
        }
        if !m.generators.contains_lattice(&m.relations) {
            return Err(Error::Module("relations are not contained in the generators".into()));
        }
        Ok(m)
    }

    /// The ideal `I ⊆ A` as a module.
    pub fn ideal(constants: &StructureConstants, ideal: &IntegerLattice) -> Result<Self> {
        Self::new(constants, 1, ideal.clone(), IntegerLattice::zero(constants.rank()))
    }

    /// `A / I`.
    pub fn quotient(constants: &StructureConstants, ideal: &IntegerLattice) -> Result<Self> {
        Self::new(constants, 1, IntegerLattice::full(constants.rank()), ideal.clone())
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn generators(&self) -> &IntegerLattice {
        &self.generators
    }

    pub fn relations(&self) -> &IntegerLattice {
        &self.relations
    }

    /// Rank of the ambient lattice `Z^{k·rank A}`.
    pub fn ambient(&self) -> usize {
        self.ring_rank * self.copies
    }

    /// `a·x` for `a ∈ A`, `x ∈ A^k` (componentwise).
    pub fn act(&self, constants: &StructureConstants, a: &[BigInt], x: &[BigInt]) -> Vec<BigInt> {
        x.chunks(self.ring_rank).flat_map(|c| constants.mul(a, c)).collect()
    }

    fn is_submodule(&self, constants: &StructureConstants, lattice: &IntegerLattice) -> bool {
        lattice.basis_rows().iter().all(|x| {
            (0..self.ring_rank).all(|i| lattice.contains(&self.act(constants, &unit(self.ring_rank, i), x)))
        })
    }

    pub(crate) fn check_ring(&self, rank: usize) -> Result<()> {
        if rank != self.ring_rank {
            return Err(Error::Dimension(alloc::format!("module over a ring of rank {} used with rank {rank}", self.ring_rank)));
        }
        Ok(())
    }

    /// `J·L` for an ideal lattice `J`.
    fn scaled_by(&self, constants: &StructureConstants, j: &IntegerLattice) -> IntegerLattice {
        let mut m = IntMatrix::zeros(0, self.ambient());
        for a in j.basis_rows() {
            for x in self.generators.basis_rows() {
                m.push_row(&self.act(constants, &a, &x));
            }
        }
        IntegerLattice::from_matrix(&m)
    }

    /// `L / (L₀ + J·L)` in the coordinates of the basis of `L`.
    pub fn quotient_by(&self, constants: &StructureConstants, j: &IntegerLattice) -> Result<FgAbelianGroup> {
        let sub = self.relations.sum(&self.scaled_by(constants, j))?;
        let coords = sub
            .basis_rows()
            .iter()
            .map(|v| self.generators.coordinates(v).expect("submodule of the generators"))
            .collect();
        let r = self.generators.rank();
        snf_quotient(r, &IntegerLattice::from_generators(r, coords))
    }

    pub(crate) fn adic_tower(&self, ideal: &IdealTower) -> Tower {
        Tower::generated(Arc::new(AdicRule { ideal: ideal.clone(), module: self.clone() }))
    }

    /// Ambient vector of generator `j` of a level group.
    fn lift(&self, level: &FgAbelianGroup, j: usize) -> Result<Vec<BigInt>> {
        Ok(self.generators.basis().apply(&level.lift(j)?))
    }

    /// Level-group coordinates of an ambient vector of `L`.
    fn project(&self, level: &FgAbelianGroup, x: &[BigInt], what: &str) -> Result<Vec<BigInt>> {
        let c = self
            .generators
            .coordinates(x)
            .ok_or_else(|| Error::Module(alloc::format!("{what} leaves the generator lattice")))?;
        level.from_ambient(&c)
    }
}

fn unit(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = alloc::vec![BigInt::zero(); n];
    v[j] = BigInt::one();
    v
}

/// `{M / I^n M}` with the quotient surjections.
#[derive(Debug)]
struct AdicRule {
    ideal: IdealTower,
    module: RingModule,
}

impl TowerRule for AdicRule {
    fn name(&self) -> String {
        "I-adic quotient tower".into()
    }

    fn materialize(&self, upto: usize) -> Result<ExplicitTower> {
        let powers = self.ideal.powers_up_to(upto)?;
        let levels = powers
            .iter()
            .map(|p| self.module.quotient_by(self.ideal.constants(), p))
            .collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::new();
        for n in 2..=levels.len() {
            let (hi, lo) = (&levels[n - 1], &levels[n - 2]);
            let rows = (0..hi.ngens())
                .map(|j| self.module.project(lo, &self.module.lift(hi, j)?, "quotient map"))
                .collect::<Result<Vec<_>>>()?;
            maps.push(AbelianMap::new(hi.clone(), lo.clone(), IntMatrix::from_rows(lo.ngens(), rows))?);
        }
        ExplicitTower::new(levels, maps)
    }

    fn certificate(&self) -> TowerCertificate {
        let m = &self.module;
        // I·L ⊆ L₀ makes every level L/L₀ and every map the identity
        let constant = m
            .relations
            .contains_lattice(&m.scaled_by(self.ideal.constants(), self.ideal.ideal()));
        let limit = constant
            .then(|| m.quotient_by(self.ideal.constants(), self.ideal.ideal()).ok())
            .flatten();
        TowerCertificate {
            surjective_from: Some(2),
            injective_from: constant.then_some(2),
            nonvanishing_from: None,
            limit,
        }
    }
}

/// An `A`-linear map `A^k → A^l` (row convention `x ↦ x·matrix`) carrying
/// `L` into `L'` and `L₀` into `L₀'`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: RingModule,
    target: RingModule,
    matrix: IntMatrix,
}

impl ModuleMap {
    pub fn new(constants: &StructureConstants, source: RingModule, target: RingModule, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != source.ambient() || matrix.cols() != target.ambient() {
            return Err(Error::Dimension("module map matrix has the wrong shape".into()));
        }
        for x in source.generators.basis_rows() {
            let y = matrix.apply(&x);
            if !target.generators.contains(&y) {
                return Err(Error::Module("map does not send generators into generators".into()));
            }
            for i in 0..source.ring_rank {
                let e = unit(source.ring_rank, i);
                if matrix.apply(&source.act(constants, &e, &x)) != target.act(constants, &e, &y) {
                    return Err(Error::Module("map is not linear over the ring".into()));
                }
            }
        }
        if !source.relations.basis_rows().iter().all(|x| target.relations.contains(&matrix.apply(x))) {
            return Err(Error::Module("map does not send relations into relations".into()));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn identity(m: &RingModule) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: IntMatrix::identity(m.ambient()) }
    }

    pub fn source(&self) -> &RingModule {
        &self.source
    }

    pub fn target(&self) -> &RingModule {
        &self.target
    }

    /// The induced map `{M / I^n M} → {N / J^n N}`; requires `I^n M ↦ J^n N`,
    /// which the component construction checks level by level.
    pub fn adic_morphism(&self, source_ideal: &IdealTower, target_ideal: &IdealTower) -> Result<StrictMorphism> {
        let source = source_ideal.quotient_tower(&self.source)?;
        let target = target_ideal.quotient_tower(&self.target)?;
        Ok(StrictMorphism::new(source, target, Components::Generated(Arc::new(self.clone()))))
    }
}

impl MorphismRule for ModuleMap {
    fn name(&self) -> String {
        "induced module map".into()
    }

    fn component(&self, _n: usize, source: &FgAbelianGroup, target: &FgAbelianGroup) -> Result<AbelianMap> {
        let rows = (0..source.ngens())
            .map(|j| {
                let x = self.source.lift(source, j)?;
                self.target.project(target, &self.matrix.apply(&x), "module map")
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianMap::new(source.clone(), target.clone(), IntMatrix::from_rows(target.ngens(), rows))
            .map_err(|_| Error::Module("map does not descend to the quotients".into()))
    }
}
