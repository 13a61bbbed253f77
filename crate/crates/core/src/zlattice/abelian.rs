use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::IntegerLattice;
use super::matrix::IntMatrix;
use super::normal_form::{left_kernel, smith};
use crate::{Error, Result};

/// Records how `Z^r` maps onto a quotient's generator coordinates:
/// `x ↦ (x·V)[columns]`, and generator `j` lifts to row `columns[j]` of `V⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientWitness {
    pub ambient_rank: usize,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub columns: Vec<usize>,
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`.
///
/// Generators are ordered torsion first, then free. Quotients produced by
/// [`snf_quotient`] have `d_1 | d_2 | …` and carry a [`QuotientWitness`];
/// hand-built groups may use any cyclic orders `≥ 2`. Equality compares
/// isomorphism type only.
#[derive(Clone, Debug)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
    witness: Option<Arc<QuotientWitness>>,
}

impl PartialEq for FgAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.invariant_factors() == other.invariant_factors()
    }
}
impl Eq for FgAbelianGroup {}

impl FgAbelianGroup {
    /// Direct sum of cyclic groups of the given orders (each `≥ 2`) and a free part.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if torsion.iter().any(|d| *d < BigInt::from(2)) {
            return Err(Error::Dimension("torsion orders must be at least 2".into()));
        }
        Ok(FgAbelianGroup { free_rank, torsion, witness: None })
    }

    pub fn trivial() -> Self {
        FgAbelianGroup { free_rank: 0, torsion: Vec::new(), witness: None }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, torsion: Vec::new(), witness: None }
    }

    pub fn cyclic(order: u64) -> Self {
        match order {
            0 => Self::free(1),
            1 => Self::trivial(),
            d => FgAbelianGroup { free_rank: 0, torsion: alloc::vec![BigInt::from(d)], witness: None },
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn witness(&self) -> Option<&QuotientWitness> {
        self.witness.as_deref()
    }

    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    /// Order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Canonical divisibility chain of the torsion part.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        if self.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])) {
            return self.torsion.clone();
        }
        let k = self.torsion.len();
        let mut m = IntMatrix::zeros(k, k);
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        smith(&m).diag.into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Order of generator `j`; zero for free generators.
    pub fn generator_order(&self, j: usize) -> BigInt {
        self.torsion.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Rows `d_j e_j` for the torsion generators.
    pub fn relations(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.torsion.len(), self.ngens());
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn reduce(&self, x: &mut [BigInt]) {
        for (xi, d) in x.iter_mut().zip(&self.torsion) {
            *xi = xi.mod_floor(d);
        }
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        x.iter().enumerate().all(|(j, xi)| match self.torsion.get(j) {
            Some(d) => xi.is_multiple_of(d),
            None => xi.is_zero(),
        })
    }

    /// Lattice of generator-coordinate vectors whose class lies in the
    /// subgroup generated by `gens`.
    pub fn subgroup_lattice(&self, gens: &[Vec<BigInt>]) -> IntegerLattice {
        let mut m = self.relations();
        for g in gens {
            m.push_row(g);
        }
        IntegerLattice::from_matrix(&m)
    }

    /// Image of an ambient vector under the presenting quotient map.
    pub fn from_ambient(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let w = self.witness.as_ref().ok_or_else(|| Error::Dimension("group has no quotient witness".into()))?;
        if x.len() != w.ambient_rank {
            return Err(Error::Dimension(alloc::format!("vector of length {} for ambient rank {}", x.len(), w.ambient_rank)));
        }
        let y = w.v.apply(x);
        let mut out: Vec<BigInt> = w.columns.iter().map(|&c| y[c].clone()).collect();
        self.reduce(&mut out);
        Ok(out)
    }

    /// Ambient lift of generator `j`.
    pub fn lift(&self, j: usize) -> Result<Vec<BigInt>> {
        let w = self.witness.as_ref().ok_or_else(|| Error::Dimension("group has no quotient witness".into()))?;
        Ok(w.v_inv.row(w.columns[j]).to_vec())
    }
}

/// `Z^ambient_rank / sub` in Smith normal form, with its witness.
pub fn snf_quotient(ambient_rank: usize, sub: &IntegerLattice) -> Result<FgAbelianGroup> {
    if sub.ambient_rank() != ambient_rank {
        return Err(Error::Dimension(alloc::format!(
            "sublattice of Z^{} in Z^{}",
            sub.ambient_rank(),
            ambient_rank
        )));
    }
    let s = smith(sub.basis());
    let k = sub.rank();
    let mut torsion = Vec::new();
    let mut columns = Vec::new();
    for (i, d) in s.diag.iter().enumerate().take(k) {
        if !d.is_one() {
            torsion.push(d.clone());
            columns.push(i);
        }
    }
    let free_rank = ambient_rank - k;
    columns.extend(k..ambient_rank);
    let witness = QuotientWitness { ambient_rank, v: s.v, v_inv: s.v_inv, columns };
    Ok(FgAbelianGroup { free_rank, torsion, witness: Some(Arc::new(witness)) })
}

/// Homomorphism in generator coordinates: row `i` of `matrix` is the image
/// of source generator `i`.
#[derive(Clone, Debug)]
pub struct AbelianMap {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl AbelianMap {
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, mut matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != source.ngens() || matrix.cols() != target.ngens() {
            return Err(Error::Dimension(alloc::format!(
                "{}x{} matrix for a map with {} source and {} target generators",
                matrix.rows(),
                matrix.cols(),
                source.ngens(),
                target.ngens()
            )));
        }
        for (i, d) in source.torsion.iter().enumerate() {
            let scaled: Vec<BigInt> = matrix.row(i).iter().map(|x| x * d).collect();
            if !target.is_zero_element(&scaled) {
                return Err(Error::Dimension(alloc::format!("generator {i} of order {d} maps to an element of larger order")));
            }
        }
        for i in 0..matrix.rows() {
            target.reduce(matrix.row_mut(i));
        }
        Ok(AbelianMap { source, target, matrix })
    }

    pub fn identity(g: &FgAbelianGroup) -> Self {
        AbelianMap { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.ngens()) }
    }

    pub fn zero(source: &FgAbelianGroup, target: &FgAbelianGroup) -> Self {
        AbelianMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(source.ngens(), target.ngens()),
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.matrix.apply(x);
        self.target.reduce(&mut y);
        y
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AbelianMap) -> Result<AbelianMap> {
        if self.target.ngens() != next.source.ngens() {
            return Err(Error::Dimension("composable maps must share a group".into()));
        }
        let mut m = self.matrix.mul(&next.matrix);
        for i in 0..m.rows() {
            next.target.reduce(m.row_mut(i));
        }
        Ok(AbelianMap { source: self.source.clone(), target: next.target.clone(), matrix: m })
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.rows()).all(|i| self.target.is_zero_element(self.matrix.row(i)))
    }

    pub fn agrees_with(&self, other: &AbelianMap) -> bool {
        self.matrix.rows() == other.matrix.rows()
            && self.matrix.cols() == other.matrix.cols()
            && (0..self.matrix.rows()).all(|i| {
                let d: Vec<BigInt> = self.matrix.row(i).iter().zip(other.matrix.row(i)).map(|(a, b)| a - b).collect();
                self.target.is_zero_element(&d)
            })
    }

    /// Lattice of target coordinates lying in the image.
    pub fn image_lattice(&self) -> IntegerLattice {
        self.target.subgroup_lattice(&self.matrix.row_vecs())
    }

    pub fn image_of(&self, gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        gens.iter().map(|g| self.apply(g)).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_lattice() == IntegerLattice::full(self.target.ngens())
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).group.is_trivial()
    }
}

/// A subgroup `S` of a group `P`, presented abstractly.
///
/// `lattice` is the preimage of `S` in `P`'s generator coordinates (it
/// contains `P`'s relations); `group` is `lattice / relations` in Smith form.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub lattice: IntegerLattice,
    pub group: FgAbelianGroup,
}

impl SubgroupPresentation {
    pub fn new(parent: &FgAbelianGroup, gens: &[Vec<BigInt>]) -> Result<Self> {
        let lattice = parent.subgroup_lattice(gens);
        let rels = parent.relations();
        let coords = (0..rels.rows())
            .map(|i| lattice.coordinates(rels.row(i)).expect("relations lie in the lattice"))
            .collect();
        let l = lattice.rank();
        let group = snf_quotient(l, &IntegerLattice::from_generators(l, coords))?;
        Ok(SubgroupPresentation { lattice, group })
    }

    /// Coordinates in `group` of an element of the parent, if it lies in `S`.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.lattice.coordinates(x)?;
        self.group.from_ambient(&c).ok()
    }

    /// Parent coordinates of the generators of `group`.
    pub fn generator_vectors(&self, parent: &FgAbelianGroup) -> Vec<Vec<BigInt>> {
        (0..self.group.ngens())
            .map(|j| {
                let lift = self.group.lift(j).expect("presented group has a witness");
                let mut v = self.lattice.basis().apply(&lift);
                parent.reduce(&mut v);
                v
            })
            .collect()
    }

    pub fn inclusion(&self, parent: &FgAbelianGroup) -> AbelianMap {
        let rows = self.generator_vectors(parent);
        AbelianMap::new(self.group.clone(), parent.clone(), IntMatrix::from_rows(parent.ngens(), rows))
            .expect("inclusion is well formed")
    }
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub group: FgAbelianGroup,
    pub inclusion: AbelianMap,
    pub presentation: SubgroupPresentation,
}

#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FgAbelianGroup,
    pub projection: AbelianMap,
}

pub fn kernel(f: &AbelianMap) -> Kernel {
    let a = f.source.ngens();
    let rb = f.target.relations();
    let mut stacked = f.matrix.clone();
    for i in 0..rb.rows() {
        stacked.push_row(rb.row(i));
    }
    let k = left_kernel(&stacked);
    let gens: Vec<Vec<BigInt>> = (0..k.rows()).map(|i| k.row(i)[..a].to_vec()).collect();
    let presentation = SubgroupPresentation::new(&f.source, &gens).expect("kernel presentation");
    Kernel {
        group: presentation.group.clone(),
        inclusion: presentation.inclusion(&f.source),
        presentation,
    }
}

pub fn cokernel(f: &AbelianMap) -> Cokernel {
    let b = f.target.ngens();
    let lattice = f.image_lattice();
    let group = snf_quotient(b, &lattice).expect("same ambient rank");
    let rows = (0..b)
        .map(|j| {
            let mut e = alloc::vec![BigInt::zero(); b];
            e[j] = BigInt::one();
            group.from_ambient(&e).expect("witness present")
        })
        .collect();
    let projection =
        AbelianMap::new(f.target.clone(), group.clone(), IntMatrix::from_rows(group.ngens(), rows)).expect("projection");
    Cokernel { group, projection }
}

pub fn kernel_cokernel(f: &AbelianMap) -> (Kernel, Cokernel) {
    (kernel(f), cokernel(f))
}
