use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::groups::bits::Bits;
use crate::groups::{raw_classes, PermGroup, Subgroup, SubgroupClass};
use crate::zlattice::{IntegerLattice, StructureConstants};
use crate::{Error, Result};

/// Virtual G-set in the basis `[G/H_i]` of transitive sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BurnsideElement {
    pub coeffs: Vec<BigInt>,
}

/// Values of the character maps `char_K`, one per class.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkVector {
    pub values: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        BurnsideElement { coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &BurnsideElement) -> BurnsideElement {
        BurnsideElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &BurnsideElement) -> BurnsideElement {
        BurnsideElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> BurnsideElement {
        BurnsideElement { coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }
}

/// Table of marks of a finite group.
///
/// Classes are sorted by (order, canonical key), so the matrix
/// `marks[i][j] = |(G/H_i)^{H_j}|` is lower triangular. Class 0 is the
/// trivial subgroup and the last class is `G` itself.
#[derive(Clone, Debug)]
pub struct TableOfMarks {
    group: PermGroup,
    classes: Vec<SubgroupClass>,
    class_gens: Vec<Vec<usize>>,
    lookup: BTreeMap<Bits, usize>,
    marks: Vec<i64>,
}

impl TableOfMarks {
    pub fn new(group: PermGroup) -> Self {
        let raw = raw_classes(&group);
        let n = raw.len();
        let mut lookup = BTreeMap::new();
        for (i, c) in raw.iter().enumerate() {
            for m in &c.members {
                lookup.insert(m.clone(), i);
            }
        }
        let mut marks = alloc::vec![0i64; n * n];
        for (i, hi) in raw.iter().enumerate() {
            let reps = coset_representatives(&group, &hi.rep);
            for (j, kj) in raw.iter().enumerate().take(i + 1) {
                if hi.rep.len() % kj.rep.len() != 0 {
                    continue;
                }
                // gH is K-fixed iff g⁻¹ k g ∈ H for the generators k of K
                let count = reps
                    .iter()
                    .filter(|&&g| kj.gens.iter().all(|&k| hi.rep.contains(group.conj(group.inv(g), k))))
                    .count();
                marks[i * n + j] = count as i64;
            }
        }
        let classes = raw
            .iter()
            .map(|c| SubgroupClass {
                representative: group.subgroup_from_bits(&c.rep),
                members: c.members.iter().map(|m| group.subgroup_from_bits(m)).collect(),
                order: c.rep.len(),
            })
            .collect();
        let class_gens = raw.into_iter().map(|c| c.gens).collect();
        TableOfMarks { group, classes, class_gens, lookup, marks }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `|(G/H_i)^{H_j}|`
    pub fn mark(&self, i: usize, j: usize) -> i64 {
        self.marks[i * self.len() + j]
    }

    pub fn marks_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.mark(i, j)).collect()).collect()
    }

    /// Overwrites one entry without any consistency check. Only meant for
    /// fault-injection tests of the integrality checks.
    #[doc(hidden)]
    pub fn set_mark_unchecked(&mut self, i: usize, j: usize, value: i64) {
        let n = self.len();
        self.marks[i * n + j] = value;
    }

    pub fn whole_class(&self) -> usize {
        self.len() - 1
    }

    /// `[G : H_i]`
    pub fn index(&self, i: usize) -> i64 {
        (self.group.order() / self.classes[i].order) as i64
    }

    pub(crate) fn class_generators(&self, i: usize) -> &[usize] {
        &self.class_gens[i]
    }

    pub(crate) fn class_of_bits(&self, bits: &Bits) -> Option<usize> {
        self.lookup.get(bits).copied()
    }

    /// Index of the conjugacy class containing `h`.
    pub fn class_of(&self, h: &Subgroup) -> Result<usize> {
        let bits = self.group.bits_of(h)?;
        self.class_of_bits(&bits).ok_or(Error::NotASubgroup)
    }

    pub fn zero(&self) -> BurnsideElement {
        BurnsideElement { coeffs: alloc::vec![BigInt::zero(); self.len()] }
    }

    pub fn one(&self) -> BurnsideElement {
        self.basis(self.whole_class())
    }

    /// `k·[G/G]`
    pub fn scale_one(&self, k: i64) -> BurnsideElement {
        self.one().scale(&BigInt::from(k))
    }

    /// `[G/H_i]`
    pub fn basis(&self, i: usize) -> BurnsideElement {
        let mut x = self.zero();
        x.coeffs[i] = BigInt::one();
        x
    }

    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<BurnsideElement> {
        if coeffs.len() != self.len() {
            return Err(Error::Dimension(alloc::format!("{} coefficients for {} classes", coeffs.len(), self.len())));
        }
        Ok(BurnsideElement { coeffs })
    }

    fn check(&self, x: &BurnsideElement) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::Dimension(alloc::format!("element of length {} in a ring of rank {}", x.len(), self.len())));
        }
        Ok(())
    }

    /// `char_{H_j}(x)` for every class `j`.
    pub fn marks_of(&self, x: &BurnsideElement) -> Result<MarkVector> {
        self.check(x)?;
        let n = self.len();
        let mut values = alloc::vec![BigInt::zero(); n];
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, v) in values.iter_mut().enumerate().take(i + 1) {
                let m = self.mark(i, j);
                if m != 0 {
                    *v += c * m;
                }
            }
        }
        Ok(MarkVector { values })
    }

    /// `char_{H_j}(x)`
    pub fn character(&self, x: &BurnsideElement, j: usize) -> BigInt {
        (j..self.len()).map(|i| &x.coeffs[i] * self.mark(i, j)).sum()
    }

    /// The element with the given marks; fails unless the vector lies in the
    /// image of the ghost map.
    pub fn from_marks(&self, v: &MarkVector) -> Result<BurnsideElement> {
        let n = self.len();
        if v.values.len() != n {
            return Err(Error::Dimension(alloc::format!("mark vector of length {}", v.values.len())));
        }
        let mut z = alloc::vec![BigInt::zero(); n];
        for j in (0..n).rev() {
            let mut rhs = v.values[j].clone();
            for (i, zi) in z.iter().enumerate().skip(j + 1) {
                let m = self.mark(i, j);
                if m != 0 {
                    rhs -= zi * m;
                }
            }
            let (q, r) = rhs.div_rem(&BigInt::from(self.mark(j, j)));
            if !r.is_zero() {
                return Err(Error::Integrality);
            }
            z[j] = q;
        }
        Ok(BurnsideElement { coeffs: z })
    }

    /// Product computed in the ghost ring: marks multiply componentwise.
    pub fn multiply(&self, x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement> {
        let a = self.marks_of(x)?;
        let b = self.marks_of(y)?;
        let values = a.values.iter().zip(&b.values).map(|(p, q)| p * q).collect();
        self.from_marks(&MarkVector { values })
    }

    /// Cardinality of the virtual set.
    pub fn augmentation(&self, x: &BurnsideElement) -> BigInt {
        self.character(x, 0)
    }

    /// `{[G/H_i] - [G:H_i]·1}` in Hermite normal form.
    pub fn augmentation_ideal(&self) -> IntegerLattice {
        let n = self.len();
        let gens = (0..n.saturating_sub(1))
            .map(|i| {
                let mut v = alloc::vec![BigInt::zero(); n];
                v[i] = BigInt::one();
                v[n - 1] = BigInt::from(-self.index(i));
                v
            })
            .collect();
        IntegerLattice::from_generators(n, gens)
    }

    pub fn structure_constants(&self) -> Result<StructureConstants> {
        let n = self.len();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                table.extend(self.multiply(&self.basis(i), &self.basis(j))?.coeffs);
            }
        }
        StructureConstants::new(n, table)
    }
}

/// One representative per left coset `gH`, the least index in each coset.
pub(crate) fn coset_representatives(g: &PermGroup, h: &Bits) -> Vec<usize> {
    coset_ids(g, h).1
}

/// `ids[x]` is the coset of `x`; `reps[c]` its least element.
pub(crate) fn coset_ids(g: &PermGroup, h: &Bits) -> (Vec<u32>, Vec<usize>) {
    let mut ids = alloc::vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    let hs: Vec<usize> = h.iter().collect();
    for x in 0..g.order() {
        if ids[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        for &k in &hs {
            ids[g.mul(x, k)] = c;
        }
        reps.push(x);
    }
    (ids, reps)
}
