use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::marks::{coset_ids, BurnsideElement, MarkVector, TableOfMarks};
use crate::groups::bits::Bits;
use crate::groups::{PermGroup, Subgroup};
use crate::{Error, Result};

/// A finite G-set on points `0..size`, stored as a full action table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GSet {
    order: usize,
    size: usize,
    action: Vec<u32>,
}

impl GSet {
    /// `act(g, x)` gives the image of point `x` under element index `g`.
    /// The table is checked to be an action.
    pub fn new(group: &PermGroup, size: usize, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = group.order();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for x in 0..size {
                let y = act(g, x);
                if y >= size {
                    return Err(Error::Index(alloc::format!("point {y} outside a set of size {size}")));
                }
                action.push(y as u32);
            }
        }
        let set = GSet { order: n, size, action };
        for g in 0..n {
            for h in 0..n {
                for x in 0..size {
                    if set.act(group.mul(g, h), x) != set.act(g, set.act(h, x)) {
                        return Err(Error::NotAHomomorphism("table is not a group action".into()));
                    }
                }
            }
        }
        Ok(set)
    }

    /// `G/H` with left multiplication; returns the set and a representative
    /// element index per coset.
    pub fn cosets(group: &PermGroup, h: &Subgroup) -> Result<(GSet, Vec<usize>)> {
        let bits = group.bits_of(h)?;
        Ok(Self::coset_set(group, &bits))
    }

    pub(crate) fn coset_set(group: &PermGroup, h: &Bits) -> (GSet, Vec<usize>) {
        Self::coset_set_along(group, h, group.order(), |g| g)
    }

    /// `G/H` viewed as a set under a source group acting through `alpha`.
    pub(crate) fn coset_set_along(
        group: &PermGroup,
        h: &Bits,
        source_order: usize,
        alpha: impl Fn(usize) -> usize,
    ) -> (GSet, Vec<usize>) {
        let (ids, reps) = coset_ids(group, h);
        let size = reps.len();
        let mut action = Vec::with_capacity(source_order * size);
        for s in 0..source_order {
            let g = alpha(s);
            action.extend(reps.iter().map(|&r| ids[group.mul(g, r)]));
        }
        (GSet { order: source_order, size, action }, reps)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    /// Cartesian product with the diagonal action.
    pub fn product(&self, other: &GSet) -> GSet {
        let size = self.size * other.size;
        let mut action = Vec::with_capacity(self.order * size);
        for g in 0..self.order {
            for x in 0..self.size {
                for y in 0..other.size {
                    action.push((self.act(g, x) * other.size + other.act(g, y)) as u32);
                }
            }
        }
        GSet { order: self.order, size, action }
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        let size = self.size + other.size;
        let mut action = Vec::with_capacity(self.order * size);
        for g in 0..self.order {
            action.extend((0..self.size).map(|x| self.act(g, x) as u32));
            action.extend((0..other.size).map(|y| (self.size + other.act(g, y)) as u32));
        }
        GSet { order: self.order, size, action }
    }

    fn stabilizer(&self, x: usize) -> Bits {
        let mut bits = Bits::new(self.order);
        for g in 0..self.order {
            if self.act(g, x) == x {
                bits.insert(g);
            }
        }
        bits
    }

    /// Orbit decomposition: the coefficient of `[G/H_i]` counts the orbits
    /// whose stabilizers lie in class `i`.
    pub fn decompose(&self, tom: &TableOfMarks) -> Result<BurnsideElement> {
        let group = tom.group();
        if group.order() != self.order {
            return Err(Error::Dimension("G-set over a different group".into()));
        }
        let gens = group.generator_indices();
        let mut seen = alloc::vec![false; self.size];
        let mut x = tom.zero();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = alloc::vec![start];
            while let Some(p) = stack.pop() {
                for &g in &gens {
                    let q = self.act(g, p);
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
            let class = tom.class_of_bits(&self.stabilizer(start)).ok_or(Error::NotASubgroup)?;
            x.coeffs[class] += BigInt::one();
        }
        Ok(x)
    }

    /// Fixed-point counts for each class representative.
    pub fn marks(&self, tom: &TableOfMarks) -> MarkVector {
        let values = (0..tom.len())
            .map(|j| {
                let gens = tom.class_generators(j);
                let fixed = (0..self.size).filter(|&x| gens.iter().all(|&k| self.act(k, x) == x)).count();
                BigInt::from(fixed)
            })
            .collect();
        MarkVector { values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_group;

    #[test]
    fn coset_sets_decompose_to_basis() {
        let g = parse_group("S3").unwrap();
        let tom = TableOfMarks::new(g.clone());
        for (i, c) in tom.classes().iter().enumerate() {
            let (set, reps) = GSet::cosets(&g, &c.representative).unwrap();
            assert_eq!(reps.len(), set.size());
            assert_eq!(set.decompose(&tom).unwrap(), tom.basis(i));
            assert_eq!(set.marks(&tom), tom.marks_of(&tom.basis(i)).unwrap());
        }
    }

    #[test]
    fn products_match_ghost_multiplication() {
        let g = parse_group("D8").unwrap();
        let tom = TableOfMarks::new(g.clone());
        let sets: Vec<_> = tom.classes().iter().map(|c| GSet::cosets(&g, &c.representative).unwrap().0).collect();
        for i in 0..tom.len() {
            for j in 0..tom.len() {
                let direct = sets[i].product(&sets[j]).decompose(&tom).unwrap();
                assert_eq!(direct, tom.multiply(&tom.basis(i), &tom.basis(j)).unwrap());
            }
        }
        let u = sets[1].disjoint_union(&sets[2]).decompose(&tom).unwrap();
        assert_eq!(u, tom.basis(1).add(&tom.basis(2)));
    }

    #[test]
    fn rejects_non_actions() {
        let g = parse_group("C3").unwrap();
        assert!(GSet::new(&g, 2, |gi, x| if gi == 0 { x } else { 1 - x }).is_err());
        assert!(GSet::new(&g, 3, |gi, x| (x + gi) % 3).is_ok());
    }
}
