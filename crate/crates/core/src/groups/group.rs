use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::bits::Bits;
use super::perm::Perm;
use super::subgroup::Subgroup;
use crate::{Error, Result};

/// Default cap on group orders.
pub const DEFAULT_ORDER_BOUND: usize = 10080;

const TABLE_LIMIT: usize = 2048;

/// A finite permutation group with its elements materialized in sorted order.
///
/// Index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    inverses: Vec<u32>,
    table: Option<Vec<u16>>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for PermGroup {}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::with_bound(degree, generators, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(degree: usize, generators: Vec<Perm>, bound: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Degree { expected: degree, found: g.degree() });
            }
        }
        let id = Perm::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    if seen.len() > bound {
                        return Err(Error::OrderBound { bound });
                    }
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        Ok(Self::from_sorted(degree, generators, elements))
    }

    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let n = elements.len();
        let index = |p: &Perm| elements.binary_search(p).expect("closed") as u32;
        let inverses = elements.iter().map(|p| index(&p.inverse())).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index(&a.compose(b)) as u16);
                }
            }
            t
        });
        PermGroup { degree, generators, elements, inverses, table }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), alloc::vec![Perm::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index_of(&self.elements[a].compose(&self.elements[b])).expect("closed"),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x a x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn pow_idx(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub(crate) fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index_of(g).expect("generator")).collect()
    }

    /// Closure of a set of element indices.
    pub(crate) fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::new(self.order());
        bits.insert(0);
        let mut list = alloc::vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if bits.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        bits
    }

    /// Smallest normal subgroup containing `gens`.
    pub(crate) fn normal_closure(&self, gens: &[usize]) -> Bits {
        let ambient = self.generator_indices();
        let mut current: Vec<usize> = gens.to_vec();
        loop {
            let bits = self.closure(&current);
            let mut grew = false;
            let members: Vec<usize> = bits.iter().collect();
            for &g in &ambient {
                for &x in &members {
                    let y = self.conj(g, x);
                    if !bits.contains(y) {
                        current.push(y);
                        grew = true;
                    }
                }
                if grew {
                    break;
                }
            }
            if !grew {
                return bits;
            }
        }
    }

    pub(crate) fn conjugate_bits(&self, x: usize, set: &Bits) -> Bits {
        let mut out = Bits::new(self.order());
        for a in set.iter() {
            out.insert(self.conj(x, a));
        }
        out
    }

    pub(crate) fn bits_of(&self, sub: &Subgroup) -> Result<Bits> {
        let mut bits = Bits::new(self.order());
        for p in sub.elements() {
            bits.insert(self.index_of(p).ok_or(Error::NotASubgroup)?);
        }
        Ok(bits)
    }

    pub(crate) fn subgroup_from_bits(&self, bits: &Bits) -> Subgroup {
        Subgroup::from_sorted(bits.iter().map(|i| self.elements[i].clone()).collect())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.elements.clone())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(alloc::vec![Perm::identity(self.degree)])
    }

    /// Subgroup generated by the given permutations, which must lie in `self`.
    pub fn subgroup_generated(&self, gens: &[Perm]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_from_bits(&self.closure(&idx)))
    }

    pub fn is_subgroup(&self, sub: &Subgroup) -> bool {
        sub.elements().iter().all(|p| self.contains(p))
    }

    pub fn is_normal(&self, sub: &Subgroup) -> Result<bool> {
        let bits = self.bits_of(sub)?;
        Ok(self
            .generator_indices()
            .into_iter()
            .all(|g| bits.iter().all(|a| bits.contains(self.conj(g, a)))))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if p < 2 {
        return n == 1;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
