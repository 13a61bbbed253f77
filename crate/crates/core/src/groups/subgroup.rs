use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::group::PermGroup;
use super::perm::Perm;

/// A subgroup given by its sorted element list.
///
/// The sorted list doubles as the canonical key: subgroups compare
/// lexicographically on it, which is how class representatives are chosen.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subgroup {
    elements: Vec<Perm>,
}

impl Subgroup {
    pub(crate) fn from_sorted(elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    /// Greedy generating set: walk the sorted elements, keep any that is not
    /// yet generated.
    pub fn small_generators(&self) -> Vec<Perm> {
        let mut span: BTreeSet<Perm> = BTreeSet::new();
        span.insert(Perm::identity(self.degree()));
        let mut gens: Vec<Perm> = Vec::new();
        for e in &self.elements {
            if span.contains(e) {
                continue;
            }
            gens.push(e.clone());
            let mut list: Vec<Perm> = span.iter().cloned().collect();
            let mut i = 0;
            while i < list.len() {
                for g in &gens {
                    let y = list[i].compose(g);
                    if span.insert(y.clone()) {
                        list.push(y);
                    }
                }
                i += 1;
            }
            if span.len() == self.elements.len() {
                break;
            }
        }
        gens
    }

    /// The subgroup as a group in its own right (same points, same permutations).
    pub fn to_group(&self) -> PermGroup {
        PermGroup::with_bound(self.degree(), self.small_generators(), self.order())
            .expect("subgroup closure stays inside the subgroup")
    }

    /// `x K x⁻¹`
    pub fn conjugate_by(&self, x: &Perm) -> Subgroup {
        let xi = x.inverse();
        let mut els: Vec<Perm> = self.elements.iter().map(|k| x.compose(k).compose(&xi)).collect();
        els.sort();
        Subgroup { elements: els }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().filter(|p| other.contains(p)).cloned().collect(),
        }
    }
}
