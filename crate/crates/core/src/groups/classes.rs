use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::bits::Bits;
use super::group::PermGroup;
use super::subgroup::Subgroup;
use crate::{Error, Result};

/// A conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    /// All conjugates, sorted by canonical key; `members[0]` is the representative.
    pub members: Vec<Subgroup>,
    pub order: usize,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Clone, Debug)]
pub(crate) struct RawClass {
    pub rep: Bits,
    pub gens: Vec<usize>,
    pub members: Vec<Bits>,
}

/// Conjugacy classes of subgroups by cyclic extension, sorted by
/// (order, canonical key).
pub(crate) fn raw_classes(g: &PermGroup) -> Vec<RawClass> {
    let n = g.order();
    let mut cyclic: BTreeMap<Bits, usize> = BTreeMap::new();
    for x in 0..n {
        cyclic.entry(g.closure(&[x])).or_insert(x);
    }
    let cyclic: Vec<(Bits, usize)> = cyclic.into_iter().collect();

    let mut known: BTreeSet<Bits> = BTreeSet::new();
    let mut classes: Vec<RawClass> = Vec::new();
    let trivial = g.closure(&[]);
    classes.push(conjugacy_class(g, trivial, Vec::new(), &mut known));
    let mut queue = VecDeque::from([0usize]);
    while let Some(ci) = queue.pop_front() {
        let (rep, gens) = (classes[ci].rep.clone(), classes[ci].gens.clone());
        for (cbits, c) in &cyclic {
            if cbits.is_subset(&rep) {
                continue;
            }
            let mut ext = gens.clone();
            ext.push(*c);
            let k = g.closure(&ext);
            if known.contains(&k) {
                continue;
            }
            classes.push(conjugacy_class(g, k, ext, &mut known));
            queue.push_back(classes.len() - 1);
        }
    }
    classes.sort_by(|a, b| a.rep.len().cmp(&b.rep.len()).then_with(|| a.rep.key_cmp(&b.rep)));
    classes
}

fn conjugacy_class(g: &PermGroup, k: Bits, gens: Vec<usize>, known: &mut BTreeSet<Bits>) -> RawClass {
    let mut members: BTreeMap<Bits, usize> = BTreeMap::new();
    for x in 0..g.order() {
        members.entry(g.conjugate_bits(x, &k)).or_insert(x);
    }
    let mut members: Vec<(Bits, usize)> = members.into_iter().collect();
    members.sort_by(|a, b| a.0.key_cmp(&b.0));
    let (rep, x) = members[0].clone();
    let gens = gens.iter().map(|&s| g.conj(x, s)).collect();
    let members: Vec<Bits> = members.into_iter().map(|(b, _)| b).collect();
    known.extend(members.iter().cloned());
    RawClass { rep, gens, members }
}

pub fn all_subgroup_classes(g: &PermGroup) -> Vec<SubgroupClass> {
    raw_classes(g)
        .iter()
        .map(|c| SubgroupClass {
            representative: g.subgroup_from_bits(&c.rep),
            members: c.members.iter().map(|m| g.subgroup_from_bits(m)).collect(),
            order: c.rep.len(),
        })
        .collect()
}

/// Whether some `x ∈ g` has `x h1 x⁻¹ = h2`.
pub fn is_conjugate(g: &PermGroup, h1: &Subgroup, h2: &Subgroup) -> Result<bool> {
    let a = g.bits_of(h1)?;
    let b = g.bits_of(h2)?;
    if !is_closed(g, &a) || !is_closed(g, &b) {
        return Err(Error::NotASubgroup);
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok((0..g.order()).any(|x| a.iter().all(|k| b.contains(g.conj(x, k)))))
}

pub(crate) fn is_closed(g: &PermGroup, set: &Bits) -> bool {
    set.contains(0) && set.iter().all(|a| set.iter().all(|b| set.contains(g.mul(a, b))))
}

pub(crate) fn least_conjugate(g: &PermGroup, k: &Bits) -> Bits {
    (0..g.order())
        .map(|x| g.conjugate_bits(x, k))
        .min_by(|a, b| a.key_cmp(b))
        .expect("nonempty group")
}
