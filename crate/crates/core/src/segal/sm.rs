//! The compatible families `[[S_m]]` and `[[S_m/Syl_p(S_m)]]`.
//!
//! For an object `K` with `|K|` dividing `m`, pick a free `K`-set `S` of
//! size `m` (here `m/|K|` copies of `K`, point `c·|K| + e`) and a bijection
//! `u: S → {0..m-1}`. Then `ρ_u(h) = u ∘ l_h ∘ u⁻¹` embeds `K` in `S_m`,
//! and `K` acts on `S_m` and on `S_m/Syl_p(S_m)` by left composition.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::diagram::PreparedDiagram;
use super::limit::CompatibleFamily;
use super::symmetric::{all_permutations, centralizer_order, factorial, rank, symmetric_sylow};
use crate::burnside::{BurnsideElement, GSet, MarkVector, TableOfMarks};
use crate::groups::{Perm, PermGroup};
use crate::{Error, Result};

pub const DEFAULT_DEGREE_BOUND: u64 = 8;
pub const DEFAULT_COSET_BOUND: u64 = 1_000_000;
/// Largest `m` for which [`BuildPath::Auto`] enumerates `S_m` directly.
pub const AUTO_ENUMERATION_LIMIT: u64 = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuildPath {
    /// Enumerate for `m ≤ 5`, shortcut otherwise.
    Auto,
    /// Build the `K`-set on `S_m` (or on its cosets) and decompose orbits.
    Enumerate,
    /// Freeness for `S_m`; mark formulas for the coset space.
    Shortcut,
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub degree_bound: u64,
    pub coset_bound: u64,
    pub path: BuildPath,
    /// The bijection `u` as a permutation of `0..m`; identity when absent.
    pub bijection: Option<Vec<u32>>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            degree_bound: DEFAULT_DEGREE_BOUND,
            coset_bound: DEFAULT_COSET_BOUND,
            path: BuildPath::Auto,
            bijection: None,
        }
    }
}

impl BuildOptions {
    pub fn with_path(path: BuildPath) -> Self {
        BuildOptions { path, ..Self::default() }
    }

    pub fn with_degree_bound(bound: u64) -> Self {
        BuildOptions { degree_bound: bound, ..Self::default() }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmVariant {
    Full,
    ModSylow(u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmElement {
    pub m: u64,
    pub variant: SmVariant,
    /// `|S_m|` or `|S_m/Syl_p(S_m)|`.
    pub cardinality: BigInt,
    pub family: CompatibleFamily,
}

impl SmElement {
    /// `[[X]] − |X|·1`, which lies in the limit of augmentation ideals.
    pub fn shifted(&self, d: &PreparedDiagram) -> CompatibleFamily {
        let components = self
            .family
            .components
            .iter()
            .zip(&d.toms)
            .map(|(x, t)| x.sub(&t.one().scale(&self.cardinality)))
            .collect();
        CompatibleFamily { components }
    }
}

pub fn build_sm(d: &PreparedDiagram, m: u64, opts: &BuildOptions) -> Result<SmElement> {
    build(d, m, SmVariant::Full, opts)
}

pub fn build_sm_mod_sylow(d: &PreparedDiagram, m: u64, p: u64, opts: &BuildOptions) -> Result<SmElement> {
    build(d, m, SmVariant::ModSylow(p), opts)
}

fn build(d: &PreparedDiagram, m: u64, variant: SmVariant, opts: &BuildOptions) -> Result<SmElement> {
    if m == 0 || d.objects().iter().any(|g| m % g.order() as u64 != 0) {
        return Err(Error::NotCommonMultiple { m });
    }
    if m > opts.degree_bound {
        return Err(Error::DegreeBound { m, bound: opts.degree_bound });
    }
    let u = match &opts.bijection {
        Some(u) => {
            let p = Perm::new(u.clone())?;
            if p.degree() != m as usize {
                return Err(Error::Degree { expected: m as usize, found: p.degree() });
            }
            p
        }
        None => Perm::identity(m as usize),
    };
    let sylow = match variant {
        SmVariant::Full => None,
        SmVariant::ModSylow(p) => Some(symmetric_sylow(m as usize, p)?),
    };
    let cardinality = match &sylow {
        None => factorial(m),
        Some(s) => factorial(m) / s.order(),
    };
    let enumerate = match opts.path {
        BuildPath::Auto => m <= AUTO_ENUMERATION_LIMIT,
        BuildPath::Enumerate => true,
        BuildPath::Shortcut => false,
    };
    let components = d
        .toms
        .iter()
        .map(|tom| {
            let rho = regular_embedding(tom.group(), m as usize, &u);
            match (&sylow, enumerate) {
                (None, true) => enumerate_full(tom, &rho, opts.coset_bound),
                (None, false) => Ok(free_shortcut(tom, m)),
                (Some(s), true) => enumerate_cosets(tom, &rho, s, opts.coset_bound),
                (Some(s), false) => coset_marks(tom, &rho, s, opts.coset_bound).and_then(|v| tom.from_marks(&v)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SmElement { m, variant, cardinality, family: CompatibleFamily { components } })
}

/// `ρ_u(h)` for every element index `h` of `k`.
pub fn regular_embedding(k: &PermGroup, m: usize, u: &Perm) -> Vec<Perm> {
    let n = k.order();
    (0..n)
        .map(|h| {
            let mut images = alloc::vec![0u32; m];
            for s in 0..m {
                let (c, e) = (s / n, s % n);
                images[u.apply(s)] = u.apply(c * n + k.mul(h, e)) as u32;
            }
            Perm::new(images).expect("bijection")
        })
        .collect()
}

fn enumeration_size(m: usize, bound: u64) -> Result<usize> {
    let n = factorial(m as u64);
    match n.to_u64() {
        Some(c) if c <= bound => Ok(c as usize),
        _ => Err(Error::CosetBound { cosets: n.to_u64().unwrap_or(u64::MAX), bound }),
    }
}

fn enumerate_full(tom: &TableOfMarks, rho: &[Perm], bound: u64) -> Result<BurnsideElement> {
    let m = rho[0].degree();
    enumeration_size(m, bound)?;
    let perms = all_permutations(m);
    let set = GSet::new(tom.group(), perms.len(), |h, x| rank(compose(&rho[h], &perms[x]).as_slice()))?;
    set.decompose(tom)
}

/// A free action with `m!` points is `(m!/|K|)·[K/1]`.
fn free_shortcut(tom: &TableOfMarks, m: u64) -> BurnsideElement {
    let mut x = tom.zero();
    x.coeffs[0] = factorial(m) / tom.group().order();
    x
}

fn compose(a: &Perm, images: &[u32]) -> Vec<u32> {
    images.iter().map(|&y| a.apply(y as usize) as u32).collect()
}

fn enumerate_cosets(tom: &TableOfMarks, rho: &[Perm], sylow: &PermGroup, bound: u64) -> Result<BurnsideElement> {
    let m = rho[0].degree();
    enumeration_size(m, bound)?;
    let perms = all_permutations(m);
    const NONE: u32 = u32::MAX;
    let mut coset = alloc::vec![NONE; perms.len()];
    let mut count = 0u32;
    for r in 0..perms.len() {
        if coset[r] != NONE {
            continue;
        }
        for x in sylow.elements() {
            let images: Vec<u32> = x.images().iter().map(|&y| perms[r][y as usize]).collect();
            coset[rank(&images)] = count;
        }
        count += 1;
    }
    let mut reps = alloc::vec![0usize; count as usize];
    for (r, &c) in coset.iter().enumerate().rev() {
        reps[c as usize] = r;
    }
    let set = GSet::new(tom.group(), reps.len(), |h, c| coset[rank(&compose(&rho[h], &perms[reps[c]]))] as usize)?;
    set.decompose(tom)
}

/// `|(S_m/P)^L| = #{σ : σ⁻¹ρ(L)σ ⊆ P} / |P|`. For cyclic `L = ⟨c⟩` this is
/// `|C_{S_m}(c)|·#{x ∈ P of the cycle type of c} / |P|`; other `L` are
/// counted over all of `S_m`.
pub fn coset_marks(tom: &TableOfMarks, rho: &[Perm], sylow: &PermGroup, bound: u64) -> Result<MarkVector> {
    let mut by_type: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for x in sylow.elements() {
        *by_type.entry(x.cycle_type()).or_default() += 1;
    }
    let order = BigInt::from(sylow.order());
    let g = tom.group();
    let mut values = Vec::with_capacity(tom.len());
    for j in 0..tom.len() {
        let gens = tom.class_generators(j);
        let rep = &tom.classes()[j].representative;
        let cyclic = rep.elements().iter().filter_map(|x| g.index_of(x)).find(|&c| g.element_order(c) == rep.order());
        let count = match cyclic {
            Some(c) => {
                let t = rho[c].cycle_type();
                centralizer_order(&t) * by_type.get(&t).copied().unwrap_or(0)
            }
            None => {
                let m = rho[0].degree();
                enumeration_size(m, bound)?;
                let mut n = BigInt::zero();
                for s in all_permutations(m) {
                    let sigma = Perm::new(s)?;
                    let inv = sigma.inverse();
                    if gens.iter().all(|&x| sylow.contains(&inv.compose(&rho[x]).compose(&sigma))) {
                        n += 1;
                    }
                }
                n
            }
        };
        let (q, r) = num_integer::Integer::div_rem(&count, &order);
        if !r.is_zero() {
            return Err(Error::Integrality);
        }
        values.push(q);
    }
    Ok(MarkVector { values })
}
