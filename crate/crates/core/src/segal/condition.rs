//! Condition (3): every prime ideal of `A(H)` containing `im φ_H` also
//! contains `I(H)`.
//!
//! Prime ideals of `A(H)` are `P(K,p) = {x : char_K(x) ≡ 0 mod p}`. Only
//! finitely many `p` need testing: if `p` divides no nonzero character value
//! of the generators involved, `char_K ≡ 0 mod p` on a generator forces
//! `char_K = 0`, which is exactly the `p = 0` test. One such prime is kept
//! as a witness.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::diagram::PreparedDiagram;
use super::limit::{image_of_phi, inverse_limit};
use super::sm::{build_sm, build_sm_mod_sylow, BuildOptions};
use crate::burnside::{BurnsideElement, PrimeIdealLabel, TableOfMarks};
use crate::groups::{is_prime, prime_factors};
use crate::zlattice::IntegerLattice;
use crate::{Error, Result};

/// `m` up to 12 covers `SL(2,Z)`.
pub const CONDITION_DEGREE_BOUND: u64 = 12;

#[derive(Clone, Debug)]
pub struct ConditionOptions {
    /// Degree for the trace; least common multiple of object orders when absent.
    pub m: Option<u64>,
    /// Prime for the trace.
    pub p: u64,
    pub build: BuildOptions,
}

impl Default for ConditionOptions {
    fn default() -> Self {
        ConditionOptions { m: None, p: 2, build: BuildOptions::with_degree_bound(CONDITION_DEGREE_BOUND) }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelVerdict {
    pub label: PrimeIdealLabel,
    /// Order of the subgroup representing `label.class`.
    pub subgroup_order: usize,
    /// `P ⊇ im φ_H`
    pub contains_image: bool,
    /// `P ⊇ I(H)`
    pub contains_ideal: bool,
}

impl LabelVerdict {
    pub fn holds(&self) -> bool {
        !self.contains_image || self.contains_ideal
    }
}

/// Character values of the shifted elements at one subgroup class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceRow {
    pub class: usize,
    pub subgroup_order: usize,
    /// `char_K([S_m] − |S_m|)`
    pub full: BigInt,
    /// `char_K([S_m/Syl_p] − |S_m/Syl_p|)`
    pub mod_sylow: BigInt,
    /// Whether `P(K,p)` can contain both shifted elements.
    pub admissible: bool,
    pub is_p_group: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SylowTrace {
    pub m: u64,
    pub p: u64,
    pub sm_cardinality: BigInt,
    pub coset_cardinality: BigInt,
    /// The shifted families lie in the limit of augmentation ideals.
    pub in_limit: bool,
    pub rows: Vec<TraceRow>,
    /// Every admissible `K` is trivial or a `p`-group.
    pub conclusion_holds: bool,
    pub conclusion: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condition3Report {
    pub object: usize,
    pub image_generators: Vec<BurnsideElement>,
    pub image_is_whole_ideal: bool,
    pub primes: Vec<u64>,
    pub witness_prime: u64,
    pub labels: Vec<LabelVerdict>,
    pub trace: SylowTrace,
}

impl Condition3Report {
    pub fn pass(&self) -> bool {
        self.labels.iter().all(LabelVerdict::holds)
    }
}

pub fn check_condition3(d: &PreparedDiagram, object: usize, opts: &ConditionOptions) -> Result<Condition3Report> {
    if object >= d.len() {
        return Err(Error::Index(alloc::format!("object {object} of {}", d.len())));
    }
    let tom = &d.toms[object];
    let limit = inverse_limit(d, true)?;
    let image = image_of_phi(d, &limit, object)?;
    let ideal = tom.augmentation_ideal();
    let image_gens: Vec<BurnsideElement> =
        image.basis_rows().into_iter().map(|coeffs| BurnsideElement { coeffs }).collect();
    let ideal_gens: Vec<BurnsideElement> =
        ideal.basis_rows().into_iter().map(|coeffs| BurnsideElement { coeffs }).collect();

    let mut primes: BTreeSet<u64> = BTreeSet::new();
    let mut values: Vec<BigInt> = Vec::new();
    for x in image_gens.iter().chain(&ideal_gens) {
        for j in 0..tom.len() {
            values.push(tom.character(x, j));
        }
    }
    for v in &values {
        if v.is_zero() {
            continue;
        }
        let n = v.abs().to_u64().ok_or_else(|| Error::Dimension("character value beyond u64".into()))?;
        primes.extend(prime_factors(n));
    }
    let witness_prime = (2u64..).find(|&q| is_prime(q) && !primes.contains(&q)).expect("infinitely many primes");
    let mut tested: Vec<u64> = alloc::vec![0];
    tested.extend(primes.iter().copied());
    tested.push(witness_prime);

    let mut labels = Vec::new();
    for &p in &tested {
        for class in 0..tom.len() {
            let label = PrimeIdealLabel { class, p };
            let mut contains_image = true;
            for x in &image_gens {
                contains_image &= tom.prime_ideal_contains(label, x)?;
            }
            let contains_ideal = if p == 0 { class == 0 } else { tom.residual_class(class, p)? == 0 };
            labels.push(LabelVerdict {
                label,
                subgroup_order: tom.classes()[class].order,
                contains_image,
                contains_ideal,
            });
        }
    }
    let trace = sylow_trace(d, object, &limit, opts)?;
    Ok(Condition3Report {
        object,
        image_is_whole_ideal: image == ideal,
        image_generators: image_gens,
        primes: tested,
        witness_prime,
        labels,
        trace,
    })
}

fn sylow_trace(d: &PreparedDiagram, object: usize, limit: &IntegerLattice, opts: &ConditionOptions) -> Result<SylowTrace> {
    let m = opts.m.unwrap_or_else(|| d.diagram.lcm_of_orders());
    let p = opts.p;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let full = build_sm(d, m, &opts.build)?;
    let cosets = build_sm_mod_sylow(d, m, p, &opts.build)?;
    let (a, b) = (full.shifted(d), cosets.shifted(d));
    let in_limit = limit.contains(&a.to_vector()) && limit.contains(&b.to_vector());
    let tom: &TableOfMarks = &d.toms[object];
    let pb = BigInt::from(p);
    let mut rows = Vec::new();
    for class in 0..tom.len() {
        let fa = tom.character(&a.components[object], class);
        let fb = tom.character(&b.components[object], class);
        let order = tom.classes()[class].order;
        rows.push(TraceRow {
            class,
            subgroup_order: order,
            admissible: fa.is_multiple_of(&pb) && fb.is_multiple_of(&pb),
            is_p_group: tom.classes()[class].representative.to_group().is_p_group(p),
            full: fa,
            mod_sylow: fb,
        });
    }
    let conclusion_holds = rows.iter().all(|r| !r.admissible || r.subgroup_order == 1 || r.is_p_group);
    let conclusion = if conclusion_holds {
        alloc::format!("P(K,{p}) ⊇ {{[S_{m}] − {m}!, [S_{m}/Syl_{p}] − |S_{m}/Syl_{p}|}} forces K = 1 or K a {p}-group")
    } else {
        alloc::format!("some K that is neither trivial nor a {p}-group survives both tests")
    };
    Ok(SylowTrace {
        m,
        p,
        sm_cardinality: full.cardinality,
        coset_cardinality: cosets.cardinality,
        in_limit,
        rows,
        conclusion_holds,
        conclusion,
    })
}

/// Builds `[[S_m]]` and `[[S_m/Syl_p]]` object by object and checks that
/// restriction along every morphism matches.
pub fn restriction_compatibility_check(d: &PreparedDiagram, m: u64, p: u64, opts: &BuildOptions) -> Result<bool> {
    let full = build_sm(d, m, opts)?;
    let cosets = build_sm_mod_sylow(d, m, p, opts)?;
    Ok(full.family.is_compatible(d)? && cosets.family.is_compatible(d)?)
}
