use alloc::string::String;
use alloc::vec::Vec;

use super::morphism::{cokernel_tower, homology_tower, kernel_tower, StrictMorphism};
use super::tower::{ExplicitTower, Tower, TowerCertificate};
use crate::{Error, Result};

/// Default search horizon for the finitary checks.
pub const DEFAULT_BOUND: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
}

/// A level `m` at which the statement provably fails, with the reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Refutation {
    pub m: usize,
    pub reason: String,
}

/// Outcome of a `∀m ∃n` check run up to a finite horizon.
///
/// `witnesses` lists `(m, n(m))` for every `m` where a good `n` was found.
/// A verdict is `Verified` once every `m ≤ ⌈bound/2⌉` has a witness with
/// `n ≤ bound`; it is `Refuted` only with a certificate from a generating
/// rule, never because the search ran out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProVerdict {
    pub status: Status,
    pub witnesses: Vec<(usize, usize)>,
    pub refutation: Option<Refutation>,
    pub bound: usize,
}

impl ProVerdict {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    /// `n(m)` if found.
    pub fn witness(&self, m: usize) -> Option<usize> {
        self.witnesses.iter().find(|w| w.0 == m).map(|w| w.1)
    }
}

/// Levels `m` that a check must cover at this bound.
pub fn tested_levels(bound: usize) -> usize {
    bound.div_ceil(2)
}

/// Whether the certificate proves `α^m_n ≠ 0` for every `n ≥ m`.
fn certified_nonvanishing(cert: &TowerCertificate, levels: &ExplicitTower, m: usize) -> Option<String> {
    if cert.nonvanishing_from.is_some_and(|k| k <= m) {
        return Some(alloc::format!("the rule certifies nonzero composites into level {m}"));
    }
    if cert.surjective_from.is_some_and(|s| s <= m + 1) && m <= levels.horizon() && !levels.level(m).is_trivial() {
        return Some(alloc::format!("structure maps are surjective onto the nonzero level {m}"));
    }
    None
}

/// `∀m ∃n ≥ m: α^m_n = 0`.
pub fn is_pro_trivial(t: &Tower, bound: usize) -> Result<ProVerdict> {
    if bound == 0 {
        return Err(Error::Index("bound must be at least 1".into()));
    }
    let levels = t.materialize(bound)?;
    Ok(pro_trivial_on(&levels, &t.certificate(), bound))
}

fn pro_trivial_on(levels: &ExplicitTower, cert: &TowerCertificate, bound: usize) -> ProVerdict {
    let top = levels.horizon().min(bound);
    let mut witnesses = Vec::new();
    let mut complete = top >= tested_levels(bound);
    for m in 1..=tested_levels(bound).min(top) {
        let mut c = crate::zlattice::AbelianMap::identity(levels.level(m));
        let mut found = None;
        for n in m..=top {
            if n > m {
                c = levels.alpha(n).then(&c).expect("consecutive levels compose");
            }
            if c.is_zero() {
                found = Some(n);
                break;
            }
        }
        match found {
            Some(n) => witnesses.push((m, n)),
            None => {
                complete = false;
                if let Some(reason) = certified_nonvanishing(cert, levels, m) {
                    return ProVerdict { status: Status::Refuted, witnesses, refutation: Some(Refutation { m, reason }), bound: top };
                }
            }
        }
    }
    let status = if complete { Status::Verified } else { Status::Inconclusive };
    ProVerdict { status, witnesses, refutation: None, bound: top }
}

/// Pro-isomorphism test: kernel and cokernel towers must both be
/// pro-trivial; `n(m)` is the larger of the two witnesses.
pub fn pro_iso_check(f: &StrictMorphism, bound: usize) -> Result<ProVerdict> {
    if bound < 2 {
        return Err(Error::Index("bound must be at least 2".into()));
    }
    // surfaces malformed morphisms before anything else
    f.materialize(bound)?;
    let k = is_pro_trivial(&kernel_tower(f), bound)?;
    let c = is_pro_trivial(&cokernel_tower(f), bound)?;
    Ok(combine(&k, &c, "kernel", "cokernel"))
}

/// `{ker g_n / im f_n}` pro-trivial, after checking `g ∘ f = 0` levelwise.
pub fn pro_exactness_check(f: &StrictMorphism, g: &StrictMorphism, bound: usize) -> Result<ProVerdict> {
    if bound < 2 {
        return Err(Error::Index("bound must be at least 2".into()));
    }
    is_pro_trivial(&homology_tower(f, g), bound)
}

fn combine(a: &ProVerdict, b: &ProVerdict, a_name: &str, b_name: &str) -> ProVerdict {
    let bound = a.bound.min(b.bound);
    let witnesses: Vec<(usize, usize)> = a
        .witnesses
        .iter()
        .filter_map(|&(m, n)| b.witness(m).map(|n2| (m, n.max(n2))))
        .collect();
    let refuted = [(a, a_name), (b, b_name)].into_iter().find(|(v, _)| v.is_refuted());
    if let Some((v, name)) = refuted {
        let r = v.refutation.clone().expect("refuted verdicts carry a refutation");
        return ProVerdict {
            status: Status::Refuted,
            witnesses,
            refutation: Some(Refutation { m: r.m, reason: alloc::format!("{name} tower: {}", r.reason) }),
            bound,
        };
    }
    let status = if a.is_verified() && b.is_verified() { Status::Verified } else { Status::Inconclusive };
    ProVerdict { status, witnesses, refutation: None, bound }
}
