use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::tower::{ExplicitTower, Tower};
use super::verdict::{tested_levels, ProVerdict, Status};
use crate::zlattice::{AbelianMap, FgAbelianGroup, IntMatrix, IntegerLattice, SubgroupPresentation};
use crate::Result;

/// Shape of a detected profinite limit `Z^r ⊕ ⊕_p Z_p^{r_p} ⊕ F`.
///
/// Detected from the invariant factors over a window of levels, not
/// proved; `certified` is always `false`. Raising the bound widens the window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfinitePattern {
    pub free_rank: usize,
    pub padic_ranks: Vec<(u64, usize)>,
    /// Invariant factors of the stable finite part `F`.
    pub finite_part: Vec<BigInt>,
    pub certified: bool,
    /// First and last level of the detection window.
    pub window: (usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LimitReport {
    /// The limit is finitely generated: certified by the rule, or the
    /// stable images stopped changing.
    Group(FgAbelianGroup),
    Profinite(ProfinitePattern),
    /// Stable images (or levels) found so far.
    Inconclusive(Vec<FgAbelianGroup>),
}

/// Stable images `S_m = ⋂_n im(α^m_n)`, as far as the bound shows them.
struct StableImages {
    images: Vec<SubgroupPresentation>,
    witnesses: Vec<(usize, usize)>,
    all_stable: bool,
    surjective: bool,
}

fn stable_images(levels: &ExplicitTower, surjective_cert: bool) -> StableImages {
    let top = levels.horizon();
    let surjective = surjective_cert || (2..=top).all(|n| levels.alpha(n).is_surjective());
    let full = |m: usize| {
        let g = levels.level(m);
        let gens: Vec<Vec<BigInt>> = (0..g.ngens()).map(|j| unit(g.ngens(), j)).collect();
        SubgroupPresentation::new(g, &gens).expect("whole group")
    };
    if surjective {
        return StableImages {
            images: (1..=top).map(full).collect(),
            witnesses: (1..=top).map(|m| (m, m)).collect(),
            all_stable: true,
            surjective,
        };
    }
    let mut images = Vec::new();
    let mut witnesses = Vec::new();
    let mut all_stable = true;
    for m in 1..=tested_levels(top) {
        let mut chain: Vec<IntegerLattice> = Vec::new();
        let mut c = AbelianMap::identity(levels.level(m));
        for n in m..=top {
            if n > m {
                c = levels.alpha(n).then(&c).expect("consecutive levels compose");
            }
            chain.push(c.image_lattice());
        }
        let last = chain.last().expect("nonempty chain").clone();
        let n0 = m + chain.iter().rposition(|l| *l != last).map_or(0, |i| i + 1);
        if n0 <= m + (top - m) / 2 {
            witnesses.push((m, n0));
            let gens = last.basis_rows();
            images.push(SubgroupPresentation::new(levels.level(m), &gens).expect("image presentation"));
        } else {
            all_stable = false;
            break;
        }
    }
    StableImages { images, witnesses, all_stable, surjective }
}

fn unit(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = alloc::vec![BigInt::zero(); n];
    v[j] = BigInt::one();
    v
}

/// `S_{m+1} → S_m` induced by `α_{m+1}`.
fn induced(levels: &ExplicitTower, images: &[SubgroupPresentation], m: usize) -> Option<AbelianMap> {
    let (hi, lo) = (&images[m], &images[m - 1]);
    let rows = hi
        .generator_vectors(levels.level(m + 1))
        .iter()
        .map(|v| lo.coordinates(&levels.alpha(m + 1).apply(v)))
        .collect::<Option<Vec<_>>>()?;
    AbelianMap::new(hi.group.clone(), lo.group.clone(), IntMatrix::from_rows(lo.group.ngens(), rows)).ok()
}

/// Inverse limit of a tower, with a verdict on the stability of its image chains.
pub fn lim_tower(t: &Tower, bound: usize) -> Result<(LimitReport, ProVerdict)> {
    let levels = t.materialize(bound.max(1))?;
    let top = levels.horizon();
    let cert = t.certificate();
    let st = stable_images(&levels, cert.surjective_from.is_some_and(|s| s <= 2));
    let verdict = |status| ProVerdict { status, witnesses: st.witnesses.clone(), refutation: None, bound: top };
    if let Some(limit) = cert.limit {
        return Ok((LimitReport::Group(limit), verdict(Status::Verified)));
    }
    let groups: Vec<FgAbelianGroup> = st.images.iter().map(|p| p.group.clone()).collect();
    if !st.all_stable || groups.len() < 2 {
        return Ok((LimitReport::Inconclusive(groups), verdict(Status::Inconclusive)));
    }
    let k = groups.len();
    let start = k / 2 + 1;
    let tail_iso = (start..k).all(|m| {
        induced(&levels, &st.images, m).is_some_and(|f| f.is_injective() && f.is_surjective())
    });
    if tail_iso {
        return Ok((LimitReport::Group(groups[k - 1].clone()), verdict(Status::Verified)));
    }
    let window = if st.surjective { (top - tested_levels(top) + 1, top) } else { (start, k) };
    match detect_pattern(&groups[window.0 - 1..window.1], window) {
        Some(p) => Ok((LimitReport::Profinite(p), verdict(Status::Verified))),
        None => Ok((LimitReport::Inconclusive(groups), verdict(Status::Inconclusive))),
    }
}

fn detect_pattern(groups: &[FgAbelianGroup], window: (usize, usize)) -> Option<ProfinitePattern> {
    let free_rank = groups[0].free_rank();
    if groups.len() < 2 || groups.iter().any(|g| g.free_rank() != free_rank) {
        return None;
    }
    let factors: Vec<Vec<BigInt>> = groups.iter().map(|g| g.invariant_factors()).collect();
    let mut primes: Vec<u64> = Vec::new();
    for d in factors.iter().flatten() {
        for p in small_prime_factors(d)? {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    primes.sort_unstable();
    let mut padic_ranks = Vec::new();
    let mut finite: Vec<BigInt> = Vec::new();
    for &p in &primes {
        let pb = BigInt::from(p);
        let exps: Vec<Vec<u32>> = factors
            .iter()
            .map(|fs| {
                let mut e: Vec<u32> = fs.iter().map(|d| valuation(d, &pb)).filter(|&e| e > 0).collect();
                e.sort_unstable_by(|a, b| b.cmp(a));
                e
            })
            .collect();
        let width = exps.iter().map(Vec::len).max().unwrap_or(0);
        let padded: Vec<Vec<u32>> = exps
            .into_iter()
            .map(|mut e| {
                e.resize(width, 0);
                e
            })
            .collect();
        let mut rank = 0;
        for i in 0..width {
            let col: Vec<u32> = padded.iter().map(|e| e[i]).collect();
            if col.windows(2).all(|w| w[1] > w[0]) {
                rank += 1;
            } else if col.windows(2).all(|w| w[1] == w[0]) {
                if col[0] > 0 {
                    finite.push(pb.pow(col[0]));
                }
            } else {
                return None;
            }
        }
        if rank > 0 {
            padic_ranks.push((p, rank));
        }
    }
    let finite_part = FgAbelianGroup::new(0, finite).ok()?.invariant_factors();
    Some(ProfinitePattern { free_rank, padic_ranks, finite_part, certified: false, window })
}

fn valuation(d: &BigInt, p: &BigInt) -> u32 {
    let mut d = d.clone();
    let mut e = 0;
    while !d.is_zero() && d.is_multiple_of(p) {
        d /= p;
        e += 1;
    }
    e
}

/// Prime factors by trial division below `2^20`; `None` if a cofactor
/// is too large to certify as prime that way.
fn small_prime_factors(d: &BigInt) -> Option<Vec<u64>> {
    const LIMIT: u64 = 1 << 20;
    let mut n = d.magnitude().clone();
    let mut out = Vec::new();
    let mut q = 2u64;
    while q < LIMIT && n > num_bigint::BigUint::one() {
        if (&n % q).is_zero() {
            out.push(q);
            while (&n % q).is_zero() {
                n /= q;
            }
        }
        q += 1;
    }
    if n > num_bigint::BigUint::one() {
        let v = n.to_u64().filter(|&v| v < LIMIT * LIMIT)?;
        out.push(v);
    }
    Some(out)
}

/// `lim¹ = 0` whenever the Mittag-Leffler condition holds: structure maps
/// surjective (certified or on every materialized level), or image chains
/// stable up to the bound. No general computation is attempted.
pub fn lim1_vanishing(t: &Tower, bound: usize) -> Result<ProVerdict> {
    let levels = t.materialize(bound.max(1))?;
    let top = levels.horizon();
    let cert = t.certificate();
    if cert.surjective_from.is_some() {
        let witnesses = (1..=tested_levels(top)).map(|m| (m, m.max(cert.surjective_from.unwrap_or(2) - 1))).collect();
        return Ok(ProVerdict { status: Status::Verified, witnesses, refutation: None, bound: top });
    }
    let st = stable_images(&levels, false);
    let status = if st.all_stable { Status::Verified } else { Status::Inconclusive };
    Ok(ProVerdict { status, witnesses: st.witnesses, refutation: None, bound: top })
}
