use alloc::vec::Vec;

use super::classes::least_conjugate;
use super::group::{is_prime, PermGroup};
use super::subgroup::Subgroup;
use crate::{Error, Result};

/// A Sylow p-subgroup, chosen as the least canonical key in its conjugacy class.
///
/// Built by repeatedly adjoining an element of `N(P) \ P` whose p-th power
/// lies in `P`, then canonicalized over conjugates.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut target = 1usize;
    let mut n = g.order();
    while n % p as usize == 0 {
        n /= p as usize;
        target *= p as usize;
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut current = g.closure(&gens);
    while current.len() < target {
        let members: Vec<usize> = current.iter().collect();
        let step = (0..g.order()).find(|&x| {
            !current.contains(x)
                && current.contains(g.pow_idx(x, p))
                && gens.iter().all(|&s| current.contains(g.conj(x, s)))
        });
        // Sylow's theorem guarantees an element of order p in N(P)/P
        let x = step.expect("p divides [N(P):P] while P is not Sylow");
        debug_assert!(members.iter().all(|&a| current.contains(g.conj(x, a))));
        gens.push(x);
        current = g.closure(&gens);
    }
    Ok(g.subgroup_from_bits(&least_conjugate(g, &current)))
}

/// `K[p]`: the smallest normal subgroup of `k` with p-group quotient.
///
/// Computed as the limit of `K₀ = K`, `K_{i+1} = ⟨[K_i, K], K_i^p⟩`.
pub fn p_residual(k: &PermGroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let kgens = k.generator_indices();
    let mut current = k.closure(&(0..k.order()).collect::<Vec<_>>());
    loop {
        let mut gens: Vec<usize> = Vec::new();
        for a in current.iter() {
            gens.push(k.pow_idx(a, p));
            for &s in &kgens {
                // [a, s] = a s a⁻¹ s⁻¹
                gens.push(k.mul(k.mul(a, s), k.mul(k.inv(a), k.inv(s))));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let next = k.normal_closure(&gens);
        if next == current {
            return Ok(k.subgroup_from_bits(&current));
        }
        current = next;
    }
}

/// `p_residual` of a subgroup `h` of `g`, returned as a subgroup of `g`.
pub fn p_residual_of(g: &PermGroup, h: &Subgroup, p: u64) -> Result<Subgroup> {
    if !g.is_subgroup(h) {
        return Err(Error::NotASubgroup);
    }
    p_residual(&h.to_group(), p)
}
