//! Symmetric-group utilities: Sylow subgroups, centralizer orders,
//! Legendre's formula and ranked enumeration of `S_m`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::groups::{is_prime, Perm, PermGroup};
use crate::{Error, Result};

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

/// Exponent of `p` in `m!`.
pub fn legendre(m: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut q = p;
    while q <= m {
        e += (m / q) as u32;
        match q.checked_mul(p) {
            Some(n) => q = n,
            None => break,
        }
    }
    e
}

/// `|Syl_p(S_m)| = p^{v_p(m!)}`.
pub fn sylow_order(m: u64, p: u64) -> BigInt {
    BigInt::from(p).pow(legendre(m, p))
}

/// A Sylow `p`-subgroup of `S_m`: split `m` in base `p`, and on each block
/// of size `p^k` take the iterated wreath product generated by
/// `x ↦ (x + p^j) mod p^{j+1}` on the first `p^{j+1}` points, `j < k`.
pub fn symmetric_sylow(m: usize, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let degree = m.max(1);
    let p = p as usize;
    let mut gens = Vec::new();
    let mut offset = 0;
    let mut rest = m;
    let mut sizes = Vec::new();
    let mut size = 1;
    while size * p <= m {
        size *= p;
    }
    while rest > 0 {
        while size > rest {
            size /= p;
        }
        sizes.push(size);
        rest -= size;
    }
    for block in sizes {
        let mut span = 1;
        while span < block {
            let next = span * p;
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for x in 0..next {
                images[offset + x] = (offset + (x + span) % next) as u32;
            }
            gens.push(Perm::new(images)?);
            span = next;
        }
        offset += block;
    }
    PermGroup::with_bound(degree, gens, usize::MAX)
}

/// Order of the centralizer in `S_m` of a permutation with the given cycle
/// type (fixed points included): `Π_k k^{a_k}·a_k!`.
pub fn centralizer_order(cycle_type: &[usize]) -> BigInt {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &l in cycle_type {
        *counts.entry(l).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&k, &a)| acc * BigInt::from(k).pow(a as u32) * factorial(a))
}

/// Lehmer-code rank of a permutation of `0..m`, in `0..m!`.
pub fn rank(images: &[u32]) -> usize {
    let m = images.len();
    let mut r = 0usize;
    for i in 0..m {
        let smaller = images[i + 1..].iter().filter(|&&y| y < images[i]).count();
        r = r * (m - i) + smaller;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(m: usize, mut r: usize) -> Vec<u32> {
    let mut digits = alloc::vec![0usize; m];
    for i in (0..m).rev() {
        let base = m - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut pool: Vec<u32> = (0..m as u32).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}

/// All of `S_m` in rank order.
pub fn all_permutations(m: usize) -> Vec<Vec<u32>> {
    let n: usize = (1..=m).product();
    (0..n).map(|r| unrank(m, r)).collect()
}
