use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::marks::{BurnsideElement, TableOfMarks};
use crate::groups::{is_prime, p_residual, prime_factors};
use crate::{Error, Result};

/// The prime ideal `p_{H,p} = {x : char_H(x) ∈ pZ}` with `H` the
/// representative of class `class`; `p = 0` gives the minimal primes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PrimeIdealLabel {
    pub class: usize,
    pub p: u64,
}

impl TableOfMarks {
    fn check_label(&self, label: PrimeIdealLabel) -> Result<()> {
        if label.class >= self.len() {
            return Err(Error::Index(alloc::format!("class {} of {}", label.class, self.len())));
        }
        if label.p != 0 && !is_prime(label.p) {
            return Err(Error::NotPrime(label.p));
        }
        Ok(())
    }

    pub fn prime_ideal_contains(&self, label: PrimeIdealLabel, x: &BurnsideElement) -> Result<bool> {
        self.check_label(label)?;
        if x.len() != self.len() {
            return Err(Error::Dimension("element outside the ring".into()));
        }
        let c = self.character(x, label.class);
        Ok(if label.p == 0 { c.is_zero() } else { c.is_multiple_of(&BigInt::from(label.p)) })
    }

    /// Class of `H[p]`, the smallest normal subgroup of `H` with p-group
    /// quotient, for `H` the representative of `class`.
    pub fn residual_class(&self, class: usize, p: u64) -> Result<usize> {
        let h = &self.classes()[class].representative;
        let res = p_residual(&h.to_group(), p)?;
        self.class_of(&res)
    }

    /// `p_{H,p} = p_{K,q}` iff `p = q` and `H[p] ~ K[p]` (with `H[0] = H`).
    pub fn prime_ideal_equal(&self, a: PrimeIdealLabel, b: PrimeIdealLabel) -> Result<bool> {
        self.check_label(a)?;
        self.check_label(b)?;
        if a.p != b.p {
            return Ok(false);
        }
        if a.p == 0 {
            return Ok(a.class == b.class);
        }
        Ok(self.residual_class(a.class, a.p)? == self.residual_class(b.class, b.p)?)
    }

    /// All labels for `p` in `primes`, grouped into blocks naming the same
    /// ideal. Each block is sorted and blocks appear in order of their
    /// least label.
    pub fn spectrum(&self, primes: &[u64]) -> Result<Vec<Vec<PrimeIdealLabel>>> {
        let mut blocks: Vec<(u64, usize, Vec<PrimeIdealLabel>)> = Vec::new();
        for &p in primes {
            for class in 0..self.len() {
                let label = PrimeIdealLabel { class, p };
                self.check_label(label)?;
                let key = if p == 0 { class } else { self.residual_class(class, p)? };
                match blocks.iter_mut().find(|(q, k, _)| *q == p && *k == key) {
                    Some(block) => block.2.push(label),
                    None => blocks.push((p, key, alloc::vec![label])),
                }
            }
        }
        let mut out: Vec<Vec<PrimeIdealLabel>> = blocks.into_iter().map(|b| b.2).collect();
        for b in &mut out {
            b.sort();
        }
        out.sort_by_key(|b| (b[0].p, b[0].class));
        Ok(out)
    }

    /// `0`, the primes dividing `|G|`, and the least prime not dividing it.
    /// Any other prime behaves like the last one.
    pub fn spectrum_primes(&self) -> Vec<u64> {
        let n = self.group().order() as u64;
        let mut primes = alloc::vec![0];
        primes.extend(prime_factors(n));
        let extra = (2..).find(|&q| is_prime(q) && n % q != 0).expect("infinitely many primes");
        primes.push(extra);
        primes
    }
}
