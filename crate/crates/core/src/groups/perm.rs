use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A permutation of `{0, …, degree-1}` stored as its image list.
///
/// Ordering is lexicographic on the image list, which is what the canonical
/// subgroup keys are built from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Parse(alloc::format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle lengths, sorted descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    /// Nontrivial cycles as lists of points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cyc in cycles {
            f.write_str("(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::new(vec![1, 0, 2]).unwrap();
        let b = Perm::new(vec![0, 2, 1]).unwrap();
        // a∘b sends 1 -> 2 -> 2, 2 -> 1 -> 0
        assert_eq!(a.compose(&b).images(), &[1, 2, 0]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![2, 0]).is_err());
    }

    #[test]
    fn order_and_cycles() {
        let p = Perm::new(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(alloc::format!("{p}"), "(1 2 3)(4 5)");
        assert!(p.pow(6).is_identity());
        assert_eq!(p.compose(&p.inverse()), Perm::identity(5));
    }
}
