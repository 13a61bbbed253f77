use alloc::vec::Vec;
use core::cmp::Ordering;

/// Subset of a group's element indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits { words: alloc::vec![0; n.div_ceil(64)] }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Lexicographic comparison of the sorted index lists (sets of equal size).
    pub fn key_cmp(&self, other: &Bits) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let x = a ^ b;
            if x != 0 {
                let low = x & x.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}
