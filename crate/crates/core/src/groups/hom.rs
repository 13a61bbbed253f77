use alloc::vec::Vec;

use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// A homomorphism given by the images of the source group's generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupHom {
    pub gen_images: Vec<Perm>,
}

impl GroupHom {
    /// Extends the generator table to every element of `src`; `table[i]` is the
    /// index in `dst` of the image of `src.element(i)`.
    pub fn tabulate(&self, src: &PermGroup, dst: &PermGroup) -> Result<Vec<usize>> {
        if self.gen_images.len() != src.generators().len() {
            return Err(Error::NotAHomomorphism(alloc::format!(
                "{} generator images for {} generators",
                self.gen_images.len(),
                src.generators().len()
            )));
        }
        let imgs = self
            .gen_images
            .iter()
            .map(|p| {
                dst.index_of(p).ok_or_else(|| {
                    Error::NotAHomomorphism(alloc::format!("image {p} is not in the target"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        tabulate_indices(src, dst, &imgs)
    }

    pub fn identity(g: &PermGroup) -> Self {
        GroupHom { gen_images: g.generators().to_vec() }
    }

    /// Inclusion of `sub` into any group containing its permutations.
    pub fn inclusion(sub: &PermGroup) -> Self {
        Self::identity(sub)
    }

    /// `other ∘ self` where `self: a → b` and `other: b → c`.
    pub fn then(&self, other: &GroupHom, a: &PermGroup, b: &PermGroup, c: &PermGroup) -> Result<GroupHom> {
        let t1 = self.tabulate(a, b)?;
        let t2 = other.tabulate(b, c)?;
        let gen_images = a
            .generator_indices()
            .into_iter()
            .map(|s| c.element(t2[t1[s]]).clone())
            .collect();
        Ok(GroupHom { gen_images })
    }
}

pub(crate) fn tabulate_indices(src: &PermGroup, dst: &PermGroup, imgs: &[usize]) -> Result<Vec<usize>> {
    let gens = src.generator_indices();
    let mut table = alloc::vec![usize::MAX; src.order()];
    table[0] = 0;
    let mut list = alloc::vec![0usize];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for (k, &s) in gens.iter().enumerate() {
            let y = src.mul(x, s);
            let image = dst.mul(table[x], imgs[k]);
            if table[y] == usize::MAX {
                table[y] = image;
                list.push(y);
            } else if table[y] != image {
                return Err(Error::NotAHomomorphism("generator relations are not preserved".into()));
            }
        }
        i += 1;
    }
    Ok(table)
}

pub(crate) fn is_injective(table: &[usize]) -> bool {
    let mut seen: Vec<usize> = table.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == table.len()
}

/// Every injective homomorphism `h → k`, ordered by generator-image indices in `k`.
pub fn injective_homs(h: &PermGroup, k: &PermGroup) -> Vec<GroupHom> {
    if k.order() % h.order() != 0 {
        return Vec::new();
    }
    let gens = h.generator_indices();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let ord = h.element_order(s);
            (0..k.order()).filter(|&x| k.element_order(x) == ord).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; gens.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Ok(table) = tabulate_indices(h, k, &imgs) {
            if is_injective(&table) {
                out.push(GroupHom { gen_images: imgs.iter().map(|&i| k.element(i).clone()).collect() });
            }
        }
        // odometer, last generator fastest
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_group;

    #[test]
    fn counts() {
        let c2 = parse_group("C2").unwrap();
        let c3 = parse_group("C3").unwrap();
        let s3 = parse_group("S3").unwrap();
        assert_eq!(injective_homs(&c2, &c2).len(), 1);
        assert_eq!(injective_homs(&c2, &s3).len(), 3);
        assert!(injective_homs(&c3, &c2).is_empty());
        assert_eq!(injective_homs(&s3, &s3).len(), 6);
        let triv = parse_group("C1").unwrap();
        assert_eq!(injective_homs(&triv, &s3).len(), 1);
    }

    /// Generator-image search with no order filter.
    #[test]
    fn matches_unfiltered_search() {
        let v4 = parse_group("D4").unwrap();
        let s4 = parse_group("S4").unwrap();
        let mut brute = 0;
        for a in 0..s4.order() {
            for b in 0..s4.order() {
                if let Ok(t) = tabulate_indices(&v4, &s4, &[a, b]) {
                    brute += is_injective(&t) as usize;
                }
            }
        }
        assert_eq!(injective_homs(&v4, &s4).len(), brute);
    }

    #[test]
    fn rejects_non_hom() {
        let c2 = parse_group("C2").unwrap();
        let c3 = parse_group("C3").unwrap();
        let bad = GroupHom { gen_images: c3.generators().to_vec() };
        assert!(bad.tabulate(&c2, &c3).is_err());
    }
}
