use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::gset::GSet;
use super::marks::{BurnsideElement, TableOfMarks};
use crate::groups::bits::Bits;
use crate::groups::{is_injective, PermGroup, Subgroup};
use crate::{Error, Result};

/// Element-index table of the inclusion `sub ≤ parent`.
pub fn inclusion_table(sub: &PermGroup, parent: &PermGroup) -> Result<Vec<usize>> {
    sub.elements().iter().map(|p| parent.index_of(p).ok_or(Error::NotASubgroup)).collect()
}

fn check_table(source: &TableOfMarks, target: &TableOfMarks, alpha: &[usize]) -> Result<()> {
    let (s, t) = (source.group(), target.group());
    if alpha.len() != s.order() || alpha.iter().any(|&a| a >= t.order()) {
        return Err(Error::NotAHomomorphism("table does not map source elements to target elements".into()));
    }
    if !is_injective(alpha) {
        return Err(Error::NotAHomomorphism("map is not injective".into()));
    }
    Ok(())
}

/// `α^*: A(K₁) → A(K₀)` for an injective homomorphism `α: K₀ → K₁` given by
/// its element-index table. Each `[K₁/L]` is restricted by decomposing the
/// coset set under the `K₀`-action through `α`.
pub fn restrict_along(
    target: &TableOfMarks,
    x: &BurnsideElement,
    source: &TableOfMarks,
    alpha: &[usize],
) -> Result<BurnsideElement> {
    check_table(source, target, alpha)?;
    if x.len() != target.len() {
        return Err(Error::Dimension("element outside the target ring".into()));
    }
    let mut out = source.zero();
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let rep = bits_of_class(target, i);
        let (set, _) = GSet::coset_set_along(target.group(), &rep, source.group().order(), |s| alpha[s]);
        out = out.add(&set.decompose(source)?.scale(c));
    }
    Ok(out)
}

/// `α_*: A(K₀) → A(K₁)`, `[K₀/L] ↦ [K₁/α(L)]`.
pub fn induce_along(
    source: &TableOfMarks,
    x: &BurnsideElement,
    target: &TableOfMarks,
    alpha: &[usize],
) -> Result<BurnsideElement> {
    check_table(source, target, alpha)?;
    if x.len() != source.len() {
        return Err(Error::Dimension("element outside the source ring".into()));
    }
    let mut out = target.zero();
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut image = Bits::new(target.group().order());
        for s in bits_of_class(source, i).iter() {
            image.insert(alpha[s]);
        }
        let j = target.class_of_bits(&image).ok_or(Error::NotASubgroup)?;
        out.coeffs[j] += c;
    }
    Ok(out)
}

/// `res^G_H` for a subgroup `H ≤ G` whose table is `sub`.
pub fn restriction(whole: &TableOfMarks, x: &BurnsideElement, sub: &TableOfMarks) -> Result<BurnsideElement> {
    let alpha = inclusion_table(sub.group(), whole.group())?;
    restrict_along(whole, x, sub, &alpha)
}

/// `ind_H^G` for a subgroup `H ≤ G` whose table is `sub`.
pub fn induction(sub: &TableOfMarks, x: &BurnsideElement, whole: &TableOfMarks) -> Result<BurnsideElement> {
    let alpha = inclusion_table(sub.group(), whole.group())?;
    induce_along(sub, x, whole, &alpha)
}

fn bits_of_class(tom: &TableOfMarks, i: usize) -> Bits {
    let g = tom.group();
    let mut bits = Bits::new(g.order());
    for p in tom.classes()[i].representative.elements() {
        bits.insert(g.index_of(p).expect("class representative lies in the group"));
    }
    bits
}

/// Right-hand side of the double coset formula
/// `res^G_K ind^G_H [H/L] = Σ_{KgH} ind^K_{K∩gHg⁻¹} c_g res^H_{H^g∩K}[H/L]`,
/// evaluated one double coset at a time.
pub fn double_coset_formula(
    whole: &TableOfMarks,
    h: &TableOfMarks,
    k: &TableOfMarks,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    let g = whole.group();
    let h_idx = inclusion_table(h.group(), g)?;
    let k_idx = inclusion_table(k.group(), g)?;
    let mut seen = alloc::vec![false; g.order()];
    let mut total = k.zero();
    for rep in 0..g.order() {
        if seen[rep] {
            continue;
        }
        for &a in &k_idx {
            for &b in &h_idx {
                seen[g.mul(g.mul(a, rep), b)] = true;
            }
        }
        // H_g = H ∩ g⁻¹Kg and its conjugate K_g = g H_g g⁻¹ ≤ K
        let mut k_bits = Bits::new(g.order());
        for &i in &k_idx {
            k_bits.insert(i);
        }
        let hg: Vec<usize> = h_idx.iter().copied().filter(|&y| k_bits.contains(g.conj(rep, y))).collect();
        let kg: Vec<usize> = hg.iter().map(|&y| g.conj(rep, y)).collect();
        let hg_group = subgroup_group(g, &hg);
        let kg_group = subgroup_group(g, &kg);
        let hg_tom = TableOfMarks::new(hg_group.clone());
        let kg_tom = TableOfMarks::new(kg_group.clone());
        let restricted = restriction(h, x, &hg_tom)?;
        let conj: Vec<usize> = hg_group
            .elements()
            .iter()
            .map(|p| {
                let y = g.index_of(p).expect("element of H_g");
                kg_group.index_of(g.element(g.conj(rep, y))).expect("conjugate lies in K_g")
            })
            .collect();
        let moved = induce_along(&hg_tom, &restricted, &kg_tom, &conj)?;
        total = total.add(&induction(&kg_tom, &moved, k)?);
    }
    Ok(total)
}

fn subgroup_group(g: &PermGroup, idx: &[usize]) -> PermGroup {
    let mut elements: Vec<_> = idx.iter().map(|&i| g.element(i).clone()).collect();
    elements.sort();
    Subgroup::from_sorted(elements).to_group()
}

/// Sum of coefficients; the number of orbits of an honest G-set.
pub fn orbit_count(x: &BurnsideElement) -> BigInt {
    x.coeffs.iter().sum()
}
