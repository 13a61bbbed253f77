use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::diagram::PreparedDiagram;
use crate::burnside::{restrict_along, BurnsideElement};
use crate::zlattice::{left_kernel, IntMatrix, IntegerLattice};
use crate::{Error, Result};

/// One element of `A(K)` per object of a diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatibleFamily {
    pub components: Vec<BurnsideElement>,
}

impl CompatibleFamily {
    /// Splits a vector of `⊕_K A(K)` along the diagram's blocks.
    pub fn from_vector(d: &PreparedDiagram, v: &[BigInt]) -> Result<Self> {
        let offsets = d.offsets();
        if v.len() != offsets[d.len()] {
            return Err(Error::Dimension(alloc::format!("vector of length {} for total rank {}", v.len(), offsets[d.len()])));
        }
        let components = (0..d.len())
            .map(|k| BurnsideElement { coeffs: v[offsets[k]..offsets[k + 1]].to_vec() })
            .collect();
        Ok(CompatibleFamily { components })
    }

    pub fn to_vector(&self) -> Vec<BigInt> {
        self.components.iter().flat_map(|c| c.coeffs.iter().cloned()).collect()
    }

    /// The unit family: `[K/K]` everywhere.
    pub fn unit(d: &PreparedDiagram) -> Self {
        CompatibleFamily { components: d.toms.iter().map(|t| t.one()).collect() }
    }

    /// Whether restriction along every morphism carries the target component
    /// to the source component.
    pub fn is_compatible(&self, d: &PreparedDiagram) -> Result<bool> {
        if self.components.len() != d.len() {
            return Err(Error::Dimension("one component per object".into()));
        }
        for (m, table) in d.morphisms().iter().zip(&d.homs) {
            let res = restrict_along(&d.toms[m.dst], &self.components[m.dst], &d.toms[m.src], table)?;
            if res != self.components[m.src] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The structure map to the chosen object: its component.
pub fn phi(x: &CompatibleFamily, object: usize) -> Result<BurnsideElement> {
    x.components
        .get(object)
        .cloned()
        .ok_or_else(|| Error::Index(alloc::format!("object {object} of {}", x.components.len())))
}

/// Compatible families as a lattice in `⊕_K A(K)`; with `ideals`, inside
/// `⊕_K I(K)`.
///
/// Rows of the constraint matrix are the coordinates of `⊕_K A(K)`. Each
/// morphism `α: K₀ → K₁` contributes `|A(K₀)|` columns holding
/// `α^*(e_i) − e_i`, and each object contributes an augmentation column
/// when restricting to ideals. The limit is the left kernel.
pub fn inverse_limit(d: &PreparedDiagram, ideals: bool) -> Result<IntegerLattice> {
    let offsets = d.offsets();
    let total = offsets[d.len()];
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for (m, table) in d.morphisms().iter().zip(&d.homs) {
        let (t0, t1) = (&d.toms[m.src], &d.toms[m.dst]);
        let mut block = alloc::vec![alloc::vec![BigInt::zero(); total]; t0.len()];
        for i in 0..t1.len() {
            let res = restrict_along(t1, &t1.basis(i), t0, table)?;
            for (c, v) in res.coeffs.into_iter().enumerate() {
                block[c][offsets[m.dst] + i] += v;
            }
        }
        for (c, col) in block.iter_mut().enumerate() {
            col[offsets[m.src] + c] -= 1;
        }
        columns.extend(block);
    }
    if ideals {
        for (k, t) in d.toms.iter().enumerate() {
            let mut col = alloc::vec![BigInt::zero(); total];
            for i in 0..t.len() {
                col[offsets[k] + i] = BigInt::from(t.index(i));
            }
            columns.push(col);
        }
    }
    if columns.is_empty() {
        return Ok(IntegerLattice::full(total));
    }
    let m = IntMatrix::from_rows(total, columns).transpose();
    Ok(IntegerLattice::from_matrix(&left_kernel(&m)))
}

/// Basis of the limit as families.
pub fn limit_basis(d: &PreparedDiagram, lattice: &IntegerLattice) -> Result<Vec<CompatibleFamily>> {
    lattice.basis_rows().iter().map(|r| CompatibleFamily::from_vector(d, r)).collect()
}

/// `im φ_H` as a lattice in `A(H)`.
pub fn image_of_phi(d: &PreparedDiagram, lattice: &IntegerLattice, object: usize) -> Result<IntegerLattice> {
    let offsets = d.offsets();
    if object >= d.len() {
        return Err(Error::Index(alloc::format!("object {object} of {}", d.len())));
    }
    let rows = lattice.basis_rows().into_iter().map(|r| r[offsets[object]..offsets[object + 1]].to_vec()).collect();
    Ok(IntegerLattice::from_generators(d.toms[object].len(), rows))
}
