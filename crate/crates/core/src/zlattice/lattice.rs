use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::normal_form::echelon;
use crate::{Error, Result};

/// A sublattice of `Z^r`, stored by its Hermite normal form basis.
///
/// Two lattices are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLattice {
    ambient_rank: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn zero(ambient_rank: usize) -> Self {
        IntegerLattice { ambient_rank, basis: IntMatrix::zeros(0, ambient_rank), pivots: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self::from_matrix(&IntMatrix::identity(ambient_rank))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let e = echelon(m);
        let rows = (0..e.rank).map(|i| e.h.row(i).to_vec()).collect();
        IntegerLattice {
            ambient_rank: m.cols(),
            basis: IntMatrix::from_rows(m.cols(), rows),
            pivots: e.pivots,
        }
    }

    pub fn from_generators(ambient_rank: usize, gens: Vec<Vec<BigInt>>) -> Self {
        Self::from_matrix(&IntMatrix::from_rows(ambient_rank, gens))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Coefficients `c` with `c·basis = v`, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_rank, "vector length");
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (i, &c) in self.pivots.iter().enumerate() {
            let (q, r) = rest[c].div_rem(&self.basis[(i, c)]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(self.basis.row(i)) {
                *x -= &q * b;
            }
            coeffs.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        (0..other.rank()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_same(other)?;
        let mut m = self.basis.clone();
        for i in 0..other.rank() {
            m.push_row(other.basis.row(i));
        }
        Ok(Self::from_matrix(&m))
    }

    pub fn scaled(&self, k: &BigInt) -> IntegerLattice {
        let rows = self.basis_rows().into_iter().map(|r| r.into_iter().map(|x| x * k).collect()).collect();
        Self::from_generators(self.ambient_rank, rows)
    }

    /// `|det|` of the basis when the lattice has full rank, i.e. the index in `Z^r`.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_rank)
            .then(|| (0..self.rank()).map(|i| self.basis[(i, i)].clone()).product())
    }

    fn check_same(&self, other: &IntegerLattice) -> Result<()> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::Dimension(alloc::format!(
                "ambient ranks {} and {}",
                self.ambient_rank, other.ambient_rank
            )));
        }
        Ok(())
    }
}

/// Multiplication table of a ring that is free of rank `r` over `Z`:
/// `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    rank: usize,
    table: Vec<BigInt>,
}

impl StructureConstants {
    pub fn new(rank: usize, table: Vec<BigInt>) -> Result<Self> {
        if table.len() != rank * rank * rank {
            return Err(Error::Dimension(alloc::format!("structure table for rank {rank}")));
        }
        Ok(StructureConstants { rank, table })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.table[(i * self.rank + j) * self.rank + k]
    }

    pub fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let r = self.rank;
        let mut out = alloc::vec![BigInt::zero(); r];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let base = (i * r + j) * r;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.table[base + k];
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }
}

/// Lattice spanned by all products `x·y`, `x ∈ basis(a)`, `y ∈ basis(b)`.
pub fn lattice_product(a: &IntegerLattice, b: &IntegerLattice, mul: &StructureConstants) -> Result<IntegerLattice> {
    a.check_same(b)?;
    if a.ambient_rank != mul.rank() {
        return Err(Error::Dimension(alloc::format!(
            "lattice rank {} against ring rank {}",
            a.ambient_rank,
            mul.rank()
        )));
    }
    let mut m = IntMatrix::zeros(0, a.ambient_rank);
    for x in a.basis_rows() {
        for y in b.basis_rows() {
            m.push_row(&mul.mul(&x, &y));
        }
    }
    Ok(IntegerLattice::from_matrix(&m))
}

/// HNF of the row span of `m`.
pub fn hnf(m: &IntMatrix) -> IntegerLattice {
    IntegerLattice::from_matrix(m)
}
