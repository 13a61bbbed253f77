//! Hermite and Smith normal forms over `BigInt`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Row echelon form `H = U·M` with `U` unimodular.
///
/// `H` is the row-style Hermite normal form: pivots positive, entries above a
/// pivot reduced into `[0, pivot)`, zero rows last.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn echelon(m: &IntMatrix) -> Echelon {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            let (a, b) = (h[(r, c)].clone(), h[(i, c)].clone());
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (a_g, b_g) = (&a / &g, &b / &g);
            // [x y; -b/g a/g] has determinant 1
            combine_rows(&mut h, r, i, &x, &y, &-&b_g, &a_g);
            combine_rows(&mut u, r, i, &x, &y, &-&b_g, &a_g);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&p);
            if !q.is_zero() {
                h.add_row_multiple(i, r, &-&q);
                u.add_row_multiple(i, r, &-&q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { h, u, rank: r, pivots }
}

fn combine_rows(m: &mut IntMatrix, r: usize, i: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for j in 0..m.cols() {
        let (x, y) = (m[(r, j)].clone(), m[(i, j)].clone());
        m[(r, j)] = a * &x + b * &y;
        m[(i, j)] = c * &x + d * &y;
    }
}

/// Basis of `{x : x·M = 0}` as rows.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let e = echelon(m);
    let rows = (e.rank..m.rows()).map(|i| e.u.row(i).to_vec()).collect();
    IntMatrix::from_rows(m.rows(), rows)
}

/// Smith form `D = U·M·V`; only `V` and `V⁻¹` are kept.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Diagonal of `D`, length `min(rows, cols)`, nonnegative, `d_i | d_{i+1}`
    /// among the nonzero entries, zeros last.
    pub diag: Vec<BigInt>,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

pub fn smith(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);
    let n = rows.min(cols);

    let col_add = |a: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, dst: usize, src: usize, k: &BigInt| {
        a.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
        vi.add_row_multiple(src, dst, &-k);
    };
    let col_swap = |a: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, x: usize, y: usize| {
        a.swap_cols(x, y);
        v.swap_cols(x, y);
        vi.swap_rows(x, y);
    };

    let mut t = 0;
    while t < n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        col_swap(&mut a, &mut v, &mut v_inv, t, pj);
        loop {
            let p = a[(t, t)].clone();
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&p);
                a.add_row_multiple(i, t, &-q);
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    col_add(&mut a, &mut v, &mut v_inv, j, t, &-q);
                }
            }
            let mut rem: Option<(usize, bool)> = None;
            let mut rem_abs = BigInt::zero();
            for i in t + 1..rows {
                let x = a[(i, t)].abs();
                if !x.is_zero() && (rem.is_none() || x < rem_abs) {
                    rem = Some((i, true));
                    rem_abs = x;
                }
            }
            for j in t + 1..cols {
                let x = a[(t, j)].abs();
                if !x.is_zero() && (rem.is_none() || x < rem_abs) {
                    rem = Some((j, false));
                    rem_abs = x;
                }
            }
            match rem {
                Some((i, true)) => {
                    a.swap_rows(t, i);
                    continue;
                }
                Some((j, false)) => {
                    col_swap(&mut a, &mut v, &mut v_inv, t, j);
                    continue;
                }
                None => {}
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => a.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
        }
        t += 1;
    }
    let diag = (0..n).map(|i| a[(i, i)].clone()).collect();
    Smith { diag, v, v_inv }
}
