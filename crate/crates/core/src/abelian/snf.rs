//! Smith normal form with recorded unimodular transforms.
//!
//! The pivot rule is fixed (smallest nonzero absolute value in the active
//! submatrix, ties broken row-major) so the change-of-basis matrices are
//! reproducible run to run; every canonical coordinate downstream depends on
//! them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · m · v = d`, with `u_inv`, `v_inv` the exact inverses of `u`, `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

struct Reducer {
    m: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.m.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.m.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in k..self.m.rows() {
            for j in k..self.m.cols() {
                let a = self.m[(i, j)].abs();
                if a.is_zero() {
                    continue;
                }
                if best.as_ref().map_or(true, |(_, b)| a < *b) {
                    best = Some(((i, j), a));
                }
            }
        }
        best.map(|(ij, _)| ij)
    }

    /// Clears row and column `k` with Euclidean steps; returns `false` when a
    /// nonzero remainder was left behind and a new pivot must be chosen.
    fn clear_cross(&mut self, k: usize) -> bool {
        let mut clean = true;
        for i in k + 1..self.m.rows() {
            if self.m[(i, k)].is_zero() {
                continue;
            }
            let q = self.m[(i, k)].div_floor(&self.m[(k, k)]);
            self.add_row(i, k, &-q);
            clean &= self.m[(i, k)].is_zero();
        }
        for j in k + 1..self.m.cols() {
            if self.m[(k, j)].is_zero() {
                continue;
            }
            let q = self.m[(k, j)].div_floor(&self.m[(k, k)]);
            self.add_col(j, k, &-q);
            clean &= self.m[(k, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, k: usize) -> Option<usize> {
        let p = &self.m[(k, k)];
        for i in k + 1..self.m.rows() {
            for j in k + 1..self.m.cols() {
                if !self.m[(i, j)].is_multiple_of(p) {
                    return Some(i);
                }
            }
        }
        None
    }
}

pub fn snf(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        m: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    'outer: for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = r.pivot(k) else {
                break 'outer;
            };
            r.swap_rows(k, pi);
            r.swap_cols(k, pj);
            if !r.clear_cross(k) {
                continue;
            }
            match r.non_divisible_row(k) {
                Some(i) => r.add_row(k, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.m[(k, k)].is_negative() {
            r.negate_row(k);
        }
    }
    SnfResult {
        u: r.u,
        d: r.m,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
    }
}
