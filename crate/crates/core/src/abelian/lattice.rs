//! Integer lattice helpers built on the Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{snf, IntMatrix};

/// A basis (as columns) of the integer kernel `{x : m·x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = snf::snf(m);
    let rank = s.rank();
    let idx: Vec<usize> = (rank..m.cols()).collect();
    s.v.select_cols(&idx)
}

/// A basis (as columns) of the lattice spanned by the columns of `m`.
pub fn column_basis(m: &IntMatrix) -> IntMatrix {
    let s = snf::snf(m);
    let factors = s.invariant_factors();
    let mut b = s.u_inv.select_cols(&(0..factors.len()).collect::<Vec<_>>());
    for (j, d) in factors.iter().enumerate() {
        for i in 0..b.rows() {
            b[(i, j)] *= d;
        }
    }
    b
}

/// An integer solution of `m·x = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length");
    let s = snf::snf(m);
    let ub = s.u.mul_vec(b);
    let diag = s.diagonal();
    let mut w = vec![BigInt::zero(); m.cols()];
    for (i, y) in ub.iter().enumerate() {
        match diag.get(i).filter(|d| !d.is_zero()) {
            Some(d) => {
                let (q, r) = y.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                w[i] = q;
            }
            None if !y.is_zero() => return None,
            None => {}
        }
    }
    Some(s.v.mul_vec(&w))
}
