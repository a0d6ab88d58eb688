#![allow(dead_code)]

use lencat::linalg::{Matrix, Scalar};
use lencat::quiverrep::QuiverRep;
use proptest::prelude::*;

/// Gaussian rationals with small numerators and denominators.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2, 1i64..=2).prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
}

pub fn real_int() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(real_int(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

/// An invertible matrix: unit lower times unit upper triangular, with a
/// permutation seed.
pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (
        proptest::collection::vec(real_int(), n * n),
        proptest::collection::vec(real_int(), n * n),
        0usize..24,
    )
        .prop_map(move |(l, u, p)| {
            let lower = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
                std::cmp::Ordering::Equal => Scalar::one(),
                std::cmp::Ordering::Greater => l[r * n + c].clone(),
                std::cmp::Ordering::Less => Scalar::zero(),
            });
            let upper = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
                std::cmp::Ordering::Equal => Scalar::one(),
                std::cmp::Ordering::Less => u[r * n + c].clone(),
                std::cmp::Ordering::Greater => Scalar::zero(),
            });
            let shift = if n == 0 { 0 } else { p % n };
            let perm = Matrix::from_fn(n, n, |r, c| {
                if (r + shift) % n == c {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            lower.mul(&upper).unwrap().mul(&perm).unwrap()
        })
}

/// Node-wise basis changes for a representation with the given dims.
pub fn basis_change(dims: Vec<usize>) -> impl Strategy<Value = Vec<Matrix>> {
    dims.into_iter().map(invertible).collect::<Vec<_>>()
}

pub fn rebased(x: &QuiverRep, g: &[Matrix]) -> QuiverRep {
    x.change_basis(g).unwrap()
}
