use super::{kernel_basis, rref, solve, Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `k^n`, stored by a canonical basis (the rows of the
/// reduced echelon form of any spanning set) so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    /// `ambient x dim`, columns are the canonical basis.
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the columns of `m`.
    pub fn span(m: &Matrix) -> Self {
        let (r, pivots) = rref(&m.transpose());
        let basis = Matrix::from_fn(m.rows(), pivots.len(), |row, c| r[(c, row)].clone());
        Subspace {
            ambient: m.rows(),
            basis,
        }
    }

    pub fn span_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::span(&Matrix::from_columns(ambient, vectors))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        matches!(solve(&self.basis, v), Ok(Some(_)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.columns().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        solve(&self.basis, v)?.ok_or_else(|| Error::DimensionMismatch("vector not in subspace".into()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::span(&self.basis.hstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        let stacked = self.basis.hstack(&other.basis.neg())?;
        let vectors: Vec<Vec<Scalar>> = kernel_basis(&stacked)
            .into_iter()
            .map(|k| self.basis.mul_vec(&k[..self.dim()]))
            .collect::<Result<_>>()?;
        Ok(Subspace::span_vectors(self.ambient, &vectors))
    }

    /// Image of this subspace under `f`.
    pub fn image(&self, f: &Matrix) -> Result<Subspace> {
        Ok(Subspace::span(&f.mul(&self.basis)?))
    }

    /// `{ v : f v in self }` for a linear map `f` into the ambient space.
    pub fn preimage(&self, f: &Matrix) -> Result<Subspace> {
        if f.rows() != self.ambient {
            return Err(Error::DimensionMismatch("preimage: codomain mismatch".into()));
        }
        let stacked = f.hstack(&self.basis.neg())?;
        let vectors: Vec<Vec<Scalar>> = kernel_basis(&stacked)
            .into_iter()
            .map(|k| k[..f.cols()].to_vec())
            .collect();
        Ok(Subspace::span_vectors(f.cols(), &vectors))
    }

    /// Standard basis vectors completing this subspace to the ambient space,
    /// chosen greedily in pivot order. Returned as an `ambient x codim` matrix.
    pub fn complement(&self) -> Matrix {
        let aug = self
            .basis
            .hstack(&Matrix::identity(self.ambient))
            .expect("same row count");
        let picked: Vec<usize> = rref(&aug)
            .1
            .into_iter()
            .filter(|&p| p >= self.dim())
            .map(|p| p - self.dim())
            .collect();
        Matrix::identity(self.ambient).select_columns(&picked)
    }
}
