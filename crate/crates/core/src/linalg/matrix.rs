use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    row.len(),
                    cols
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), cols, |r, c| Scalar::from_int(rows[r][c]))
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{}: {:?} vs {:?}",
                op,
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {:?} * {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(r, c)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "mul_vec: {:?} * {}",
                self.shape(),
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack: row counts differ".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack: column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |r, c| {
            if r < a.rows && c < a.cols {
                a[(r, c)].clone()
            } else if r >= a.rows && c >= a.cols {
                b[(r - a.rows, c - a.cols)].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows.start + r, cols.start + c)].clone()
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = Scalar::zero();
        for k in 0..self.rows {
            t += &self[(k, k)];
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = self.hstack(&Matrix::identity(n)).ok()?;
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    pub fn pow(&self, e: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Matrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// One-line text form `RxC: a b ; c d`, used by the file formats.
    pub fn to_line(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("{}x{}: {}", self.rows, self.cols, rows.join(" ; "))
    }

    /// Inverse of [`Matrix::to_line`]. Entries must not contain spaces.
    pub fn parse_line(s: &str) -> Result<Matrix> {
        let (shape, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("matrix `{}` lacks `RxC:`", s)))?;
        let (r, c) = shape
            .trim()
            .split_once('x')
            .ok_or_else(|| Error::Parse(format!("bad matrix shape `{}`", shape)))?;
        let parse_dim = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad matrix shape `{}`", shape)))
        };
        let (rows, cols) = (parse_dim(r)?, parse_dim(c)?);
        let body = body.trim();
        let row_texts: Vec<&str> = if body.is_empty() {
            Vec::new()
        } else {
            body.split(';').collect()
        };
        if rows * cols == 0 {
            if row_texts.iter().any(|t| !t.trim().is_empty()) {
                return Err(Error::Parse(format!("entries given for empty matrix `{}`", s)));
            }
            return Ok(Matrix::zeros(rows, cols));
        }
        if row_texts.len() != rows {
            return Err(Error::Parse(format!("expected {} rows in `{}`", rows, s)));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for text in row_texts {
            let entries: Vec<&str> = text.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::Parse(format!("expected {} columns in `{}`", cols, s)));
            }
            for e in entries {
                data.push(e.parse::<Scalar>()?);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Reduced row-echelon form and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prow = 0;
    let cols = a.cols;
    for col in 0..cols {
        if prow == a.rows {
            break;
        }
        let Some(found) = (prow..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(prow, found);
        let inv = a[(prow, col)].inv().expect("nonzero pivot");
        let mut support = Vec::new();
        for c in col..cols {
            let idx = prow * cols + c;
            if !a.data[idx].is_zero() {
                a.data[idx] = &a.data[idx] * &inv;
                support.push((c, a.data[idx].clone()));
            }
        }
        for r in 0..a.rows {
            if r == prow {
                continue;
            }
            let f = a[(r, col)].clone();
            if f.is_zero() {
                continue;
            }
            for (c, v) in &support {
                a.data[r * cols + c].sub_mul(&f, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    (a, pivots)
}

/// Basis of the null space, as column vectors.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            let e = &r[(row, free)];
            if !e.is_zero() {
                v[p] = -e;
            }
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows but right-hand side of length {}",
            a.rows,
            b.len()
        )));
    }
    let aug = a.hstack(&Matrix::column_vector(b))?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); a.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, a.cols)].clone();
    }
    Ok(Some(x))
}

/// Indices of a maximal linearly independent subset of the columns,
/// chosen greedily left to right.
pub fn independent_columns(m: &Matrix) -> Vec<usize> {
    rref(m).1
}

/// `trace(a * b)` without forming the product.
pub fn trace_of_product(a: &Matrix, b: &Matrix) -> Result<Scalar> {
    if a.rows != b.cols || a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "trace_of_product: {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let mut t = Scalar::zero();
    for k in 0..a.rows {
        for l in 0..a.cols {
            let x = &a[(k, l)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(l, k)];
            if !y.is_zero() {
                t += &(x * y);
            }
        }
    }
    Ok(t)
}

/// Radical of the algebra spanned by block-diagonal elements, each given as
/// a list of square blocks (one per block position). Returns coefficient
/// vectors, relative to `basis`, spanning the kernel of the trace form
/// `(a, b) -> tr(ab)`; in characteristic zero this is the Jacobson radical.
pub fn algebra_radical_coefficients(basis: &[Vec<Matrix>]) -> Result<Vec<Vec<Scalar>>> {
    let m = basis.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let nblocks = basis[0].len();
    for element in basis {
        if element.len() != nblocks {
            return Err(Error::DimensionMismatch(
                "algebra elements with different block counts".into(),
            ));
        }
        for (b, block) in element.iter().enumerate() {
            if !block.is_square() {
                return Err(Error::NotSquare {
                    rows: block.rows(),
                    cols: block.cols(),
                });
            }
            if block.shape() != basis[0][b].shape() {
                return Err(Error::DimensionMismatch(
                    "algebra elements with inconsistent block sizes".into(),
                ));
            }
        }
    }
    let mut gram = Matrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let mut t = Scalar::zero();
            for b in 0..nblocks {
                t += &trace_of_product(&basis[i][b], &basis[j][b])?;
            }
            gram[(j, i)] = t.clone();
            gram[(i, j)] = t;
        }
    }
    Ok(kernel_basis(&gram))
}

/// Basis of the Jacobson radical of the unital algebra spanned by `basis`.
pub fn algebra_radical(basis: &[Matrix]) -> Result<Vec<Matrix>> {
    let blocks: Vec<Vec<Matrix>> = basis.iter().map(|b| vec![b.clone()]).collect();
    let coefficients = algebra_radical_coefficients(&blocks)?;
    coefficients
        .iter()
        .map(|coef| {
            let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
            for (c, b) in coef.iter().zip(basis) {
                if !c.is_zero() {
                    acc = acc.add(&b.scale(c))?;
                }
            }
            Ok(acc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::identity(2));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = rref(&Matrix::zeros(3, 3));
        assert_eq!(r, Matrix::zeros(3, 3));
        assert!(p.is_empty());

        let (r, p) = rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
        let k = kernel_basis(&Matrix::zeros(3, 3));
        assert_eq!(k.len(), 3);
        let k = kernel_basis(&Matrix::from_ints(&[&[1, 1]]));
        assert_eq!(k, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), int(-2)];
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b.clone()));

        let a = Matrix::from_ints(&[&[1, 1]]);
        let x = solve(&a, &[int(1)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![int(1)]);

        let a = Matrix::from_ints(&[&[1], &[1]]);
        assert_eq!(solve(&a, &[int(1), int(2)]).unwrap(), None);
        assert!(solve(&a, &[int(1)]).is_err());
    }

    #[test]
    fn radical_examples() {
        assert!(algebra_radical(&[Matrix::identity(2)]).unwrap().is_empty());

        let n = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let rad = algebra_radical(&[Matrix::identity(2), n.clone()]).unwrap();
        assert_eq!(rad, vec![n]);

        let full: Vec<Matrix> = (0..4)
            .map(|k| Matrix::from_fn(2, 2, |r, c| if r * 2 + c == k { int(1) } else { int(0) }))
            .collect();
        assert!(algebra_radical(&full).unwrap().is_empty());

        assert!(algebra_radical(&[Matrix::zeros(2, 3)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
