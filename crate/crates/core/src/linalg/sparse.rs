use std::collections::BTreeMap;

use super::Scalar;

/// Sparse vector: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Scalar>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseRow, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (&k, x) in v {
        out[k] = x.clone();
    }
    out
}

/// `row -= f * other`.
fn axpy(row: &mut SparseRow, f: &Scalar, other: &SparseRow) {
    for (&k, x) in other {
        let entry = row.entry(k).or_insert_with(Scalar::zero);
        entry.sub_mul(f, x);
        if entry.is_zero() {
            row.remove(&k);
        }
    }
}

/// Incrementally built row-echelon basis of a row space. Each stored row
/// has leading entry 1 at its key and no entries left of it. Rows may carry
/// a tag vector that is transformed alongside them, which lets callers
/// track how reduced vectors decompose.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, (SparseRow, SparseRow)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the stored rows, applying the same operations
    /// to `tag`. Returns the remainder, which has no entry in a pivot column.
    pub fn reduce_tagged(&self, mut row: SparseRow, mut tag: SparseRow) -> (SparseRow, SparseRow) {
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(&c, f)| (c, f.clone()));
            let Some((c, f)) = next else { break };
            let (prow, ptag) = &self.pivots[&c];
            axpy(&mut row, &f, prow);
            axpy(&mut tag, &f, ptag);
            cursor = c + 1;
        }
        (row, tag)
    }

    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        self.reduce_tagged(row, SparseRow::new()).0
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns false when it was already in the span.
    pub fn insert_tagged(&mut self, row: SparseRow, tag: SparseRow) -> bool {
        let (mut row, mut tag) = self.reduce_tagged(row, tag);
        let Some((&lead, l)) = row.iter().next() else {
            return false;
        };
        let inv = l.inv().expect("nonzero lead");
        for x in row.values_mut() {
            *x *= &inv;
        }
        for x in tag.values_mut() {
            *x *= &inv;
        }
        self.pivots.insert(lead, (row, tag));
        true
    }

    pub fn insert(&mut self, row: SparseRow) -> bool {
        self.insert_tagged(row, SparseRow::new())
    }

    /// Basis of `{ x : r . x = 0 for every stored row r }`, one vector per
    /// free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[f] = Scalar::one();
                for (&k, (row, _)) in self.pivots.iter().rev() {
                    let mut acc = Scalar::zero();
                    for (&c, v) in row.range(k + 1..) {
                        if !x[c].is_zero() {
                            acc.sub_mul(v, &x[c]);
                        }
                    }
                    x[k] = acc;
                }
                x
            })
            .collect()
    }
}

/// Null space of the system given by sparse rows over `ncols` unknowns.
pub fn sparse_kernel(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel_basis, Matrix};

    #[test]
    fn kernel_agrees_with_dense() {
        let m = Matrix::from_ints(&[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1]]);
        let rows: Vec<SparseRow> = (0..3).map(|r| sparse_from_dense(m.row(r))).collect();
        let k = sparse_kernel(4, rows);
        assert_eq!(k.len(), kernel_basis(&m).len());
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn tags_track_combinations() {
        let mut e = Echelon::new(2);
        let mut t0 = SparseRow::new();
        t0.insert(0, Scalar::one());
        e.insert_tagged(sparse_from_dense(&[2.into(), 0.into()]), t0);
        // (4, 0) = 2 * (2, 0): reduction subtracts 2 copies of the tagged row
        let (rest, tag) = e.reduce_tagged(sparse_from_dense(&[4.into(), 0.into()]), SparseRow::new());
        assert!(rest.is_empty());
        assert_eq!(tag.get(&0), Some(&Scalar::from_int(-2)));
    }
}
