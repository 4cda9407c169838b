//! Column-compressed sparse matrices over a [`Field`].

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::LinalgError;

/// Sparse vector: strictly increasing indices, no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A `rows × cols` matrix stored column by column.
///
/// Every column is sorted by row index and holds no zero entries, so two
/// matrices are equal exactly when their `SparseMatrix` values are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

fn push_or_accumulate(acc: &mut BTreeMap<usize, Scalar>, row: usize, v: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(row) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &v;
        }
    }
}

fn finish(acc: BTreeMap<usize, Scalar>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed and
    /// zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(LinalgError::EntryOutOfRange { row: r, col: c, rows, cols });
            }
            push_or_accumulate(&mut acc[c], r, v);
        }
        Ok(SparseMatrix { rows, cols, columns: acc.into_iter().map(finish).collect() })
    }

    /// Builds from already canonical columns (sorted, nonzero).
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| {
            c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|(r, v)| *r < rows && !v.is_zero())
        }));
        SparseMatrix { rows, cols: columns.len(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.columns[col][k].1.clone())
            .unwrap_or_default()
    }

    /// All entries in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Row-major view: one sparse vector per row.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r].push((c, v.clone()));
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix { rows: self.cols, cols: self.rows, columns: self.row_vectors() }
    }

    /// `self ∘ rhs`, i.e. the matrix product `self · rhs`.
    pub fn compose(&self, field: &Field, rhs: &SparseMatrix) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "compose",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for (k, a) in col {
                    for (r, b) in &self.columns[*k] {
                        push_or_accumulate(&mut acc, *r, field.mul(b, a));
                    }
                }
                finish(acc)
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: rhs.cols, columns })
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, field: &Field, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (k, a) in v {
            for (r, b) in &self.columns[*k] {
                push_or_accumulate(&mut acc, *r, field.mul(b, a));
            }
        }
        finish(acc)
    }

    /// Kronecker product with the left factor most significant:
    /// entry `((i1, i2), (j1, j2))` is at row `i1·rhs.rows + i2`, column
    /// `j1·rhs.cols + j2`.
    pub fn kron(&self, field: &Field, rhs: &SparseMatrix) -> Self {
        let rows = self.rows * rhs.rows;
        let mut columns = Vec::with_capacity(self.cols * rhs.cols);
        for left in &self.columns {
            for right in &rhs.columns {
                let mut col = Vec::with_capacity(left.len() * right.len());
                for (i1, a) in left {
                    for (i2, b) in right {
                        col.push((i1 * rhs.rows + i2, field.mul(a, b)));
                    }
                }
                col.retain(|(_, v)| !v.is_zero());
                columns.push(col);
            }
        }
        SparseMatrix { rows, cols: self.cols * rhs.cols, columns }
    }

    fn zip_columns(&self, rhs: &SparseMatrix, op: &'static str, negate: bool) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| merge(a, b, negate))
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, columns })
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<Self, LinalgError> {
        self.zip_columns(rhs, "add", false)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<Self, LinalgError> {
        self.zip_columns(rhs, "sub", true)
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> Self {
        if c.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, field.mul(v, c))).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    /// First column (in index order) where the two matrices differ.
    pub fn first_difference(&self, rhs: &SparseMatrix) -> Option<usize> {
        self.columns
            .iter()
            .zip(&rhs.columns)
            .position(|(a, b)| a != b)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&SparseMatrix]) -> Result<Self, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut columns: Vec<SparseVec> = vec![Vec::new(); cols];
        let mut offset = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::ShapeMismatch {
                    op: "vstack",
                    left: (offset, cols),
                    right: (b.rows, b.cols),
                });
            }
            for (c, col) in b.columns.iter().enumerate() {
                columns[c].extend(col.iter().map(|(r, v)| (r + offset, v.clone())));
            }
            offset += b.rows;
        }
        Ok(SparseMatrix { rows: offset, cols, columns })
    }

    /// Block matrix from a grid of optional blocks; `row_sizes` and
    /// `col_sizes` fix the block shapes, `None` is a zero block.
    pub fn from_blocks(
        row_sizes: &[usize],
        col_sizes: &[usize],
        blocks: &[Vec<Option<&SparseMatrix>>],
    ) -> Result<Self, LinalgError> {
        let rows: usize = row_sizes.iter().sum();
        let mut columns: Vec<SparseVec> = Vec::with_capacity(col_sizes.iter().sum());
        for (bj, &w) in col_sizes.iter().enumerate() {
            for c in 0..w {
                let mut col = Vec::new();
                let mut offset = 0;
                for (bi, &h) in row_sizes.iter().enumerate() {
                    if let Some(b) = blocks[bi][bj] {
                        if b.rows != h || b.cols != w {
                            return Err(LinalgError::ShapeMismatch {
                                op: "from_blocks",
                                left: (h, w),
                                right: (b.rows, b.cols),
                            });
                        }
                        col.extend(b.columns[c].iter().map(|(r, v)| (r + offset, v.clone())));
                    }
                    offset += h;
                }
                columns.push(col);
            }
        }
        Ok(SparseMatrix { rows, cols: columns.len(), columns })
    }

    /// Permutation of tensor factors with the given dimensions: the basis
    /// vector `e_{i_0} ⊗ … ⊗ e_{i_{r-1}}` goes to the vector whose `k`-th
    /// factor is `e_{i_{perm[k]}}`.
    pub fn factor_permutation(dims: &[usize], perm: &[usize]) -> Result<Self, LinalgError> {
        let r = dims.len();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(LinalgError::BadPermutation(perm.to_vec()));
        }
        let n: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut digits = vec![0usize; r];
        let mut columns = Vec::with_capacity(n);
        for col in 0..n {
            decode_mixed(dims, col, &mut digits);
            let mut row = 0;
            for (k, &p) in perm.iter().enumerate() {
                row = row * out_dims[k] + digits[p];
            }
            columns.push(vec![(row, Scalar::one())]);
        }
        Ok(SparseMatrix { rows: n, cols: n, columns })
    }
}

fn merge(a: &[(usize, Scalar)], b: &[(usize, Scalar)], negate: bool) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = if negate { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Mixed-radix decoding with the first digit most significant.
pub fn decode_mixed(dims: &[usize], mut index: usize, out: &mut [usize]) {
    for k in (0..dims.len()).rev() {
        out[k] = index % dims[k];
        index /= dims[k];
    }
}
