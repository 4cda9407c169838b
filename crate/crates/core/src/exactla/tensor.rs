//! Linear maps between tensor powers of a single finite-dimensional space.
//!
//! Multi-index convention: the basis vector `e_{i_1} ⊗ … ⊗ e_{i_k}` of
//! `V^{⊗k}` has linear index `i_1·d^{k-1} + … + i_k`, i.e. the leftmost
//! tensor factor is the most significant digit. `V^{⊗0}` is the ground field
//! with the single basis index `0`. Every construction in the crate relies on
//! this convention through [`TensorMap::tensor`].

use std::sync::Arc;

use super::elim::{self, RankKernel};
use super::field::{Field, Scalar};
use super::sparse::{SparseMatrix, SparseVec};
use super::LinalgError;

pub fn pow(d: usize, k: usize) -> usize {
    d.checked_pow(k as u32).expect("tensor power overflows usize")
}

pub fn encode(d: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * d + i)
}

pub fn decode(d: usize, arity: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for k in (0..arity).rev() {
        out[k] = index % d;
        index /= d;
    }
    out
}

/// A sparse linear map `V^{⊗m} → V^{⊗n}` with `dim V = base_dim`.
#[derive(Clone, Debug)]
pub struct TensorMap {
    field: Arc<Field>,
    base_dim: usize,
    domain_arity: usize,
    codomain_arity: usize,
    matrix: SparseMatrix,
}

impl PartialEq for TensorMap {
    fn eq(&self, other: &Self) -> bool {
        self.base_dim == other.base_dim
            && self.domain_arity == other.domain_arity
            && self.codomain_arity == other.codomain_arity
            && *self.field == *other.field
            && self.matrix == other.matrix
    }
}

impl Eq for TensorMap {}

impl TensorMap {
    pub fn from_matrix(
        field: Arc<Field>,
        base_dim: usize,
        domain_arity: usize,
        codomain_arity: usize,
        matrix: SparseMatrix,
    ) -> Result<Self, LinalgError> {
        let (r, c) = (pow(base_dim, codomain_arity), pow(base_dim, domain_arity));
        if matrix.rows() != r || matrix.cols() != c {
            return Err(LinalgError::ShapeMismatch {
                op: "from_matrix",
                left: (r, c),
                right: (matrix.rows(), matrix.cols()),
            });
        }
        Ok(TensorMap { field, base_dim, domain_arity, codomain_arity, matrix })
    }

    /// Builds from `(row multi-index, column multi-index, value)` entries.
    pub fn from_entries<I>(
        field: Arc<Field>,
        base_dim: usize,
        domain_arity: usize,
        codomain_arity: usize,
        entries: I,
    ) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>, Scalar)>,
    {
        let mut trip = Vec::new();
        for (row, col, v) in entries {
            if row.len() != codomain_arity
                || col.len() != domain_arity
                || row.iter().chain(&col).any(|&i| i >= base_dim)
            {
                return Err(LinalgError::MultiIndexOutOfRange { row, col, base_dim });
            }
            trip.push((encode(base_dim, &row), encode(base_dim, &col), v));
        }
        let matrix = SparseMatrix::from_triplets(
            pow(base_dim, codomain_arity),
            pow(base_dim, domain_arity),
            trip,
        )?;
        Ok(TensorMap { field, base_dim, domain_arity, codomain_arity, matrix })
    }

    pub fn identity(field: Arc<Field>, base_dim: usize, arity: usize) -> Self {
        let matrix = SparseMatrix::identity(pow(base_dim, arity));
        TensorMap { field, base_dim, domain_arity: arity, codomain_arity: arity, matrix }
    }

    pub fn zero(field: Arc<Field>, base_dim: usize, domain_arity: usize, codomain_arity: usize) -> Self {
        let matrix = SparseMatrix::zeros(pow(base_dim, codomain_arity), pow(base_dim, domain_arity));
        TensorMap { field, base_dim, domain_arity, codomain_arity, matrix }
    }

    /// The `0 → 0` map given by a scalar.
    pub fn scalar(field: Arc<Field>, base_dim: usize, value: Scalar) -> Self {
        let matrix = SparseMatrix::from_triplets(1, 1, [(0, 0, value)]).expect("1x1");
        TensorMap { field, base_dim, domain_arity: 0, codomain_arity: 0, matrix }
    }

    /// An element of `V^{⊗arity}` as a map from the ground field.
    pub fn vector(field: Arc<Field>, base_dim: usize, arity: usize, coords: &[(usize, Scalar)]) -> Result<Self, LinalgError> {
        let matrix = SparseMatrix::from_triplets(
            pow(base_dim, arity),
            1,
            coords.iter().map(|(i, v)| (*i, 0, v.clone())),
        )?;
        Ok(TensorMap { field, base_dim, domain_arity: 0, codomain_arity: arity, matrix })
    }

    /// A basis vector `e_{idx_1} ⊗ … ⊗ e_{idx_k}`.
    pub fn basis_vector(field: Arc<Field>, base_dim: usize, idx: &[usize]) -> Self {
        Self::vector(field, base_dim, idx.len(), &[(encode(base_dim, idx), Scalar::one())])
            .expect("basis index in range")
    }

    /// A linear form on `V^{⊗arity}`.
    pub fn covector(field: Arc<Field>, base_dim: usize, arity: usize, coords: &[(usize, Scalar)]) -> Result<Self, LinalgError> {
        let matrix = SparseMatrix::from_triplets(
            1,
            pow(base_dim, arity),
            coords.iter().map(|(i, v)| (0, *i, v.clone())),
        )?;
        Ok(TensorMap { field, base_dim, domain_arity: arity, codomain_arity: 0, matrix })
    }

    /// Permutes tensor factors: output factor `k` is input factor `perm[k]`.
    pub fn permutation(field: Arc<Field>, base_dim: usize, perm: &[usize]) -> Result<Self, LinalgError> {
        let dims = vec![base_dim; perm.len()];
        let matrix = SparseMatrix::factor_permutation(&dims, perm)?;
        Ok(TensorMap { field, base_dim, domain_arity: perm.len(), codomain_arity: perm.len(), matrix })
    }

    /// The flip `a ⊗ b ↦ b ⊗ a` on `V^{⊗2}`.
    pub fn swap(field: Arc<Field>, base_dim: usize) -> Self {
        Self::permutation(field, base_dim, &[1, 0]).expect("valid permutation")
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn domain_arity(&self) -> usize {
        self.domain_arity
    }

    pub fn codomain_arity(&self) -> usize {
        self.codomain_arity
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn nnz(&self) -> usize {
        self.matrix.nnz()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn check_compatible(&self, other: &TensorMap) -> Result<(), LinalgError> {
        if *self.field != *other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.base_dim != other.base_dim {
            return Err(LinalgError::BaseDimMismatch { left: self.base_dim, right: other.base_dim });
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &TensorMap) -> Result<TensorMap, LinalgError> {
        self.check_compatible(g)?;
        if self.domain_arity != g.codomain_arity {
            return Err(LinalgError::ArityMismatch {
                outer_domain: self.domain_arity,
                inner_codomain: g.codomain_arity,
            });
        }
        Ok(TensorMap {
            field: self.field.clone(),
            base_dim: self.base_dim,
            domain_arity: g.domain_arity,
            codomain_arity: self.codomain_arity,
            matrix: self.matrix.compose(&self.field, &g.matrix)?,
        })
    }

    /// `self ⊗ g`, acting on `V^{⊗(m+m')} → V^{⊗(n+n')}` with `self` on the
    /// leftmost factors.
    pub fn tensor(&self, g: &TensorMap) -> Result<TensorMap, LinalgError> {
        self.check_compatible(g)?;
        Ok(TensorMap {
            field: self.field.clone(),
            base_dim: self.base_dim,
            domain_arity: self.domain_arity + g.domain_arity,
            codomain_arity: self.codomain_arity + g.codomain_arity,
            matrix: self.matrix.kron(&self.field, &g.matrix),
        })
    }

    fn same_shape(&self, g: &TensorMap) -> Result<(), LinalgError> {
        self.check_compatible(g)?;
        if self.domain_arity != g.domain_arity || self.codomain_arity != g.codomain_arity {
            return Err(LinalgError::ArityMismatch {
                outer_domain: self.domain_arity,
                inner_codomain: g.domain_arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, g: &TensorMap) -> Result<TensorMap, LinalgError> {
        self.same_shape(g)?;
        Ok(TensorMap { matrix: self.matrix.add(&g.matrix)?, ..self.clone_shape() })
    }

    pub fn sub(&self, g: &TensorMap) -> Result<TensorMap, LinalgError> {
        self.same_shape(g)?;
        Ok(TensorMap { matrix: self.matrix.sub(&g.matrix)?, ..self.clone_shape() })
    }

    pub fn scale(&self, c: &Scalar) -> TensorMap {
        TensorMap { matrix: self.matrix.scale(&self.field, c), ..self.clone_shape() }
    }

    pub fn neg(&self) -> TensorMap {
        self.scale(&-Scalar::one())
    }

    fn clone_shape(&self) -> TensorMap {
        TensorMap {
            field: self.field.clone(),
            base_dim: self.base_dim,
            domain_arity: self.domain_arity,
            codomain_arity: self.codomain_arity,
            matrix: SparseMatrix::zeros(0, 0),
        }
    }

    /// The transpose `(V^{⊗n})* → (V^{⊗m})*`, read through the dual basis as
    /// a map `V^{⊗n} → V^{⊗m}` under the same multi-index convention.
    pub fn transpose(&self) -> TensorMap {
        TensorMap {
            field: self.field.clone(),
            base_dim: self.base_dim,
            domain_arity: self.codomain_arity,
            codomain_arity: self.domain_arity,
            matrix: self.matrix.transpose(),
        }
    }

    /// `self^k` for an endomorphism; `k = 0` is the identity.
    pub fn power(&self, k: usize) -> Result<TensorMap, LinalgError> {
        if self.domain_arity != self.codomain_arity {
            return Err(LinalgError::ArityMismatch {
                outer_domain: self.domain_arity,
                inner_codomain: self.codomain_arity,
            });
        }
        let mut acc = TensorMap::identity(self.field.clone(), self.base_dim, self.domain_arity);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Coordinates of the image of basis column `col`.
    pub fn column(&self, col: usize) -> &[(usize, Scalar)] {
        self.matrix.column(col)
    }

    /// For a `0 → n` map (a vector), its coordinates.
    pub fn coords(&self) -> &[(usize, Scalar)] {
        debug_assert_eq!(self.domain_arity, 0);
        self.matrix.column(0)
    }

    /// For a `0 → 0` map, its scalar value.
    pub fn as_scalar(&self) -> Scalar {
        debug_assert!(self.domain_arity == 0 && self.codomain_arity == 0);
        self.matrix.get(0, 0)
    }

    /// First domain basis multi-index at which the two maps differ.
    pub fn first_difference(&self, other: &TensorMap) -> Option<Vec<usize>> {
        if self.same_shape(other).is_err() {
            return Some(Vec::new());
        }
        self.matrix
            .first_difference(&other.matrix)
            .map(|c| decode(self.base_dim, self.domain_arity, c))
    }

    pub fn rank_and_kernel(&self) -> RankKernel {
        elim::rank_and_kernel(&self.field, &self.matrix)
    }

    pub fn rank(&self) -> usize {
        elim::rank(&self.field, &self.matrix)
    }

    /// Some `x` with `self·x = rhs` (both as coordinate vectors).
    pub fn solve(&self, rhs: &[(usize, Scalar)]) -> Option<SparseVec> {
        elim::solve(&self.field, &self.matrix, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multi_index_round_trip() {
        assert_eq!(encode(3, &[1, 2, 0]), 15);
        assert_eq!(decode(3, 3, 15), vec![1, 2, 0]);
        assert_eq!(decode(5, 0, 0), Vec::<usize>::new());
    }

    #[test]
    fn swap_squared_is_identity() {
        let q = Field::rationals();
        let s = TensorMap::swap(q.clone(), 3);
        assert_eq!(s.nnz(), 9);
        assert_eq!(s.compose(&s).unwrap(), TensorMap::identity(q, 3, 2));
    }

    #[test]
    fn compose_arity_error_names_both() {
        let q = Field::rationals();
        let a = TensorMap::identity(q.clone(), 2, 2);
        let b = TensorMap::identity(q, 2, 1);
        match a.compose(&b) {
            Err(LinalgError::ArityMismatch { outer_domain: 2, inner_codomain: 1 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = TensorMap::identity(Field::rationals(), 2, 1);
        let b = TensorMap::identity(Field::cyclotomic(3), 2, 1);
        assert!(matches!(a.tensor(&b), Err(LinalgError::FieldMismatch)));
    }

    #[test]
    fn identity_tensor_identity() {
        let q = Field::rationals();
        let i = TensorMap::identity(q.clone(), 3, 1);
        assert_eq!(i.tensor(&i).unwrap(), TensorMap::identity(q, 3, 2));
    }
}
