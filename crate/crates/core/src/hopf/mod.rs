//! Finite-dimensional Hopf algebras given by structure constants.

mod axioms;
mod dual;
mod elements;
mod pair;
mod quasi;

use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{tensor, Field, LinalgError, Scalar, SparseMatrix, TensorMap};
use crate::report::Report;

pub use axioms::validate_hopf;
pub use dual::{dual, transport_pair, DualPair};
pub use elements::{
    check_twisted_antipode_properties, is_character, is_group_like, twisted_antipode,
};
pub use pair::{is_modular_pair_in_involution, ModularPair};
pub use quasi::{
    check_quasitriangular, double_cover, drinfeld_element, DoubleCover, DrinfeldElement,
    QuasitriangularCheck, QuasitriangularStructure,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("Hopf axioms fail: {}", failed_names(.0))]
    AxiomsFailed(Report),
    #[error("covector is not a character: {}", failed_names(.0))]
    NotCharacter(Report),
    #[error("vector is not group-like: {}", failed_names(.0))]
    NotGroupLike(Report),
    #[error("R is not a quasitriangular structure: {}", failed_names(.0))]
    NotQuasitriangular(Report),
    #[error("{what} is not invertible")]
    NotInvertible { what: &'static str },
    #[error("double cover construction failed: {}", failed_names(.0))]
    DoubleCover(Report),
}

fn failed_names(r: &Report) -> String {
    let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    names.join(", ")
}

/// The five structure tensors of a candidate Hopf algebra, not yet validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub field: Arc<Field>,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// μ: H⊗H → H
    pub mult: TensorMap,
    /// η: k → H
    pub unit: TensorMap,
    /// Δ: H → H⊗H
    pub comult: TensorMap,
    /// ε: H → k
    pub counit: TensorMap,
    /// S: H → H
    pub antipode: TensorMap,
}

/// A Hopf algebra whose axioms have been verified exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    data: HopfData,
}

impl Deref for HopfAlgebra {
    type Target = HopfData;
    fn deref(&self) -> &HopfData {
        &self.data
    }
}

impl HopfAlgebra {
    /// Validates the candidate; on failure returns the full axiom report.
    pub fn new(data: HopfData) -> Result<Self, HopfError> {
        let report = validate_hopf(&data)?;
        if !report.all_passed() {
            return Err(HopfError::AxiomsFailed(report));
        }
        Ok(HopfAlgebra { data })
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn into_data(self) -> HopfData {
        self.data
    }
}

impl HopfData {
    pub(crate) fn check_shapes(&self) -> Result<(), HopfError> {
        if self.dim == 0 {
            return Err(HopfError::Structure("dimension must be at least 1".into()));
        }
        if self.basis_labels.len() != self.dim {
            return Err(HopfError::Structure(format!(
                "{} basis labels for dimension {}",
                self.basis_labels.len(),
                self.dim
            )));
        }
        let shapes = [
            ("mult", &self.mult, 2, 1),
            ("unit", &self.unit, 0, 1),
            ("comult", &self.comult, 1, 2),
            ("counit", &self.counit, 1, 0),
            ("antipode", &self.antipode, 1, 1),
        ];
        for (name, map, dom, cod) in shapes {
            if map.base_dim() != self.dim {
                return Err(HopfError::Structure(format!(
                    "{name} has base dimension {} but the algebra has dimension {}",
                    map.base_dim(),
                    self.dim
                )));
            }
            if **map.field() != *self.field {
                return Err(HopfError::Structure(format!("{name} is over a different field")));
            }
            if map.domain_arity() != dom || map.codomain_arity() != cod {
                return Err(HopfError::Structure(format!(
                    "{name} has arity {}→{}, expected {dom}→{cod}",
                    map.domain_arity(),
                    map.codomain_arity()
                )));
            }
        }
        Ok(())
    }

    pub fn id(&self, arity: usize) -> TensorMap {
        TensorMap::identity(self.field.clone(), self.dim, arity)
    }

    pub fn swap(&self) -> TensorMap {
        TensorMap::swap(self.field.clone(), self.dim)
    }

    pub fn scalar(&self, s: Scalar) -> TensorMap {
        TensorMap::scalar(self.field.clone(), self.dim, s)
    }

    pub fn permutation(&self, perm: &[usize]) -> TensorMap {
        TensorMap::permutation(self.field.clone(), self.dim, perm).expect("valid permutation")
    }

    pub fn basis_vector(&self, i: usize) -> TensorMap {
        TensorMap::basis_vector(self.field.clone(), self.dim, &[i])
    }

    pub fn vector(&self, coords: &[(usize, Scalar)]) -> Result<TensorMap, HopfError> {
        Ok(TensorMap::vector(self.field.clone(), self.dim, 1, coords)?)
    }

    pub fn covector(&self, coords: &[(usize, Scalar)]) -> Result<TensorMap, HopfError> {
        Ok(TensorMap::covector(self.field.clone(), self.dim, 1, coords)?)
    }

    /// `1^{⊗k}` as a vector of arity `k`.
    pub fn unit_power(&self, k: usize) -> TensorMap {
        let mut acc = self.scalar(Scalar::one());
        for _ in 0..k {
            acc = acc.tensor(&self.unit).expect("same algebra");
        }
        acc
    }

    /// Componentwise product `H^{⊗k} ⊗ H^{⊗k} → H^{⊗k}`.
    pub fn mult_power(&self, k: usize) -> TensorMap {
        if k == 0 {
            return self.scalar(Scalar::one());
        }
        let mut perm = Vec::with_capacity(2 * k);
        for i in 0..k {
            perm.push(i);
            perm.push(k + i);
        }
        let mut mu = self.mult.clone();
        for _ in 1..k {
            mu = mu.tensor(&self.mult).expect("same algebra");
        }
        mu.compose(&self.permutation(&perm)).expect("arity 2k")
    }

    /// `mult_power(k) ∘ f` for `f` with codomain `H^{⊗2k}`, computed column by
    /// column so the `d^{2k}`-dimensional middle space is never materialized.
    pub fn multiply_slots(&self, f: &TensorMap) -> TensorMap {
        let (d, two_k) = (self.dim, f.codomain_arity());
        assert!(two_k % 2 == 0, "codomain arity must be even");
        let k = two_k / 2;
        let mult = self.mult.matrix();
        let mut triplets = Vec::new();
        for (col, column) in f.matrix().columns().iter().enumerate() {
            for (row, v) in column {
                let idx = tensor::decode(d, two_k, *row);
                let mut partial = vec![(0usize, v.clone())];
                for i in 0..k {
                    let c = mult.column(idx[i] * d + idx[k + i]);
                    partial = partial
                        .iter()
                        .flat_map(|(p, s)| c.iter().map(move |(r, m)| (p * d + r, self.field.mul(s, m))))
                        .collect();
                }
                triplets.extend(partial.into_iter().map(|(r, s)| (r, col, s)));
            }
        }
        let m = SparseMatrix::from_triplets(tensor::pow(d, k), f.matrix().cols(), triplets).expect("indices in range");
        TensorMap::from_matrix(self.field.clone(), d, f.domain_arity(), k, m).expect("shape")
    }

    /// Iterated coproduct `Δ^{(n-1)}: H → H^{⊗n}`; `n = 1` is the identity and
    /// `n = 0` is the counit.
    pub fn iterated_comult(&self, n: usize) -> TensorMap {
        match n {
            0 => self.counit.clone(),
            1 => self.id(1),
            _ => {
                let mut acc = self.comult.clone();
                for k in 3..=n {
                    let step = self.comult.tensor(&self.id(k - 2)).expect("same algebra");
                    acc = step.compose(&acc).expect("arity");
                }
                acc
            }
        }
    }

    /// Product of two elements of `H^{⊗k}`.
    pub fn product(&self, a: &TensorMap, b: &TensorMap) -> TensorMap {
        self.multiply_slots(&a.tensor(b).expect("same algebra"))
    }

    /// Left multiplication by `a ∈ H^{⊗k}` as an endomorphism of `H^{⊗k}`.
    pub fn left_mult_op(&self, a: &TensorMap) -> TensorMap {
        let k = a.codomain_arity();
        self.multiply_slots(&a.tensor(&self.id(k)).expect("same algebra"))
    }

    /// Right multiplication by `a ∈ H^{⊗k}`.
    pub fn right_mult_op(&self, a: &TensorMap) -> TensorMap {
        let k = a.codomain_arity();
        self.multiply_slots(&self.id(k).tensor(a).expect("same algebra"))
    }

    /// Two-sided inverse in the algebra `H^{⊗k}`, found by solving
    /// `a·x = 1` exactly and then confirming `x·a = 1`.
    pub fn inverse(&self, a: &TensorMap) -> Option<TensorMap> {
        let k = a.codomain_arity();
        let one = self.unit_power(k);
        let x = self.left_mult_op(a).solve(one.coords())?;
        let x = TensorMap::vector(self.field.clone(), self.dim, k, &x).ok()?;
        (self.product(&x, a) == one).then_some(x)
    }

    /// `a ↦ b a b⁻¹` as a map, given `b` and `b⁻¹`.
    pub fn conjugation_op(&self, b: &TensorMap, b_inv: &TensorMap) -> TensorMap {
        self.left_mult_op(b).compose(&self.right_mult_op(b_inv)).expect("arity")
    }

    /// Applies a `1 → n` map to a vector.
    pub fn apply(&self, f: &TensorMap, v: &TensorMap) -> TensorMap {
        f.compose(v).expect("composable")
    }

    pub fn is_commutative(&self) -> bool {
        self.mult == self.mult.compose(&self.swap()).expect("arity")
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult == self.swap().compose(&self.comult).expect("arity")
    }
}
