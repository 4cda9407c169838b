use std::sync::Arc;

use crate::exactla::sparse::decode_mixed;
use crate::exactla::{Field, Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;
use crate::report::{Check, Report, Witness};

use super::CharmapError;

/// An algebra `A` of dimension `m` with an action `H ⊗ A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub hopf: HopfAlgebra,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `m × m²`, column `a·m + b` holds `ab`.
    pub mult: SparseMatrix,
    /// `m × 1`.
    pub unit: SparseMatrix,
    /// `m × d·m`, column `h·m + a` holds `h(a)`.
    pub action: SparseMatrix,
}

impl ModuleAlgebra {
    /// Checks shapes only; see [`validate_action`] for the axioms.
    pub fn new(
        hopf: HopfAlgebra,
        basis_labels: Vec<String>,
        mult: SparseMatrix,
        unit: SparseVec,
        action: SparseMatrix,
    ) -> Result<Self, CharmapError> {
        let m = basis_labels.len();
        let d = hopf.dim;
        let bad = |what: &str, got: (usize, usize), want: (usize, usize)| {
            CharmapError::Dimension(format!("{what} is {}x{}, expected {}x{}", got.0, got.1, want.0, want.1))
        };
        if (mult.rows(), mult.cols()) != (m, m * m) {
            return Err(bad("multiplication", (mult.rows(), mult.cols()), (m, m * m)));
        }
        if (action.rows(), action.cols()) != (m, d * m) {
            return Err(bad("action", (action.rows(), action.cols()), (m, d * m)));
        }
        if unit.iter().any(|(i, _)| *i >= m) {
            return Err(CharmapError::Dimension(format!("unit has an index outside 0..{m}")));
        }
        let unit = SparseMatrix::from_columns(m, vec![unit]);
        Ok(ModuleAlgebra { hopf, dim: m, basis_labels, mult, unit, action })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.hopf.field
    }

    pub fn id(&self, k: usize) -> SparseMatrix {
        SparseMatrix::identity(self.dim.pow(k as u32))
    }

    pub(crate) fn kron(&self, a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
        a.kron(self.field(), b)
    }

    pub(crate) fn compose(&self, a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
        a.compose(self.field(), b).expect("conforming shapes")
    }

    /// The operator `a ↦ h(a)` for an element `h ∈ H` given as a `d × 1`
    /// column.
    pub fn action_of(&self, h: &SparseMatrix) -> SparseMatrix {
        self.compose(&self.action, &self.kron(h, &self.id(1)))
    }

    /// `H^{⊗n} ⊗ A^{⊗n} → A^{⊗n}`, `(h¹…hⁿ, a¹…aⁿ) ↦ h¹(a¹)⊗…⊗hⁿ(aⁿ)`.
    pub fn action_power(&self, n: usize) -> SparseMatrix {
        let (d, m) = (self.hopf.dim, self.dim);
        if n == 0 {
            return SparseMatrix::identity(1);
        }
        let mut acts = self.action.clone();
        for _ in 1..n {
            acts = self.kron(&acts, &self.action);
        }
        let dims: Vec<usize> = std::iter::repeat(d).take(n).chain(std::iter::repeat(m).take(n)).collect();
        let perm: Vec<usize> = (0..n).flat_map(|k| [k, n + k]).collect();
        let interleave = SparseMatrix::factor_permutation(&dims, &perm).expect("valid permutation");
        self.compose(&acts, &interleave)
    }

    /// Left-to-right product `A^{⊗k} → A`; `k = 0` is the unit.
    pub fn product_power(&self, k: usize) -> SparseMatrix {
        match k {
            0 => self.unit.clone(),
            1 => self.id(1),
            _ => {
                let mut acc = self.mult.clone();
                for j in 3..=k {
                    acc = self.compose(&self.mult, &self.kron(&acc, &self.id(1)));
                    debug_assert_eq!(acc.cols(), self.dim.pow(j as u32));
                }
                acc
            }
        }
    }
}

fn compare(name: &str, dims: &[usize], lhs: &SparseMatrix, rhs: &SparseMatrix) -> Check {
    match lhs.first_difference(rhs) {
        None if lhs == rhs => Check::pass(name),
        None => Check::fail(name, Some(Witness::Note("shape mismatch".into()))),
        Some(col) => {
            let mut idx = vec![0; dims.len()];
            decode_mixed(dims, col, &mut idx);
            Check::fail(name, Some(Witness::Basis(idx)))
        }
    }
}

/// Associativity and unit of `A`, the module axioms `h(k(a)) = (hk)(a)` and
/// `1(a) = a`, the module-algebra rule `h(ab) = h₍₁₎(a) h₍₂₎(b)`, and
/// `h(1) = ε(h)1`. Witnesses are multi-indices over `(H…, A…)` factors.
pub fn validate_action(ma: &ModuleAlgebra) -> Report {
    let (d, m) = (ma.hopf.dim, ma.dim);
    let h = &ma.hopf;
    let mut r = Report::new();
    let id1 = ma.id(1);

    let lhs = ma.compose(&ma.mult, &ma.kron(&ma.mult, &id1));
    let rhs = ma.compose(&ma.mult, &ma.kron(&id1, &ma.mult));
    r.push(compare("algebra_associative", &[m, m, m], &lhs, &rhs));
    let left = ma.compose(&ma.mult, &ma.kron(&ma.unit, &id1));
    let right = ma.compose(&ma.mult, &ma.kron(&id1, &ma.unit));
    r.push(compare("algebra_left_unit", &[m], &left, &id1));
    r.push(compare("algebra_right_unit", &[m], &right, &id1));

    let idh = SparseMatrix::identity(d);
    let lhs = ma.compose(&ma.action, &ma.kron(&idh, &ma.action));
    let rhs = ma.compose(&ma.action, &ma.kron(h.mult.matrix(), &id1));
    r.push(compare("module_associative", &[d, d, m], &lhs, &rhs));
    let unit_act = ma.action_of(h.unit.matrix());
    r.push(compare("module_unit", &[m], &unit_act, &id1));

    let lhs = ma.compose(&ma.action, &ma.kron(&idh, &ma.mult));
    let spread = SparseMatrix::factor_permutation(&[d, d, m, m], &[0, 2, 1, 3]).expect("valid permutation");
    let rhs = ma.compose(
        &ma.compose(&ma.mult, &ma.kron(&ma.action, &ma.action)),
        &ma.compose(&spread, &ma.kron(h.comult.matrix(), &ma.id(2))),
    );
    r.push(compare("module_algebra", &[d, m, m], &lhs, &rhs));

    let lhs = ma.compose(&ma.action, &ma.kron(&idh, &ma.unit));
    let rhs = ma.compose(&ma.unit, h.counit.matrix());
    r.push(compare("unit_action", &[d], &lhs, &rhs));
    r
}

impl ModuleAlgebra {
    /// `A` as a module algebra over `H` via `h(a) = ε(h) a`.
    pub fn trivial_action(
        hopf: HopfAlgebra,
        basis_labels: Vec<String>,
        mult: SparseMatrix,
        unit: SparseVec,
    ) -> Result<Self, CharmapError> {
        let m = basis_labels.len();
        let counit = hopf.counit.matrix().clone();
        let action = counit.kron(&hopf.field, &SparseMatrix::identity(m));
        Self::new(hopf, basis_labels, mult, unit, action)
    }

    /// The ground field as a one-dimensional module algebra.
    pub fn ground_field(hopf: HopfAlgebra) -> Self {
        let mult = SparseMatrix::identity(1);
        Self::trivial_action(hopf, vec!["1".into()], mult, vec![(0, Scalar::one())]).expect("dimension 1")
    }
}
