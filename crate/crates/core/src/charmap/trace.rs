use serde::Serialize;

use crate::exactla::sparse::decode_mixed;
use crate::exactla::{elim, Scalar, SparseMatrix};
use crate::hopf::ModularPair;
use crate::report::{Check, Witness};

use super::{CharmapError, ModuleAlgebra};

/// A functional on `A` with the two invariance flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCandidate {
    /// Coordinates of `τ` on the basis of `A`.
    #[serde(skip)]
    pub tau: Vec<(usize, Scalar)>,
    pub sigma_trace: bool,
    pub delta_invariant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_trace_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_invariance_witness: Option<Vec<usize>>,
}

impl TraceCandidate {
    pub fn evaluate(ma: &ModuleAlgebra, pair: &ModularPair, tau: Vec<(usize, Scalar)>) -> Result<Self, CharmapError> {
        let t = covector(ma, &tau)?;
        let s = sigma_trace_constraint(ma, pair).first_nonzero_after(&t, ma);
        let d = delta_constraint(ma, pair).first_nonzero_after(&t, ma);
        Ok(TraceCandidate {
            tau,
            sigma_trace: s.is_none(),
            delta_invariant: d.is_none(),
            sigma_trace_witness: s,
            delta_invariance_witness: d,
        })
    }

    pub fn is_valid(&self) -> bool {
        self.sigma_trace && self.delta_invariant
    }

    pub fn checks(&self) -> Vec<Check> {
        let mk = |name: &str, w: &Option<Vec<usize>>| match w {
            None => Check::pass(name),
            Some(idx) => Check::fail(name, Some(Witness::Basis(idx.clone()))),
        };
        vec![
            mk("sigma_trace", &self.sigma_trace_witness),
            mk("delta_invariant", &self.delta_invariance_witness),
        ]
    }
}

/// A linear constraint `τ ∘ C = 0` with the factor dimensions of the domain
/// of `C`, used to decode witnesses.
struct Constraint {
    matrix: SparseMatrix,
    dims: Vec<usize>,
}

impl Constraint {
    fn first_nonzero_after(&self, tau: &SparseMatrix, ma: &ModuleAlgebra) -> Option<Vec<usize>> {
        let row = ma.compose(tau, &self.matrix);
        let col = row.columns().iter().position(|c| !c.is_empty())?;
        let mut idx = vec![0; self.dims.len()];
        decode_mixed(&self.dims, col, &mut idx);
        Some(idx)
    }
}

pub(crate) fn covector(ma: &ModuleAlgebra, tau: &[(usize, Scalar)]) -> Result<SparseMatrix, CharmapError> {
    let entries = tau.iter().map(|(i, v)| (0, *i, v.clone()));
    Ok(SparseMatrix::from_triplets(1, ma.dim, entries)?)
}

/// `(a, b) ↦ ab − b σ(a)`.
fn sigma_trace_constraint(ma: &ModuleAlgebra, pair: &ModularPair) -> Constraint {
    let m = ma.dim;
    let sigma = ma.action_of(pair.sigma.matrix());
    let swap = SparseMatrix::factor_permutation(&[m, m], &[1, 0]).expect("valid permutation");
    let twisted = ma.compose(&ma.compose(&ma.mult, &swap), &ma.kron(&sigma, &ma.id(1)));
    Constraint { matrix: ma.mult.sub(&twisted).expect("same shape"), dims: vec![m, m] }
}

/// `(h, a, b) ↦ h(a) b − a S̃(h)(b)`.
fn delta_constraint(ma: &ModuleAlgebra, pair: &ModularPair) -> Constraint {
    let (d, m) = (ma.hopf.dim, ma.dim);
    let st = pair.twisted_antipode(&ma.hopf);
    let lhs = ma.compose(&ma.mult, &ma.kron(&ma.action, &ma.id(1)));
    let move_h = SparseMatrix::factor_permutation(&[d, m, m], &[1, 0, 2]).expect("valid permutation");
    let rhs = ma.compose(
        &ma.compose(&ma.mult, &ma.kron(&ma.id(1), &ma.action)),
        &ma.compose(&move_h, &ma.kron(st.matrix(), &ma.id(2))),
    );
    Constraint { matrix: lhs.sub(&rhs).expect("same shape"), dims: vec![d, m, m] }
}

/// `τ(ab) = τ(b σ(a))` for all basis pairs, `σ` acting on `A`.
pub fn is_sigma_trace(ma: &ModuleAlgebra, pair: &ModularPair, tau: &[(usize, Scalar)]) -> Result<Check, CharmapError> {
    let t = covector(ma, tau)?;
    let w = sigma_trace_constraint(ma, pair).first_nonzero_after(&t, ma);
    Ok(Check::from_difference("sigma_trace", w))
}

/// `τ(h(a) b) = τ(a S̃(h)(b))` for all basis triples.
pub fn is_delta_invariant(
    ma: &ModuleAlgebra,
    pair: &ModularPair,
    tau: &[(usize, Scalar)],
) -> Result<Check, CharmapError> {
    let t = covector(ma, tau)?;
    let w = delta_constraint(ma, pair).first_nonzero_after(&t, ma);
    Ok(Check::from_difference("delta_invariant", w))
}

/// A basis of all `τ` satisfying both conditions, as the kernel of the
/// stacked transposed constraints.
pub fn sigma_trace_space(ma: &ModuleAlgebra, pair: &ModularPair) -> Vec<Vec<(usize, Scalar)>> {
    let c1 = sigma_trace_constraint(ma, pair).matrix.transpose();
    let c2 = delta_constraint(ma, pair).matrix.transpose();
    let stacked = SparseMatrix::vstack(&[&c1, &c2]).expect("equal column counts");
    elim::rank_and_kernel(ma.field(), &stacked).kernel
}
