use std::sync::Arc;

use crate::charmap::ModuleAlgebra;
use crate::exactla::{Field, Scalar, SparseMatrix};
use crate::hopf::ModularPair;

use super::{group_algebra, CatalogError, GroupPresentation};

/// A module algebra with a modular pair and a trace candidate.
#[derive(Clone, Debug)]
pub struct ModuleAlgebraExample {
    pub algebra: ModuleAlgebra,
    pub pair: ModularPair,
    pub trace: Vec<(usize, Scalar)>,
}

fn pointwise(n: usize) -> SparseMatrix {
    SparseMatrix::from_triplets(n, n * n, (0..n).map(|k| (k, k * n + k, Scalar::one()))).expect("in range")
}

fn point_labels(n: usize) -> Vec<String> {
    (0..n).map(|k| format!("e{k}")).collect()
}

/// `k[ℤ/n]` acting on functions on `ℤ/n` by `(g·f)(h) = f(hg)`, in the basis
/// of point indicators `e_k`, with `τ = Σ_h f(h)` and the pair `(ε, 1)`.
pub fn translation_module(n: usize, field: Arc<Field>) -> Result<ModuleAlgebraExample, CatalogError> {
    let (h, pair) = group_algebra(&GroupPresentation::cyclic(n), field)?;
    // g^j · e_k = e_{k-j}
    let action = SparseMatrix::from_triplets(
        n,
        n * n,
        (0..n).flat_map(|j| (0..n).map(move |k| ((k + n - j) % n, j * n + k, Scalar::one()))),
    )?;
    let unit = (0..n).map(|k| (k, Scalar::one())).collect();
    let algebra = ModuleAlgebra::new(h, point_labels(n), pointwise(n), unit, action)?;
    Ok(ModuleAlgebraExample { algebra, pair, trace: haar_trace(n) })
}

/// `τ(f) = Σ_h f(h)`.
pub fn haar_trace(n: usize) -> Vec<(usize, Scalar)> {
    (0..n).map(|k| (k, Scalar::one())).collect()
}

/// `τ(f) = f(e)`: a trace on a commutative algebra that is not invariant.
pub fn evaluation_trace() -> Vec<(usize, Scalar)> {
    vec![(0, Scalar::one())]
}

/// A non-example: every `g^j ≠ 1` acts by `e_k ↦ e_{k-j} + e_k`, which is
/// not multiplicative.
pub fn broken_translation_module(n: usize, field: Arc<Field>) -> Result<ModuleAlgebraExample, CatalogError> {
    let mut ex = translation_module(n, field)?;
    let extra: Vec<(usize, usize, Scalar)> =
        (1..n).flat_map(|j| (0..n).map(move |k| (k, j * n + k, Scalar::one()))).collect();
    let bump = SparseMatrix::from_triplets(n, n * n, extra)?;
    ex.algebra.action = ex.algebra.action.add(&bump)?;
    Ok(ex)
}

/// `k[ℤ/2]` acting on `M₂(k)` by conjugation with `u = diag(1, −1)`, with
/// the pair `(ε, g)` and `τ(y) = tr(u y)`. Basis `E11, E12, E21, E22`.
pub fn conjugation_module(field: Arc<Field>) -> Result<ModuleAlgebraExample, CatalogError> {
    let (h, _) = group_algebra(&GroupPresentation::cyclic(2), field)?;
    let idx = |r: usize, c: usize| 2 * r + c;
    let mut mult = Vec::new();
    for (r, c, s) in (0..2).flat_map(|r| (0..2).flat_map(move |c| (0..2).map(move |s| (r, c, s)))) {
        // E_rc E_cs = E_rs
        mult.push((idx(r, s), idx(r, c) * 4 + idx(c, s), Scalar::one()));
    }
    let mult = SparseMatrix::from_triplets(4, 16, mult)?;
    let sign = |r: usize| if r == 0 { 1 } else { -1 };
    let action = SparseMatrix::from_triplets(
        4,
        8,
        (0..2).flat_map(|r| (0..2).map(move |c| (r, c))).flat_map(|(r, c)| {
            [
                (idx(r, c), idx(r, c), Scalar::one()),
                (idx(r, c), 4 + idx(r, c), Scalar::from_int(sign(r) * sign(c))),
            ]
        }),
    )?;
    let labels = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
    let unit = vec![(idx(0, 0), Scalar::one()), (idx(1, 1), Scalar::one())];
    let g = h.basis_vector(1);
    let pair = ModularPair::new(&h, h.counit.clone(), g)?;
    let algebra = ModuleAlgebra::new(h, labels, mult, unit, action)?;
    let trace = vec![(idx(0, 0), Scalar::one()), (idx(1, 1), Scalar::from_int(-1))];
    Ok(ModuleAlgebraExample { algebra, pair, trace })
}
