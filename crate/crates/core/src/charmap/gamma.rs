use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::CocyclicModule;
use crate::exactla::{tensor, Scalar, SparseMatrix, TensorMap};
use crate::hopf::ModularPair;
use crate::report::{Check, Report, Witness};

use super::trace::covector;
use super::{validate_action, CharmapError, ModuleAlgebra, TraceCandidate};

/// The cyclic operator used on `A`-cochains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicConvention {
    /// `(tφ)(x⁰,…,xⁿ) = φ(xⁿ, x⁰, …, xⁿ⁻¹)`.
    #[default]
    Rotation,
    /// `(tφ)(x⁰,…,xⁿ) = φ(σ(xⁿ), x⁰, …, xⁿ⁻¹)`.
    SigmaRotation,
}

/// `γ_n` as an `m^{n+1} × d^n` matrix: column `c` holds the coordinates of
/// `(x⁰,…,xⁿ) ↦ τ(x⁰ c¹(x¹) ⋯ cⁿ(xⁿ))`.
pub fn characteristic_matrix(ma: &ModuleAlgebra, tau: &SparseMatrix, n: usize) -> SparseMatrix {
    let (d, m) = (ma.hopf.dim, ma.dim);
    let dn = d.pow(n as u32);
    let mn = m.pow(n as u32);
    // functional on A ⊗ H^{⊗n} ⊗ A^{⊗n}
    let acted = ma.kron(&ma.id(1), &ma.action_power(n));
    let f = ma.compose(&ma.compose(tau, &ma.product_power(n + 1)), &acted);
    let entries = f.columns().iter().enumerate().filter_map(|(k, col)| {
        let v = col.first()?.1.clone();
        let (x0, rest) = (k / (dn * mn), k % (dn * mn));
        let (c, xs) = (rest / mn, rest % mn);
        Some((x0 * mn + xs, c, v))
    });
    SparseMatrix::from_triplets(m * mn, dn, entries).expect("indices in range")
}

/// `γ(c)` for `c ∈ H^{⊗n}`, as a `1 × m^{n+1}` covector. Refuses `τ` that
/// is not an invariant σ-trace for `pair`.
pub fn characteristic_cochain(
    ma: &ModuleAlgebra,
    pair: &ModularPair,
    tau: &[(usize, Scalar)],
    c: &TensorMap,
) -> Result<SparseMatrix, CharmapError> {
    let cand = TraceCandidate::evaluate(ma, pair, tau.to_vec())?;
    if !cand.is_valid() {
        let mut r = Report::new();
        cand.checks().into_iter().for_each(|ch| r.push(ch));
        return Err(CharmapError::InvalidTrace(r));
    }
    if c.domain_arity() != 0 || c.base_dim() != ma.hopf.dim {
        return Err(CharmapError::Dimension("c must be an element of a tensor power of H".into()));
    }
    let t = covector(ma, tau)?;
    let g = characteristic_matrix(ma, &t, c.codomain_arity());
    Ok(ma.compose(&g, c.matrix()).transpose())
}

struct CochainOps<'a> {
    ma: &'a ModuleAlgebra,
}

impl CochainOps<'_> {
    fn rotation(&self, n: usize) -> SparseMatrix {
        let dims = vec![self.ma.dim; n + 1];
        let perm: Vec<usize> = std::iter::once(n).chain(0..n).collect();
        SparseMatrix::factor_permutation(&dims, &perm).expect("valid permutation")
    }

    /// `A^{⊗(n+1)} → A^{⊗n}` whose transpose is the `i`-th face on cochains.
    fn merge(&self, n: usize, i: usize) -> SparseMatrix {
        let ma = self.ma;
        if i < n {
            ma.kron(&ma.kron(&ma.id(i), &ma.mult), &ma.id(n - 1 - i))
        } else {
            ma.compose(&ma.kron(&ma.mult, &ma.id(n - 1)), &self.rotation(n))
        }
    }

    /// `A^{⊗(n+1)} → A^{⊗(n+2)}`, inserting `1` after `x^i`.
    fn insert_unit(&self, n: usize, i: usize) -> SparseMatrix {
        let ma = self.ma;
        ma.kron(&ma.kron(&ma.id(i + 1), &ma.unit), &ma.id(n - i))
    }

    fn cyclic(&self, n: usize, pair: &ModularPair, convention: CyclicConvention) -> SparseMatrix {
        let ma = self.ma;
        match convention {
            CyclicConvention::Rotation => self.rotation(n),
            CyclicConvention::SigmaRotation => {
                let sigma = ma.action_of(pair.sigma.matrix());
                ma.compose(&ma.kron(&sigma, &ma.id(n)), &self.rotation(n))
            }
        }
    }

    fn check(&self, name: String, level: usize, lhs: &SparseMatrix, rhs: &SparseMatrix) -> Check {
        match lhs.first_difference(rhs) {
            None => Check::pass(name),
            Some(col) => Check::fail(name, Some(Witness::Basis(tensor::decode(self.ma.hopf.dim, level, col)))),
        }
    }
}

/// [`verify_characteristic_map_with`] under the rotation convention.
pub fn verify_characteristic_map(
    ma: &ModuleAlgebra,
    pair: &ModularPair,
    tau: &[(usize, Scalar)],
    max_level: usize,
) -> Result<Report, CharmapError> {
    verify_characteristic_map_with(ma, pair, tau, max_level, CyclicConvention::Rotation)
}

/// Checks `γ ∘ op = op_A ∘ γ` for every face, degeneracy and cyclic operator
/// at levels `≤ max_level`, plus `γ ∘ b = b_A ∘ γ`. Action and trace checks
/// are included (prefixed `action.` and `trace.`) but do not stop the run,
/// so an invalid `τ` shows which intertwining identities it breaks.
/// Witnesses are basis multi-indices of `H^{⊗k}` for the source level `k`.
pub fn verify_characteristic_map_with(
    ma: &ModuleAlgebra,
    pair: &ModularPair,
    tau: &[(usize, Scalar)],
    max_level: usize,
    convention: CyclicConvention,
) -> Result<Report, CharmapError> {
    let module = CocyclicModule::new(ma.hopf.clone(), pair.clone())?;
    module.check_level(max_level + 1)?;
    let mut report = Report::new();
    report.extend_prefixed("action.", validate_action(ma));
    let cand = TraceCandidate::evaluate(ma, pair, tau.to_vec())?;
    for c in cand.checks() {
        report.push(Check { name: format!("trace.{}", c.name), ..c });
    }

    let t = covector(ma, tau)?;
    let gammas: Vec<SparseMatrix> =
        (0..=max_level + 1).into_par_iter().map(|n| characteristic_matrix(ma, &t, n)).collect();
    let ops = CochainOps { ma };
    let per_level: Vec<Result<Vec<Check>, CharmapError>> = (0..=max_level)
        .into_par_iter()
        .map(|n| {
            let mut out = Vec::new();
            if n >= 1 {
                let mut b_h = SparseMatrix::zeros(gammas[n].cols(), gammas[n - 1].cols());
                let mut b_a = SparseMatrix::zeros(gammas[n].rows(), gammas[n - 1].rows());
                for i in 0..=n {
                    let face = module.face(n, i)?;
                    let merge_t = ops.merge(n, i).transpose();
                    let lhs = ma.compose(&gammas[n], face.matrix());
                    let rhs = ma.compose(&merge_t, &gammas[n - 1]);
                    out.push(ops.check(format!("face[n={n},i={i}]"), n - 1, &lhs, &rhs));
                    let sign = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                    b_h = b_h.add(&face.matrix().scale(ma.field(), &sign))?;
                    b_a = b_a.add(&merge_t.scale(ma.field(), &sign))?;
                }
                let lhs = ma.compose(&gammas[n], &b_h);
                let rhs = ma.compose(&b_a, &gammas[n - 1]);
                out.push(ops.check(format!("hochschild_b[n={n}]"), n - 1, &lhs, &rhs));
            }
            for i in 0..=n {
                let deg = module.degeneracy(n, i)?;
                let lhs = ma.compose(&gammas[n], deg.matrix());
                let rhs = ma.compose(&ops.insert_unit(n, i).transpose(), &gammas[n + 1]);
                out.push(ops.check(format!("degeneracy[n={n},i={i}]"), n + 1, &lhs, &rhs));
            }
            let cyc = module.cyclic(n)?;
            let lhs = ma.compose(&gammas[n], cyc.matrix());
            let rhs = ma.compose(&ops.cyclic(n, pair, convention).transpose(), &gammas[n]);
            out.push(ops.check(format!("cyclic[n={n}]"), n, &lhs, &rhs));
            Ok(out)
        })
        .collect();
    for checks in per_level {
        checks?.into_iter().for_each(|c| report.push(c));
    }
    Ok(report)
}
