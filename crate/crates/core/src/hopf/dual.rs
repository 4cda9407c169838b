use crate::report::{Check, Report};

use super::pair::is_modular_pair_in_involution;
use super::{HopfAlgebra, HopfData, HopfError, ModularPair};

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

/// The dual Hopf algebra on `H*`, in the dual basis: every structure tensor
/// is transposed and product and coproduct (unit and counit) trade places.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let data = HopfData {
        field: h.field.clone(),
        dim: h.dim,
        basis_labels: h.basis_labels.iter().map(|l| dual_label(l)).collect(),
        mult: h.comult.transpose(),
        unit: h.counit.transpose(),
        comult: h.mult.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
    };
    HopfAlgebra::new(data)
}

/// A modular pair carried to the dual algebra.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub dual: HopfAlgebra,
    pub pair: ModularPair,
    pub report: Report,
}

/// Carries `(δ, σ)` on `H` to `(σ, δ)` on `H*`: the group-like `σ` becomes
/// the character `f ↦ f(σ)` and the character `δ` becomes a group-like of
/// `H*`. The report records whether involution is preserved.
pub fn transport_pair(h: &HopfAlgebra, pair: &ModularPair) -> Result<DualPair, HopfError> {
    let hd = dual(h)?;
    let dpair = ModularPair::new(&hd, pair.sigma.transpose(), pair.delta.transpose())?;
    let mut report = Report::new();
    report.push(Check::from_bool("normalization_preserved", dpair.normalized == pair.normalized));
    let orig = is_modular_pair_in_involution(h, pair).all_passed();
    let moved = is_modular_pair_in_involution(&hd, &dpair).all_passed();
    report.push(Check::from_bool("involution_preserved", orig == moved));
    Ok(DualPair { dual: hd, pair: dpair, report })
}
