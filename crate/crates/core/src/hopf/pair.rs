use crate::exactla::TensorMap;
use crate::report::{Check, Report, Witness};

use super::elements::{is_character, is_group_like, pairing, twisted_antipode_unchecked};
use super::{HopfAlgebra, HopfError};

/// A character `δ` and a group-like `σ` of a Hopf algebra.
///
/// `normalized` records `δ(σ) = 1`; `in_involution` records
/// `(σ⁻¹ S̃)² = id` together with normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair {
    pub delta: TensorMap,
    pub sigma: TensorMap,
    pub sigma_inv: TensorMap,
    pub normalized: bool,
    pub in_involution: bool,
}

impl ModularPair {
    /// Validates `δ` as a character and `σ` as a group-like and computes both
    /// flags. A pair that is not in involution is still a valid value.
    pub fn new(h: &HopfAlgebra, delta: TensorMap, sigma: TensorMap) -> Result<Self, HopfError> {
        let ch = is_character(h, &delta)?;
        if !ch.all_passed() {
            return Err(HopfError::NotCharacter(ch));
        }
        let gl = is_group_like(h, &sigma)?;
        if !gl.all_passed() {
            return Err(HopfError::NotGroupLike(gl));
        }
        let sigma_inv = h.inverse(&sigma).ok_or(HopfError::NotInvertible { what: "sigma" })?;
        let mut pair = ModularPair { delta, sigma, sigma_inv, normalized: false, in_involution: false };
        let rep = involution_checks(h, &pair);
        pair.normalized = rep.passed("normalized");
        pair.in_involution = pair.normalized && rep.passed("involution");
        Ok(pair)
    }

    /// The trivial pair `(ε, 1)`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        Self::new(h, h.counit.clone(), h.unit.clone()).expect("(ε, 1) is always a modular pair")
    }

    /// The twisted antipode associated with `δ`.
    pub fn twisted_antipode(&self, h: &HopfAlgebra) -> TensorMap {
        twisted_antipode_unchecked(h, &self.delta)
    }

    /// `h ↦ σ⁻¹ · S̃(h)`.
    pub fn doubly_twisted_antipode(&self, h: &HopfAlgebra) -> TensorMap {
        h.left_mult_op(&self.sigma_inv)
            .compose(&self.twisted_antipode(h))
            .expect("arity")
    }
}

fn involution_checks(h: &HopfAlgebra, pair: &ModularPair) -> Report {
    let mut r = Report::new();
    let ds = pairing(&pair.delta, &pair.sigma);
    r.push(if ds.is_one() {
        Check::pass("normalized")
    } else {
        Check::fail(
            "normalized",
            Some(Witness::Note(format!("δ(σ) = {}", h.field.format_scalar(&ds)))),
        )
    });

    let t = pair.doubly_twisted_antipode(h);
    let t2 = t.compose(&t).expect("arity");
    let inv_form = t2.first_difference(&h.id(1));
    r.push(Check::from_difference("involution", inv_form.clone()));

    // S̃²(h) = σ h σ⁻¹
    let st = pair.twisted_antipode(h);
    let st2 = st.compose(&st).expect("arity");
    let conj = h.conjugation_op(&pair.sigma, &pair.sigma_inv);
    let conj_form = st2.first_difference(&conj);
    r.push(Check::from_difference("twisted_square_is_conjugation", conj_form.clone()));

    // With δ(σ) = 1 the two formulations are equivalent.
    if ds.is_one() {
        r.push(Check::from_bool("formulations_agree", inv_form.is_none() == conj_form.is_none()));
    }
    r
}

/// Full report for the involution condition of a modular pair: `δ(σ) = 1`,
/// `(σ⁻¹S̃)² = id`, the equivalent form `S̃²(h) = σhσ⁻¹`, and agreement of
/// the two forms. Passes iff the pair is a modular pair in involution.
pub fn is_modular_pair_in_involution(h: &HopfAlgebra, pair: &ModularPair) -> Report {
    involution_checks(h, pair)
}
