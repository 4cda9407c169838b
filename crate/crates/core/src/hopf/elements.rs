use crate::exactla::{Scalar, TensorMap};
use crate::report::{Check, Report, Witness};

use super::{HopfAlgebra, HopfError};

fn expect_shape(t: &TensorMap, h: &HopfAlgebra, dom: usize, cod: usize, what: &str) -> Result<(), HopfError> {
    if t.base_dim() != h.dim || t.domain_arity() != dom || t.codomain_arity() != cod || **t.field() != *h.field {
        return Err(HopfError::Structure(format!(
            "{what} must be a {dom}→{cod} map on the algebra's base space"
        )));
    }
    Ok(())
}

/// Group-likeness of `s`: `Δs = s⊗s`, `ε(s) = 1`, `s` invertible; the
/// identity `S(s) = s⁻¹` is checked and reported alongside.
pub fn is_group_like(h: &HopfAlgebra, s: &TensorMap) -> Result<Report, HopfError> {
    expect_shape(s, h, 0, 1, "group-like candidate")?;
    let mut r = Report::new();
    r.push(Check::from_bool("comult", h.comult.compose(s)? == s.tensor(s)?));
    r.push(Check::from_bool("counit", h.counit.compose(s)?.as_scalar().is_one()));
    match h.inverse(s) {
        Some(inv) => {
            r.push(Check::pass("invertible"));
            r.push(Check::from_bool("antipode_is_inverse", h.antipode.compose(s)? == inv));
        }
        None => {
            r.push(Check::fail("invertible", Some(Witness::Note("a·x = 1 has no solution".into()))));
            r.push(Check::fail("antipode_is_inverse", None));
        }
    }
    Ok(r)
}

/// Character test: `f(ab) = f(a) f(b)` on all basis pairs and `f(1) = 1`.
pub fn is_character(h: &HopfAlgebra, f: &TensorMap) -> Result<Report, HopfError> {
    expect_shape(f, h, 1, 0, "character candidate")?;
    let mut r = Report::new();
    r.push(Check::from_difference(
        "multiplicative",
        f.compose(&h.mult)?.first_difference(&f.tensor(f)?),
    ));
    r.push(Check::from_bool("unital", f.compose(&h.unit)?.as_scalar().is_one()));
    Ok(r)
}

/// The δ-twisted antipode `S̃ = S ∘ (δ ⊗ id) ∘ Δ`, i.e.
/// `S̃(h) = Σ δ(h₍₁₎) S(h₍₂₎)`.
pub fn twisted_antipode(h: &HopfAlgebra, delta: &TensorMap) -> Result<TensorMap, HopfError> {
    let rep = is_character(h, delta)?;
    if !rep.all_passed() {
        return Err(HopfError::NotCharacter(rep));
    }
    Ok(twisted_antipode_unchecked(h, delta))
}

pub(crate) fn twisted_antipode_unchecked(h: &HopfAlgebra, delta: &TensorMap) -> TensorMap {
    let weight = delta.tensor(&h.id(1)).expect("same algebra");
    h.antipode
        .compose(&weight.compose(&h.comult).expect("arity"))
        .expect("arity")
}

/// Verifies the three structural properties of the twisted antipode:
/// antihomomorphism with `S̃(1) = 1`, `ΔS̃(h) = Σ S(h₍₂₎) ⊗ S̃(h₍₁₎)`,
/// and `ε ∘ S̃ = δ`.
pub fn check_twisted_antipode_properties(h: &HopfAlgebra, delta: &TensorMap) -> Result<Report, HopfError> {
    let st = twisted_antipode(h, delta)?;
    let mut r = Report::new();

    let lhs = st.compose(&h.mult)?;
    let rhs = h.mult.compose(&st.tensor(&st)?)?.compose(&h.swap())?;
    let mut anti = Check::from_difference("antihomomorphism", lhs.first_difference(&rhs));
    if anti.passed && st.compose(&h.unit)? != h.unit {
        anti = Check::fail("antihomomorphism", Some(Witness::Note("S̃(1) ≠ 1".into())));
    }
    r.push(anti);

    let lhs = h.comult.compose(&st)?;
    let rhs = h.antipode.tensor(&st)?.compose(&h.swap())?.compose(&h.comult)?;
    r.push(Check::from_difference("twisted_antimorphism", lhs.first_difference(&rhs)));

    r.push(Check::from_difference(
        "counit_twist",
        h.counit.compose(&st)?.first_difference(delta),
    ));
    Ok(r)
}

/// `δ(σ)` for a covector and a vector.
pub(crate) fn pairing(delta: &TensorMap, sigma: &TensorMap) -> Scalar {
    delta.compose(sigma).expect("1→0 after 0→1").as_scalar()
}
