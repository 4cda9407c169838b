use crate::exactla::{Scalar, TensorMap};
use crate::report::{Check, Report};

use super::{HopfData, HopfError};

fn identity_check(name: &str, lhs: TensorMap, rhs: TensorMap) -> Check {
    Check::from_difference(name, lhs.first_difference(&rhs))
}

/// Checks every Hopf algebra axiom as an exact identity of tensor maps.
///
/// Each failing check carries the first basis multi-index (lexicographic) of
/// the domain where the two sides differ.
pub fn validate_hopf(h: &HopfData) -> Result<Report, HopfError> {
    h.check_shapes()?;
    let id = h.id(1);
    let mu = &h.mult;
    let eta = &h.unit;
    let delta = &h.comult;
    let eps = &h.counit;
    let s = &h.antipode;
    let mut r = Report::new();

    r.push(identity_check(
        "associativity",
        mu.compose(&mu.tensor(&id)?)?,
        mu.compose(&id.tensor(mu)?)?,
    ));
    r.push(identity_check("left_unit", mu.compose(&eta.tensor(&id)?)?, id.clone()));
    r.push(identity_check("right_unit", mu.compose(&id.tensor(eta)?)?, id.clone()));
    r.push(identity_check(
        "coassociativity",
        delta.tensor(&id)?.compose(delta)?,
        id.tensor(delta)?.compose(delta)?,
    ));
    r.push(identity_check("left_counit", eps.tensor(&id)?.compose(delta)?, id.clone()));
    r.push(identity_check("right_counit", id.tensor(eps)?.compose(delta)?, id.clone()));
    r.push(identity_check(
        "comult_multiplicative",
        delta.compose(mu)?,
        h.mult_power(2).compose(&delta.tensor(delta)?)?,
    ));
    r.push(identity_check("comult_unit", delta.compose(eta)?, eta.tensor(eta)?));
    r.push(identity_check("counit_multiplicative", eps.compose(mu)?, eps.tensor(eps)?));
    r.push(identity_check("counit_unit", eps.compose(eta)?, h.scalar(Scalar::one())));
    let eta_eps = eta.compose(eps)?;
    r.push(identity_check(
        "antipode_left",
        mu.compose(&s.tensor(&id)?)?.compose(delta)?,
        eta_eps.clone(),
    ));
    r.push(identity_check(
        "antipode_right",
        mu.compose(&id.tensor(s)?)?.compose(delta)?,
        eta_eps,
    ));
    Ok(r)
}
