//! Exact verification of the cocyclic relations up to a given level.

use crate::exactla::TensorMap;
use crate::report::{Check, Report};

use super::{CocyclicModule, CyclicError};

/// Highest level at which the closed form of `τ_n^j` is compared.
pub const CLOSED_FORM_MAX_LEVEL: usize = 3;

fn eq(report: &mut Report, name: String, lhs: &TensorMap, rhs: &TensorMap) {
    report.push(Check::from_difference(name, lhs.first_difference(rhs)));
}

/// Checks every cosimplicial and cyclic relation that involves only levels
/// `0..=max_level`, plus `τ_n^j` against its closed form for `n ≤ 3`.
///
/// Check names carry the level and indices, e.g. `face_face[n=3,i=0,j=2]`
/// compares `δ_j δ_i` and `δ_i δ_{j-1}` as maps `C^{n-2} → C^n`.
pub fn verify_cocyclic(m: &CocyclicModule, max_level: usize) -> Result<Report, CyclicError> {
    m.check_level(max_level)?;
    let mut r = Report::new();

    // δ_j δ_i = δ_i δ_{j-1}, i < j, as maps C^{n-2} → C^n
    for n in 2..=max_level {
        for j in 1..=n {
            for i in 0..j {
                let lhs = m.face(n, j)?.compose(&*m.face(n - 1, i)?)?;
                let rhs = m.face(n, i)?.compose(&*m.face(n - 1, j - 1)?)?;
                eq(&mut r, format!("face_face[n={n},i={i},j={j}]"), &lhs, &rhs);
            }
        }
    }

    // σ_j σ_i = σ_i σ_{j+1}, i ≤ j, as maps C^{n+2} → C^n
    for n in 0..max_level.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let lhs = m.degeneracy(n, j)?.compose(&*m.degeneracy(n + 1, i)?)?;
                let rhs = m.degeneracy(n, i)?.compose(&*m.degeneracy(n + 1, j + 1)?)?;
                eq(&mut r, format!("degeneracy_degeneracy[n={n},i={i},j={j}]"), &lhs, &rhs);
            }
        }
    }

    // σ_j δ_i on C^n
    for n in 0..max_level {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = m.degeneracy(n, j)?.compose(&*m.face(n + 1, i)?)?;
                let rhs = if i < j {
                    m.face(n, i)?.compose(&*m.degeneracy(n - 1, j - 1)?)?
                } else if i == j || i == j + 1 {
                    m.hopf().id(n)
                } else {
                    m.face(n, i - 1)?.compose(&*m.degeneracy(n - 1, j)?)?
                };
                eq(&mut r, format!("degeneracy_face[n={n},i={i},j={j}]"), &lhs, &rhs);
            }
        }
    }

    // τ_n δ_i = δ_{i-1} τ_{n-1}, τ_n δ_0 = δ_n
    for n in 1..=max_level {
        let t = m.cyclic(n)?;
        eq(&mut r, format!("cyclic_face[n={n},i=0]"), &t.compose(&*m.face(n, 0)?)?, &*m.face(n, n)?);
        for i in 1..=n {
            let lhs = t.compose(&*m.face(n, i)?)?;
            let rhs = m.face(n, i - 1)?.compose(&*m.cyclic(n - 1)?)?;
            eq(&mut r, format!("cyclic_face[n={n},i={i}]"), &lhs, &rhs);
        }
    }

    // τ_n σ_i = σ_{i-1} τ_{n+1}, τ_n σ_0 = σ_n τ_{n+1}²
    for n in 0..max_level {
        let t = m.cyclic(n)?;
        let t1 = m.cyclic(n + 1)?;
        let lhs = t.compose(&*m.degeneracy(n, 0)?)?;
        let rhs = m.degeneracy(n, n)?.compose(&t1.compose(&t1)?)?;
        eq(&mut r, format!("cyclic_degeneracy[n={n},i=0]"), &lhs, &rhs);
        for i in 1..=n {
            let lhs = t.compose(&*m.degeneracy(n, i)?)?;
            let rhs = m.degeneracy(n, i - 1)?.compose(&t1)?;
            eq(&mut r, format!("cyclic_degeneracy[n={n},i={i}]"), &lhs, &rhs);
        }
    }

    // τ_n^{n+1} = id, with powers compared to the closed form on the way
    for n in 0..=max_level {
        let t = m.cyclic(n)?;
        let mut power = (*t).clone();
        for j in 1..=n + 1 {
            if j > 1 {
                power = t.compose(&power)?;
            }
            if n >= 1 && n <= CLOSED_FORM_MAX_LEVEL {
                let closed = m.cyclic_power_closed_form(n, j)?;
                eq(&mut r, format!("cyclic_power_closed_form[n={n},j={j}]"), &power, &closed);
            }
        }
        eq(&mut r, format!("cyclic_order[n={n}]"), &power, &m.hopf().id(n));
    }

    Ok(r)
}
