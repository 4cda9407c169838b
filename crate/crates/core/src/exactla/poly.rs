//! Dense univariate polynomials over the rationals and over the integers.
//!
//! Coefficient vectors are stored lowest degree first and kept trimmed: the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type QPoly = Vec<BigRational>;

pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigRational], c: &BigRational) -> QPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem: QPoly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            let t = &c * bk;
            rem[shift + k] -= t;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `g = gcd(a, m)` (monic) and `s·a ≡ g (mod m)`.
pub fn ext_gcd_left(a: &[BigRational], m: &[BigRational]) -> (QPoly, QPoly) {
    let mut r0: QPoly = m.to_vec();
    let mut r1: QPoly = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(d) = degree(&r0) {
        let inv = r0[d].recip();
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
    }
    (r0, s0)
}

pub fn from_ints(c: &[i64]) -> QPoly {
    let mut p: QPoly = c.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    trim(&mut p);
    p
}

/// Integer polynomial division, exact; `b` must be monic.
fn zdiv_exact_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + db].clone();
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] -= &c * bk;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `n`-th cyclotomic polynomial with integer coefficients, lowest degree first.
pub fn cyclotomic_z(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_k for every proper divisor k of n.
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for k in 1..n {
        if n % k == 0 {
            p = zdiv_exact_monic(&p, &cyclotomic_z(k));
        }
    }
    p
}

pub fn cyclotomic(n: usize) -> QPoly {
    cyclotomic_z(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// Outcome of the irreducibility test on an extension modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    /// Proven irreducible over the rationals.
    Verified,
    /// Not examined: degree above the trial-factorization bound and not a
    /// recognised cyclotomic polynomial, or explicitly skipped by the caller.
    Unchecked,
    /// A nontrivial factor was found.
    Reducible,
}

/// Largest degree for which Kronecker trial factorization is attempted.
pub const TRIAL_FACTOR_DEGREE_BOUND: usize = 6;

/// Decides irreducibility of a monic rational polynomial of degree ≥ 1.
///
/// Cyclotomic polynomials are recognised directly (any degree). Otherwise the
/// polynomial is cleared to a primitive integer polynomial and Kronecker's
/// method searches for an integer factor of every degree up to half the
/// degree; by Gauss's lemma this decides irreducibility over the rationals.
pub fn irreducibility(p: &[BigRational]) -> Irreducibility {
    let deg = match degree(p) {
        Some(d) if d >= 1 => d,
        _ => return Irreducibility::Reducible,
    };
    if deg == 1 {
        return Irreducibility::Verified;
    }
    let z = to_primitive_integer(p);
    if is_cyclotomic(&z, deg) {
        return Irreducibility::Verified;
    }
    if deg > TRIAL_FACTOR_DEGREE_BOUND {
        return Irreducibility::Unchecked;
    }
    for k in 1..=deg / 2 {
        match kronecker_has_factor(&z, k) {
            Some(true) => return Irreducibility::Reducible,
            Some(false) => {}
            None => return Irreducibility::Unchecked,
        }
    }
    Irreducibility::Verified
}

fn to_primitive_integer(p: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p {
        den = den.lcm(c.denom());
    }
    let mut z: Vec<BigInt> = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &z {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut z {
            *c = &*c / &g;
        }
    }
    while z.last().is_some_and(Zero::is_zero) {
        z.pop();
    }
    if z.last().is_some_and(Signed::is_negative) {
        for c in &mut z {
            *c = -&*c;
        }
    }
    z
}

fn is_cyclotomic(z: &[BigInt], deg: usize) -> bool {
    // φ(n) ≥ sqrt(n/2), so n ≤ 2·deg² bounds the candidates.
    let bound = 2 * deg * deg + 2;
    (1..=bound).any(|n| {
        let c = cyclotomic_z(n);
        c.len() == deg + 1 && c.as_slice() == z
    })
}

fn zeval(z: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    z.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i: i128 = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Searches for an integer factor of degree exactly `k`.
/// `None` when the sample values are too large to enumerate divisors.
fn kronecker_has_factor(z: &[BigInt], k: usize) -> Option<bool> {
    let mut samples: Vec<(i64, BigInt)> = Vec::new();
    for x in (-12i64..=12).map(|x| x) {
        let v = zeval(z, x);
        if v.is_zero() {
            // integer root: a linear factor exists
            return Some(true);
        }
        samples.push((x, v));
    }
    samples.sort_by(|a, b| a.1.abs().cmp(&b.1.abs()).then(a.0.cmp(&b.0)));
    let pts: Vec<(i64, i128)> = samples
        .iter()
        .take(k + 1)
        .map(|(x, v)| v.to_i128().map(|v| (*x, v)))
        .collect::<Option<_>>()?;
    if pts.iter().any(|(_, v)| v.unsigned_abs() > 1u128 << 40) {
        return None;
    }
    let divs: Vec<Vec<i128>> = pts
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let d = divisors(*v);
            if i == 0 {
                d
            } else {
                d.iter().flat_map(|&x| [x, -x]).collect()
            }
        })
        .collect();
    let xs: Vec<BigRational> = pts
        .iter()
        .map(|(x, _)| BigRational::from_integer((*x).into()))
        .collect();
    let zq: QPoly = z.iter().cloned().map(BigRational::from_integer).collect();
    let mut choice = vec![0usize; k + 1];
    loop {
        let ys: Vec<BigRational> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| BigRational::from_integer(divs[i][c].into()))
            .collect();
        let cand = lagrange(&xs, &ys);
        if degree(&cand) == Some(k) && cand.iter().all(|c| c.is_integer()) {
            let (_, r) = div_rem(&zq, &cand);
            if r.is_empty() {
                return Some(true);
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Some(false);
            }
            choice[pos] += 1;
            if choice[pos] < divs[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn lagrange(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let mut out: QPoly = Vec::new();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis: QPoly = vec![BigRational::one()];
        let mut den = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = mul(&basis, &[-xj.clone(), BigRational::one()]);
                den *= xi - xj;
            }
        }
        out = add(&out, &scale(&basis, &(&ys[i] / den)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(3), from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = from_ints(&[3, 0, 2, 5, 1]);
        let b = from_ints(&[1, 1, 1]);
        let (q, r) = div_rem(&a, &b);
        assert!(degree(&r).map_or(true, |d| d < 2));
        assert_eq!(add(&mul(&q, &b), &r), a);
    }

    #[test]
    fn irreducibility_decisions() {
        assert_eq!(irreducibility(&from_ints(&[1, 1, 1])), Irreducibility::Verified);
        assert_eq!(irreducibility(&from_ints(&[-2, 0, 1])), Irreducibility::Verified);
        assert_eq!(irreducibility(&from_ints(&[-1, 0, 1])), Irreducibility::Reducible);
        // (x^2+1)(x^2+2)
        assert_eq!(irreducibility(&from_ints(&[2, 0, 3, 0, 1])), Irreducibility::Reducible);
        // x^4 + 1 is Φ_8
        assert_eq!(irreducibility(&from_ints(&[1, 0, 0, 0, 1])), Irreducibility::Verified);
        // x^3 - 2
        assert_eq!(irreducibility(&from_ints(&[-2, 0, 0, 1])), Irreducibility::Verified);
        // (x^3 + x + 1)(x^3 - x + 1)... degree 6 product
        let p = mul(&from_ints(&[1, 1, 0, 1]), &from_ints(&[1, -1, 0, 1]));
        assert_eq!(irreducibility(&p), Irreducibility::Reducible);
        // degree 7 non-cyclotomic is beyond the bound
        assert_eq!(
            irreducibility(&from_ints(&[-2, 0, 0, 0, 0, 0, 0, 1])),
            Irreducibility::Unchecked
        );
        // but Φ_7 is recognised at any degree (degree 6 here), Φ_9 too
        assert_eq!(irreducibility(&cyclotomic(9)), Irreducibility::Verified);
        assert_eq!(irreducibility(&cyclotomic(11)), Irreducibility::Verified);
    }
}
