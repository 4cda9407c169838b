//! Exact scalar fields: the rationals and simple extensions `ℚ[z]/(m(z))`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::{self, Irreducibility, QPoly};

/// An element of an exact field.
///
/// Stored as the coefficients (lowest degree first, trailing zeros trimmed) of
/// the canonical representative of degree below the field's modulus degree.
/// Over the rationals this is either empty (zero) or a single coefficient, so
/// equality of `Scalar`s is equality of field elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar(Vec<BigRational>);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Vec::new())
    }

    pub fn one() -> Self {
        Scalar(vec![BigRational::one()])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Scalar(Vec::new())
        } else {
            Scalar(vec![q])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Coefficients in the power basis of the extension, lowest degree first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    /// The value as a rational number when it lies in the prime field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    fn from_poly_unreduced(mut c: QPoly) -> Self {
        poly::trim(&mut c);
        Scalar(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar(poly::add(&self.0, &rhs.0))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar(poly::sub(&self.0, &rhs.0))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.0.len() <= 1 && self.0.len() <= 1 {
            match (self.0.first_mut(), rhs.0.first()) {
                (_, None) => {}
                (None, Some(b)) => self.0.push(b.clone()),
                (Some(a), Some(b)) => {
                    *a += b;
                    if a.is_zero() {
                        self.0.clear();
                    }
                }
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    Extension,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension modulus must have degree at least 1")]
    ConstantModulus,
    #[error("extension modulus must be monic (leading coefficient {0})")]
    NotMonic(String),
    #[error("extension modulus {0} is reducible over the rationals")]
    Reducible(String),
    #[error("generator name {0:?} must be a single identifier")]
    BadGenerator(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse scalar {input:?} at position {position}: {message}")]
pub struct ParseScalarError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

/// The ground field: `ℚ`, or `ℚ[z]/(m(z))` for a monic irreducible `m`.
#[derive(Clone, Debug)]
pub struct Field {
    kind: FieldKind,
    modulus: QPoly,
    generator: String,
    irreducibility: Irreducibility,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    pub fn rationals() -> Arc<Field> {
        Arc::new(Field {
            kind: FieldKind::Rationals,
            modulus: poly::from_ints(&[0, 1]),
            generator: String::new(),
            irreducibility: Irreducibility::Verified,
        })
    }

    /// `ℚ[generator]/(modulus)`; the modulus is given lowest degree first.
    pub fn extension(modulus: QPoly, generator: &str) -> Result<Arc<Field>, FieldError> {
        let field = Self::extension_inner(modulus, generator, true)?;
        if field.irreducibility == Irreducibility::Reducible {
            return Err(FieldError::Reducible(poly_to_string(&field.modulus, generator)));
        }
        Ok(Arc::new(field))
    }

    /// Like [`Field::extension`] but skips the irreducibility test; the field
    /// records [`Irreducibility::Unchecked`].
    pub fn extension_unchecked(modulus: QPoly, generator: &str) -> Result<Arc<Field>, FieldError> {
        Ok(Arc::new(Self::extension_inner(modulus, generator, false)?))
    }

    fn extension_inner(mut modulus: QPoly, generator: &str, check: bool) -> Result<Field, FieldError> {
        poly::trim(&mut modulus);
        let deg = poly::degree(&modulus).unwrap_or(0);
        if deg == 0 {
            return Err(FieldError::ConstantModulus);
        }
        if !modulus[deg].is_one() {
            return Err(FieldError::NotMonic(modulus[deg].to_string()));
        }
        if generator.is_empty()
            || !generator.chars().all(|c| c.is_ascii_alphabetic() || c == '_')
        {
            return Err(FieldError::BadGenerator(generator.to_string()));
        }
        let irreducibility = if check {
            poly::irreducibility(&modulus)
        } else {
            Irreducibility::Unchecked
        };
        Ok(Field {
            kind: FieldKind::Extension,
            modulus,
            generator: generator.to_string(),
            irreducibility,
        })
    }

    /// `ℚ(ζ_n)` with generator `z` a primitive `n`-th root of unity;
    /// `ℚ` itself for `n ≤ 2`.
    pub fn cyclotomic(n: usize) -> Arc<Field> {
        if n <= 2 {
            return Self::rationals();
        }
        Self::extension(poly::cyclotomic(n), "z").expect("cyclotomic polynomials are irreducible")
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    /// Degree of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The class of the generator; `None` over the rationals.
    pub fn generator_element(&self) -> Option<Scalar> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::Extension => Some(self.reduce(poly::from_ints(&[0, 1]))),
        }
    }

    pub fn reduce(&self, c: QPoly) -> Scalar {
        if c.len() <= self.degree() {
            return Scalar::from_poly_unreduced(c);
        }
        let (_, r) = poly::div_rem(&c, &self.modulus);
        Scalar(r)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a.0.len(), b.0.len()) {
            (0, _) | (_, 0) => Scalar::zero(),
            (1, 1) => Scalar(vec![&a.0[0] * &b.0[0]]),
            _ => self.reduce(poly::mul(&a.0, &b.0)),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match a.0.len() {
            0 => None,
            1 => Some(Scalar(vec![a.0[0].recip()])),
            _ => {
                let (g, s) = poly::ext_gcd_left(&a.0, &self.modulus);
                if g.len() != 1 {
                    return None;
                }
                Some(self.reduce(s))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Canonical textual form: `p`, `p/q`, or a polynomial in the generator
    /// with the highest power first, e.g. `-1/2*z^2 + z - 3`.
    pub fn format_scalar(&self, a: &Scalar) -> String {
        poly_to_string(&a.0, &self.generator)
    }

    /// Parses an integer, a fraction `p/q`, or a polynomial in the generator
    /// built from terms `c`, `c*z`, `c*z^k`, `z^k` joined by `+`/`-`.
    pub fn parse_scalar(&self, input: &str) -> Result<Scalar, ParseScalarError> {
        let p = ScalarParser::new(input, &self.generator).parse()?;
        if self.kind == FieldKind::Rationals && p.len() > 1 {
            return Err(ParseScalarError {
                input: input.to_string(),
                position: 0,
                message: "generator used over the rationals".into(),
            });
        }
        Ok(self.reduce(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Extension => write!(
                f,
                "Q[{}]/({})",
                self.generator,
                poly_to_string(&self.modulus, &self.generator)
            ),
        }
    }
}

fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn poly_to_string(c: &[BigRational], generator: &str) -> String {
    let mut out = String::new();
    for (k, coef) in c.iter().enumerate().rev() {
        if coef.is_zero() {
            continue;
        }
        let neg = coef.is_negative();
        let abs = coef.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => generator.to_string(),
            _ => format!("{generator}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&rational_to_string(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational_to_string(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct ScalarParser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    generator: &'a str,
}

impl<'a> ScalarParser<'a> {
    fn new(input: &'a str, generator: &'a str) -> Self {
        ScalarParser { input, bytes: input.as_bytes(), pos: 0, generator }
    }

    fn err(&self, message: &str) -> ParseScalarError {
        ParseScalarError {
            input: self.input.to_string(),
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, ParseScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.input[start..self.pos].parse().expect("digits parse"))
    }

    fn at_generator(&mut self) -> bool {
        self.skip_ws();
        !self.generator.is_empty() && self.input[self.pos..].starts_with(self.generator)
    }

    fn monomial(&mut self) -> Result<usize, ParseScalarError> {
        self.pos += self.generator.len();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return e.try_into().map_err(|_| self.err("exponent too large"));
        }
        Ok(1)
    }

    fn term(&mut self) -> Result<(BigRational, usize), ParseScalarError> {
        if self.at_generator() {
            let k = self.monomial()?;
            return Ok((BigRational::one(), k));
        }
        let num = self.integer()?;
        let mut coef = BigRational::from_integer(num);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            coef /= BigRational::from_integer(den);
        }
        if self.peek() == Some(b'*') {
            self.pos += 1;
            if !self.at_generator() {
                return Err(self.err("expected generator after '*'"));
            }
            let k = self.monomial()?;
            return Ok((coef, k));
        }
        Ok((coef, 0))
    }

    fn parse(mut self) -> Result<QPoly, ParseScalarError> {
        let mut acc: QPoly = Vec::new();
        let mut first = true;
        loop {
            let mut sign = BigRational::one();
            match self.peek() {
                None if first => return Err(self.err("empty scalar")),
                None => break,
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                Some(_) if first => {}
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            let (c, k) = self.term()?;
            let mut mono = vec![BigRational::zero(); k + 1];
            mono[k] = c * sign;
            acc = poly::add(&acc, &mono);
            first = false;
        }
        Ok(acc)
    }
}
