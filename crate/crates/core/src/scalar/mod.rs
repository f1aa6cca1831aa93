//! Exact arithmetic in a cyclotomic field ℚ(ζ_N) and dense linear algebra over it.
//!
//! A [`Scalar`] stores its coordinates in the power basis `1, ζ, …, ζ^{φ(N)-1}`
//! with trailing zeros trimmed, so equality of scalars is equality of stored
//! coordinates. Mixing scalars of different conductors panics; the conductor
//! is fixed once per session by whoever builds the [`CyclotomicField`].

mod field;
mod matrix;
mod parse;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use field::{CyclotomicField, MAX_CONDUCTOR};
pub use matrix::{Matrix, Rref};
pub use parse::parse_scalar;

pub(crate) use field::rational_to_string;

/// Largest exponent magnitude accepted by `^` in textual input.
pub const MAX_EXPONENT: i64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("conductor {0} is not supported (must be in 1..={max})", max = MAX_CONDUCTOR)]
    BadConductor(u32),
    #[error("malformed expression at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent out of range")]
    ExponentOverflow,
    #[error("zero has no multiplicative order")]
    ZeroInput,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
}

#[derive(Clone)]
pub struct Scalar {
    field: CyclotomicField,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Scalar {
    fn from_raw(field: CyclotomicField, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Scalar { field, coeffs }
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    /// All φ(N) power-basis coordinates.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let mut out = self.coeffs.clone();
        out.resize(self.field.degree(), BigRational::zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational number, when it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_field(&self, other: &Scalar) {
        if self.field != other.field {
            panic!(
                "{}",
                ScalarError::ConductorMismatch(self.field.conductor(), other.field.conductor())
            );
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Scalar { field: self.field, coeffs: vec![self.coeffs[0].recip()] });
        }
        // Solve (a · x) = 1 for the coordinates of x.
        let degree = self.field.degree();
        let mut columns = Vec::with_capacity(degree);
        for j in 0..degree {
            let basis = self.field.zeta_pow(j as i64);
            columns.push((self * &basis).coefficients());
        }
        let system: Vec<Vec<BigRational>> =
            (0..degree).map(|i| (0..degree).map(|j| columns[j][i].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); degree];
        rhs[0] = BigRational::one();
        let x = field::solve_rational(system, rhs)?;
        Some(Scalar::from_raw(self.field, x))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let inv = other.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        let base = if exp < 0 { self.inv().ok_or(ScalarError::DivisionByZero)? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order when `self` is a root of unity, `None` otherwise.
    pub fn is_root_of_unity(&self) -> Result<Option<u32>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInput);
        }
        let bound = self.field.root_of_unity_bound();
        if !self.pow(bound as i64)?.is_one() {
            return Ok(None);
        }
        for k in 1..=bound {
            if bound.is_multiple_of(k) && self.pow(k as i64)?.is_one() {
                return Ok(Some(k));
            }
        }
        unreachable!("s^bound = 1 was checked")
    }

    /// True when the scalar is a rational with negative sign (used for printing).
    pub(crate) fn is_negative_rational(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_negative()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = match k {
                0 => rational_to_string(&magnitude),
                _ => {
                    let power = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                    if magnitude.is_one() {
                        power
                    } else {
                        format!("{}*{}", rational_to_string(&magnitude), power)
                    }
                }
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {body}", if negative { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        Scalar::from_raw(self.field, coeffs)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigRational::zero());
        for (c, d) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= d;
        }
        Scalar::from_raw(self.field, coeffs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        if self.coeffs.len() == 1 {
            let a = &self.coeffs[0];
            return Scalar { field: self.field, coeffs: rhs.coeffs.iter().map(|c| a * c).collect() };
        }
        if rhs.coeffs.len() == 1 {
            let b = &rhs.coeffs[0];
            return Scalar { field: self.field, coeffs: self.coeffs.iter().map(|c| c * b).collect() };
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::from_raw(self.field, self.field.reduce_product(prod))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.check_field(rhs);
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, d) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += d;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.check_field(rhs);
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, d) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= d;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
