use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CyclotomicField, Scalar, ScalarError};
use crate::expr::{self, Interpret};

pub(crate) struct ScalarInterp(pub CyclotomicField);

impl Interpret for ScalarInterp {
    type Value = Scalar;
    type Error = ScalarError;

    fn int(&self, n: &BigInt) -> Result<Scalar, ScalarError> {
        Ok(self.0.rational(BigRational::from_integer(n.clone())))
    }
    fn symbol(&self, name: &str) -> Result<Scalar, ScalarError> {
        match name {
            "z" => Ok(self.0.zeta()),
            other => Err(ScalarError::UnknownSymbol(other.to_string())),
        }
    }
    fn add(&self, a: Scalar, b: Scalar) -> Result<Scalar, ScalarError> {
        Ok(a + b)
    }
    fn sub(&self, a: Scalar, b: Scalar) -> Result<Scalar, ScalarError> {
        Ok(a - b)
    }
    fn mul(&self, a: Scalar, b: Scalar) -> Result<Scalar, ScalarError> {
        Ok(a * b)
    }
    fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar, ScalarError> {
        a.checked_div(&b)
    }
    fn neg(&self, a: Scalar) -> Result<Scalar, ScalarError> {
        Ok(-a)
    }
    fn pow(&self, a: Scalar, e: i64) -> Result<Scalar, ScalarError> {
        a.pow(e)
    }
}

impl CyclotomicField {
    /// Parses a scalar in this field.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let e = expr::parse(text)?;
        ScalarInterp(*self).eval(&e)
    }
}

/// Parses `text` as an element of ℚ(ζ_conductor).
pub fn parse_scalar(text: &str, conductor: u32) -> Result<Scalar, ScalarError> {
    CyclotomicField::new(conductor)?.parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let f = CyclotomicField::new(12).unwrap();
        assert_eq!(parse_scalar("1/2", 12).unwrap(), f.fraction(1, 2));
        assert_eq!(parse_scalar("z^4", 12).unwrap(), f.zeta_pow(4));
        assert_eq!(parse_scalar("z^4 + z^8 + 1", 12).unwrap(), f.zero());
        assert_eq!(parse_scalar("(1 + z)^2 - 2*z - z^2", 12).unwrap(), f.one());
        assert_eq!(parse_scalar("z^-1 * z", 12).unwrap(), f.one());
        assert_eq!(parse_scalar("-2^2", 12).unwrap(), f.integer(-4));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_scalar("1/0", 12), Err(ScalarError::DivisionByZero));
        assert_eq!(parse_scalar("0^-1", 12), Err(ScalarError::DivisionByZero));
        assert_eq!(parse_scalar("y", 12), Err(ScalarError::UnknownSymbol("y".into())));
        assert!(matches!(parse_scalar("1 + * 2", 12), Err(ScalarError::Syntax { .. })));
        assert_eq!(parse_scalar("2^100000", 12), Err(ScalarError::ExponentOverflow));
    }

    #[test]
    fn print_parse_round_trip() {
        let f = CyclotomicField::new(12).unwrap();
        for text in ["-3/7 + z - 5/2*z^3", "z^2", "-z", "0", "1 - z^2"] {
            let s = f.parse(text).unwrap();
            assert_eq!(f.parse(&s.to_string()).unwrap(), s, "{text}");
        }
    }
}
