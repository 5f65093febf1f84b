//! Exact rational scalars and canonical formatting.
//!
//! Coefficients, coordinates, and bounds throughout the crate are
//! `num::BigRational`; nothing downstream of a theorem check ever touches a
//! float. The canonical text form is `numerator/denominator` with the
//! denominator always present and positive, so serialized reports are
//! byte-stable.

use num::{BigInt, BigRational, Signed, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `n/d` form, denominator always written.
pub fn rat_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `n`, `n/d`, or a decimal-free signed integer string.
pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Exact integer value, if the rational is an integer.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// `r^e` for possibly negative `e`; `None` when inverting zero.
pub fn pow_rat(r: &Rational, e: i64) -> Option<Rational> {
    if e >= 0 {
        Some(num::pow::pow(r.clone(), e as usize))
    } else if r.is_zero() {
        None
    } else {
        Some(num::pow::pow(r.clone(), (-e) as usize).recip())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_parse() {
        assert_eq!(rat_str(&frac(2, 4)), "1/2");
        assert_eq!(rat_str(&rat(-3)), "-3/1");
        assert_eq!(parse_rat("-3/4"), Some(frac(-3, 4)));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
    }

    #[test]
    fn powers() {
        assert_eq!(pow_rat(&frac(2, 3), -2), Some(frac(9, 4)));
        assert_eq!(pow_rat(&rat(0), -1), None);
        assert_eq!(pow_rat(&rat(0), 0), Some(rat(1)));
    }
}
