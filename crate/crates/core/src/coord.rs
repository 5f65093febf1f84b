//! Exact coordinate vectors in the ambient basis `f_1..f_N`.
//!
//! Entry `j` (0-based `j-1`) is the coefficient of `f_j`, where `f_1` is the
//! rightmost basis vector of the reversed numbering: larger systems extend a
//! smaller one by appending zero coordinates above `f_N`.

use num::{Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::ratio::{rat_str, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordVector(pub Vec<Rational>);

impl CoordVector {
    pub fn zero(dim: usize) -> Self {
        CoordVector(vec![Rational::zero(); dim])
    }

    /// The basis vector `f_{i+1}` (0-based index `i`).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::from_integer(1.into());
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        CoordVector(coords.iter().map(|&c| crate::ratio::rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        CoordVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        CoordVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        CoordVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CoordVector(self.0.iter().map(|a| a * c).collect())
    }

    /// Coordinate sum (the trace functional).
    pub fn coord_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn is_traceless(&self) -> bool {
        self.coord_sum().is_zero()
    }

    /// Orthogonal projection onto the sum-zero hyperplane.
    pub fn tracelessized(&self) -> Self {
        let n = self.dim();
        if n == 0 {
            return self.clone();
        }
        let mean = self.coord_sum() / Rational::from_integer((n as i64).into());
        CoordVector(self.0.iter().map(|a| a - &mean).collect())
    }

    /// Zero-pad above the current dimension.
    pub fn pad(&self, dim: usize) -> Result<Self> {
        if dim < self.dim() {
            return Err(Error::DimensionMismatch(dim, self.dim()));
        }
        let mut v = self.0.clone();
        v.resize(dim, Rational::zero());
        Ok(CoordVector(v))
    }

    /// Keep the first `dim` coordinates; the dropped ones need not vanish
    /// (this is restriction of a functional, not of a point).
    pub fn truncate(&self, dim: usize) -> Result<Self> {
        if dim > self.dim() {
            return Err(Error::DimensionMismatch(dim, self.dim()));
        }
        Ok(CoordVector(self.0[..dim].to_vec()))
    }

    /// All coordinates above index `dim` vanish.
    pub fn supported_below(&self, dim: usize) -> bool {
        self.0[dim.min(self.dim())..].iter().all(Rational::is_zero)
    }

    pub fn abs_coords(&self) -> Self {
        CoordVector(self.0.iter().map(|a| a.abs()).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rat_str).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.to_strings()
                .into_iter()
                .map(serde_json::Value::String)
                .collect(),
        )
    }
}

impl fmt::Display for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{frac, rat};

    #[test]
    fn traceless_projection() {
        let v = CoordVector::from_i64(&[1, 0]);
        assert_eq!(
            v.tracelessized(),
            CoordVector(vec![frac(1, 2), frac(-1, 2)])
        );
        assert!(v.tracelessized().is_traceless());
    }

    #[test]
    fn pad_truncate_roundtrip() {
        let v = CoordVector::from_i64(&[2, -1]);
        let p = v.pad(4).unwrap();
        assert_eq!(p.dim(), 4);
        assert!(p.supported_below(2));
        assert_eq!(p.truncate(2).unwrap(), v);
        assert_eq!(v.dot(&v), rat(5));
    }
}
