//! Power series in `k[[x]]` and `x k[[x]]`, truncated at a fixed precision.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    min_order: u8,
}

impl TruncatedSeries {
    /// Coefficients `c_0 .. c_{N-1}`; `min_order = 1` requires `c_0 = 0`.
    pub fn new(coeffs: Vec<Rational>, min_order: u8) -> Result<Self> {
        assert!(min_order <= 1, "min_order is 0 or 1");
        if min_order == 1 && coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::PatternViolation(
                "nonzero constant term in x k[[x]]".into(),
            ));
        }
        Ok(Self { coeffs, min_order })
    }

    pub fn zero(precision: usize, min_order: u8) -> Self {
        Self {
            coeffs: vec![Rational::zero(); precision],
            min_order,
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(precision, 0, Rational::one())
    }

    pub fn x(precision: usize) -> Self {
        Self::monomial(precision, 1, Rational::one())
    }

    /// `c x^e`, zero when `e` is past the precision.
    pub fn monomial(precision: usize, e: usize, c: Rational) -> Self {
        let mut s = Self::zero(precision, u8::from(e > 0));
        if e < precision {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], min_order: u8) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            min_order,
        )
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_order(&self) -> u8 {
        self.min_order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Whether the series lies in the slot `x^min_order k[[x]]`.
    pub fn fits(&self, min_order: u8) -> bool {
        min_order == 0 || self.coeffs.first().is_none_or(Zero::is_zero)
    }

    /// Reinterprets the series in a slot with another `min_order`.
    pub fn with_min_order(&self, min_order: u8) -> Result<Self> {
        Self::new(self.coeffs.clone(), min_order)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.precision() == other.precision() {
            Ok(())
        } else {
            Err(Error::PrecisionMismatch(
                self.precision(),
                other.precision(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            coeffs,
            min_order: self.min_order.min(other.min_order),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            min_order: self.min_order,
        }
    }

    /// Product truncated at the common precision.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.precision();
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self {
            coeffs,
            min_order: (self.min_order + other.min_order).min(1),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(x^{})", self.precision())
    }
}

/// Coefficients as strings, so rationals survive JSON exactly.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let one = TruncatedSeries::one(8);
        let x = TruncatedSeries::x(8);
        let f = TruncatedSeries::from_ints(&[2, 0, 1, 0, 0, 0, 0, 3], 0).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.valuation(), Some(2));
        assert_eq!(x2.min_order(), 1);
        let p = f.mul(&x).unwrap();
        assert_eq!(p.coeff(7), Rational::zero());
        assert_eq!(p.coeff(3), Rational::one());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            TruncatedSeries::from_ints(&[1, 0], 1),
            Err(Error::PatternViolation(_))
        ));
        let a = TruncatedSeries::one(4);
        let b = TruncatedSeries::one(5);
        assert_eq!(a.mul(&b), Err(Error::PrecisionMismatch(4, 5)));
    }

    #[test]
    fn display() {
        let f = TruncatedSeries::from_ints(&[1, 0, -2], 0).unwrap();
        assert_eq!(f.to_string(), "1 + -2x^2 + O(x^3)");
    }
}
