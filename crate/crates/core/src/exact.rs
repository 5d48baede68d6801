//! Exact rational parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{0}` as an exact rational (expected decimal, scientific, or p/q)")]
pub struct ParseRationalError(pub String);

/// A nonnegative-or-not rational parameter (α, β) carried exactly, with its
/// `f64` value cached for floating-point expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alpha {
    exact: BigRational,
}

impl Alpha {
    pub fn new(exact: BigRational) -> Self {
        Alpha { exact }
    }

    pub fn zero() -> Self {
        Alpha::new(BigRational::zero())
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Alpha::new(BigRational::new(numer.into(), denom.into()))
    }

    /// The exact dyadic value of a finite `f64`.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Alpha::new)
    }

    /// `2⁻¹⁰·r⁻⁶`, the largest α the stability theorem admits.
    pub fn stability_max(r: usize) -> Self {
        Alpha::new(BigRational::new(BigInt::one(), BigInt::from(1024) * BigInt::from(r).pow(6)))
    }

    /// `2⁻⁹·r⁻⁶`, the largest β of the recalled edge-form stability premise.
    pub fn niro_max(r: usize) -> Self {
        Alpha::new(BigRational::new(BigInt::one(), BigInt::from(512) * BigInt::from(r).pow(6)))
    }

    pub fn exact(&self) -> &BigRational {
        &self.exact
    }

    pub fn value(&self) -> f64 {
        to_f64(&self.exact)
    }

    pub fn is_zero(&self) -> bool {
        self.exact.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.exact.is_negative()
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // shortest decimal that round-trips through f64
        write!(f, "{}", self.value())
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

/// Parses `0.05`, `1.3e-6`, `-2`, or `1/20` into an exact rational.
impl FromStr for Alpha {
    type Err = ParseRationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(text.to_string());
        let t = text.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            return Ok(Alpha::new(BigRational::new(p, q)));
        }
        let (mantissa, exponent) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| err())?),
            None => (t, 0),
        };
        let (negative, mantissa) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if whole.is_empty() && frac.is_empty() {
            return Err(err());
        }
        if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| err())?;
        let scale = exponent - frac.len() as i32;
        let ten = BigInt::from(10);
        let mut value = if scale >= 0 {
            BigRational::from_integer(digits * ten.pow(scale as u32))
        } else {
            BigRational::new(digits, ten.pow(scale.unsigned_abs()))
        };
        if negative {
            value = -value;
        }
        Ok(Alpha::new(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_decimals() {
        assert_eq!("0.05".parse::<Alpha>().unwrap(), Alpha::ratio(1, 20));
        assert_eq!("1.3e-6".parse::<Alpha>().unwrap(), Alpha::ratio(13, 10_000_000));
        assert_eq!("1/20".parse::<Alpha>().unwrap(), Alpha::ratio(1, 20));
        assert_eq!("-2".parse::<Alpha>().unwrap(), Alpha::ratio(-2, 1));
        assert_eq!("0".parse::<Alpha>().unwrap(), Alpha::zero());
        assert_eq!(".5".parse::<Alpha>().unwrap(), Alpha::ratio(1, 2));
        for bad in ["", "x", "1/0", "1e", "0.0.1", "."] {
            assert!(bad.parse::<Alpha>().is_err(), "{bad}");
        }
    }

    #[test]
    fn stability_range() {
        assert_eq!(Alpha::stability_max(2), Alpha::ratio(1, 65536));
        assert!((Alpha::stability_max(3).value() - 1.0 / (1024.0 * 729.0)).abs() < 1e-20);
        assert_eq!(Alpha::niro_max(2), Alpha::ratio(1, 32768));
    }
}
