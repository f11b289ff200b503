use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact scalars. Over `Z` they are integers, over `Z/p` integers in `[0, p)`.
pub type Scalar = BigRational;

/// The coefficient rings supported by the exact linear algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Rationals,
    Integers,
    PrimeField(u64),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::invalid("ring", format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Check that `x` lives in the ring and bring it to normal form.
    pub fn normalize(&self, x: Scalar) -> Result<Scalar> {
        match self {
            Ring::Rationals => Ok(x),
            Ring::Integers => {
                if x.is_integer() {
                    Ok(x)
                } else {
                    Err(Error::invalid("scalar", format!("{} is not an integer", format_scalar(&x))))
                }
            }
            Ring::PrimeField(p) => {
                let p = BigInt::from(*p);
                let den = x.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::invalid("scalar", format!("{} has a denominator divisible by {p}", format_scalar(&x))));
                }
                let inv = den.modpow(&(&p - 2u32), &p);
                Ok(Scalar::from_integer((x.numer() * inv).mod_floor(&p)))
            }
        }
    }

    /// Normal form of a value produced by ring operations on normalized inputs.
    pub(crate) fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            Ring::PrimeField(p) => Scalar::from_integer(x.numer().mod_floor(&BigInt::from(*p))),
            _ => x,
        }
    }

    pub fn from_i64(&self, x: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(x)))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        self.reduce(Scalar::one())
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        self.normalize(parse_rational(s)?)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => write!(f, "Q"),
            Ring::Integers => write!(f, "Z"),
            Ring::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Accepts `Q`, `Z`, `Fp:p` and `Fp` followed directly by the modulus.
    fn from_str(s: &str) -> Result<Ring> {
        match s.trim() {
            "Q" => Ok(Ring::Rationals),
            "Z" => Ok(Ring::Integers),
            other => {
                let digits = other
                    .strip_prefix("Fp:")
                    .or_else(|| other.strip_prefix("Fp"))
                    .or_else(|| other.strip_prefix("F"))
                    .ok_or_else(|| Error::Parse(format!("unknown ring `{other}`")))?;
                let p = digits.parse::<u64>().map_err(|_| Error::Parse(format!("bad modulus in `{other}`")))?;
                Ring::prime_field(p)
            }
        }
    }
}

/// Parse `"a"` or `"a/b"` into a rational.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `"a"` for integers, `"a/b"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        assert!(Ring::prime_field(5).is_ok());
        assert!(Ring::prime_field(2).is_ok());
        assert!(Ring::prime_field(1).is_err());
        assert!(Ring::prime_field(9).is_err());
    }

    #[test]
    fn normalization() {
        let f5 = Ring::PrimeField(5);
        assert_eq!(f5.parse_scalar("1/2").unwrap(), Scalar::from_integer(3.into()));
        assert_eq!(f5.parse_scalar("-1").unwrap(), Scalar::from_integer(4.into()));
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(Ring::Integers.parse_scalar("1/2").is_err());
        assert_eq!(Ring::Rationals.parse_scalar("6/4").unwrap(), Scalar::new(3.into(), 2.into()));
    }

    #[test]
    fn ring_names_round_trip() {
        for r in [Ring::Rationals, Ring::Integers, Ring::PrimeField(7)] {
            assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
        }
        assert_eq!("Fp5".parse::<Ring>().unwrap(), Ring::PrimeField(5));
        assert!("R".parse::<Ring>().is_err());
    }

    #[test]
    fn scalar_text() {
        for s in ["0", "-3", "7/2", "-1/9"] {
            assert_eq!(format_scalar(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
