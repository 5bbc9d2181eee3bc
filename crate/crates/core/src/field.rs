//! Exact scalar fields: the rationals and prime fields.
//!
//! Scalars are always stored as [`BigRational`]. Over a prime field the value
//! is kept as an integer in `0..p`, so equality of normalized scalars is
//! structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("{value} has no image in F_{p}: denominator not invertible")]
    NotInvertible { value: String, p: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rationals,
    Prime { p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.reduce_int(BigInt::from(n))
    }

    fn reduce_int(&self, n: BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_integer(n),
            Field::Prime { p } => Scalar::from_integer(n.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps an arbitrary rational into the field. Fails over `F_p` when the
    /// denominator is divisible by `p`.
    pub fn normalize(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        match self {
            Field::Rationals => Ok(q.clone()),
            Field::Prime { p } => {
                let pb = BigInt::from(*p);
                let den = q.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(FieldError::NotInvertible { value: q.to_string(), p: *p });
                }
                let inv = den.modpow(&(&pb - BigInt::from(2)), &pb);
                Ok(self.reduce_int(q.numer() * inv))
            }
        }
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let t = s.trim();
        let parse_int = |x: &str| x.trim().parse::<BigInt>().map_err(|_| FieldError::Parse(s.to_string()));
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(FieldError::Parse(s.to_string()));
                }
                BigRational::new(parse_int(n)?, d)
            }
            None => BigRational::from_integer(parse_int(t)?),
        };
        self.normalize(&q)
    }

    pub fn format(&self, a: &Scalar) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::Prime { .. } => self.reduce_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::Prime { .. } => self.reduce_int(a.numer() - b.numer()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::Prime { .. } => self.reduce_int(-a.numer()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a * b,
            Field::Prime { .. } => self.reduce_int(a.numer() * b.numer()),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime { p } => {
                let pb = BigInt::from(*p);
                Some(self.reduce_int(a.numer().modpow(&(&pb - BigInt::from(2)), &pb)))
            }
        }
    }

    /// Small integer view of a scalar, used for compact witnesses.
    pub fn to_i64(&self, a: &Scalar) -> Option<i64> {
        if a.is_integer() {
            a.numer().to_i64()
        } else {
            None
        }
    }

    pub fn is_negative(&self, a: &Scalar) -> bool {
        a.is_negative()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic_wraps() {
        let f = Field::prime(5).unwrap();
        let a = f.int(3);
        let b = f.int(4);
        assert_eq!(f.add(&a, &b), f.int(2));
        assert_eq!(f.mul(&a, &b), f.int(2));
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        assert_eq!(f.neg(&a), f.int(2));
    }

    #[test]
    fn half_is_not_in_f2() {
        let f = Field::prime(2).unwrap();
        assert!(matches!(f.parse("1/2"), Err(FieldError::NotInvertible { .. })));
        let g = Field::prime(3).unwrap();
        assert_eq!(g.parse("1/2").unwrap(), g.int(2));
    }

    #[test]
    fn rational_parse_and_format() {
        let q = Field::Rationals;
        let x = q.parse("-3/7").unwrap();
        assert_eq!(q.format(&x), "-3/7");
        assert_eq!(q.format(&q.parse("6/3").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(Field::prime(6), Err(FieldError::NotPrime(6)));
    }
}
