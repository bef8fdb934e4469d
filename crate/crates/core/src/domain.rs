//! Exact coefficient domains: the integers, the rationals and the residue
//! rings `Z/m`.
//!
//! Integers and rationals are arbitrary precision. Residues are kept in
//! canonical form `0..m`, so structural equality is ring equality in every
//! domain.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient ring `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl Domain {
    pub fn integers_mod(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Domain::IntegersMod(modulus))
    }

    pub fn zero(&self) -> DomainElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> DomainElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> DomainElement {
        self.from_bigint(&BigInt::from(value))
    }

    pub fn from_bigint(&self, value: &BigInt) -> DomainElement {
        DomainElement(match *self {
            Domain::Integers => Value::Int(value.clone()),
            Domain::Rationals => Value::Rat(BigRational::from_integer(value.clone())),
            Domain::IntegersMod(m) => Value::Mod {
                value: reduce(value, m),
                modulus: m,
            },
        })
    }

    /// Builds `numer / denom`, failing when the quotient does not exist in
    /// this domain (a non-integral value in `Z`, a non-invertible
    /// denominator in `Z/m`).
    pub fn from_fraction(&self, numer: &BigInt, denom: &BigInt) -> Result<DomainElement> {
        let not_in = || Error::NotInDomain {
            value: format!("{numer}/{denom}"),
            domain: *self,
        };
        if denom.is_zero() {
            return Err(not_in());
        }
        match *self {
            Domain::Integers => {
                let (q, r) = numer.div_rem(denom);
                if !r.is_zero() {
                    return Err(not_in());
                }
                Ok(self.from_bigint(&q))
            }
            Domain::Rationals => Ok(DomainElement(Value::Rat(BigRational::new(
                numer.clone(),
                denom.clone(),
            )))),
            Domain::IntegersMod(m) => {
                let inv = mod_inverse(reduce(denom, m), m).ok_or_else(not_in)?;
                Ok(DomainElement(Value::Mod {
                    value: mul_mod(reduce(numer, m), inv, m),
                    modulus: m,
                }))
            }
        }
    }

    /// Parses an integer `a` or a fraction `a/b` as an element of this domain.
    pub fn parse_element(&self, text: &str) -> Result<DomainElement> {
        let bad = || Error::NotInDomain {
            value: text.to_string(),
            domain: *self,
        };
        let text = text.trim();
        match text.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                self.from_fraction(&a, &b)
            }
            None => {
                let a: BigInt = text.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&a))
            }
        }
    }

    /// All residues of a finite domain, `None` for `Z` and `Q`.
    pub fn elements(&self) -> Option<Vec<DomainElement>> {
        match *self {
            Domain::IntegersMod(m) => Some(
                (0..m)
                    .map(|value| DomainElement(Value::Mod { value, modulus: m }))
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Every `e` with `e^2 = e` other than 0 and 1. Empty for `Z` and `Q`.
    pub fn nontrivial_idempotents(&self) -> Vec<DomainElement> {
        match self.elements() {
            Some(all) => all
                .into_iter()
                .filter(|e| !e.is_zero() && !e.is_one() && e.is_idempotent())
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn has_nontrivial_idempotents(&self) -> bool {
        !self.nontrivial_idempotents().is_empty()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "Z"),
            Domain::Rationals => write!(f, "Q"),
            Domain::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::NotInDomain {
            value: s.to_string(),
            domain: Domain::Integers,
        };
        match s.trim() {
            "Z" => Ok(Domain::Integers),
            "Q" => Ok(Domain::Rationals),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .ok_or_else(invalid)?
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| invalid())?;
                Domain::integers_mod(m)
            }
        }
    }
}

impl Serialize for Domain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

/// An exact element of a [`Domain`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DomainElement(Value);

impl DomainElement {
    pub fn domain(&self) -> Domain {
        match self.0 {
            Value::Int(_) => Domain::Integers,
            Value::Rat(_) => Domain::Rationals,
            Value::Mod { modulus, .. } => Domain::IntegersMod(modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Value::Int(v) => v.is_zero(),
            Value::Rat(v) => v.is_zero(),
            Value::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Value::Int(v) => v.is_one(),
            Value::Rat(v) => v.is_one(),
            Value::Mod { value, .. } => *value == 1,
        }
    }

    /// The canonical residue, for elements of `Z/m`.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Value::Mod { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn mul(&self, other: &DomainElement) -> Result<DomainElement> {
        let value = match (&self.0, &other.0) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (
                Value::Mod { value: a, modulus },
                Value::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Value::Mod {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => {
                return Err(Error::DomainMismatch {
                    left: self.domain(),
                    right: other.domain(),
                })
            }
        };
        Ok(DomainElement(value))
    }

    pub fn pow(&self, exponent: u64) -> Result<DomainElement> {
        let value = match &self.0 {
            Value::Mod { value, modulus } => Value::Mod {
                value: pow_mod(*value, exponent, *modulus),
                modulus: *modulus,
            },
            Value::Int(v) => Value::Int(big_pow(v, exponent)?),
            Value::Rat(v) => Value::Rat(BigRational::new(
                big_pow(v.numer(), exponent)?,
                big_pow(v.denom(), exponent)?,
            )),
        };
        Ok(DomainElement(value))
    }

    /// Whether the element has a multiplicative inverse. Zero is rejected.
    pub fn is_unit(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(match &self.0 {
            Value::Int(v) => v.abs().is_one(),
            Value::Rat(_) => true,
            Value::Mod { value, modulus } => value.gcd(modulus) == 1,
        })
    }

    /// Whether `other = self * t` for some `t` in the domain.
    pub fn divides(&self, other: &DomainElement) -> bool {
        if other.is_zero() {
            return true;
        }
        match (&self.0, &other.0) {
            (Value::Int(a), Value::Int(b)) => !a.is_zero() && b.is_multiple_of(a),
            (Value::Rat(a), Value::Rat(_)) => !a.is_zero(),
            (
                Value::Mod { value, modulus },
                Value::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => {
                // solvable iff gcd(a, m) | b
                b % value.gcd(modulus) == 0
            }
            _ => false,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }
}

impl fmt::Display for DomainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) if v.is_integer() => write!(f, "{}", v.numer()),
            Value::Rat(v) => write!(f, "{}/{}", v.numer(), v.denom()),
            Value::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for DomainElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn reduce(value: &BigInt, modulus: u64) -> u64 {
    value
        .mod_floor(&BigInt::from(modulus))
        .to_u64()
        .expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let egcd = (a as i128).extended_gcd(&(m as i128));
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(m as i128) as u64)
}

fn big_pow(base: &BigInt, exponent: u64) -> Result<BigInt> {
    if base.is_zero() || base.abs().is_one() {
        return Ok(num_traits::pow::Pow::pow(base, exponent));
    }
    let exponent = u32::try_from(exponent).map_err(|_| Error::ExponentOverflow)?;
    Ok(base.pow(exponent))
}
