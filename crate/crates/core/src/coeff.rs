//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// The rational numbers.
    Rational,
    /// The prime field `Z/pZ`.
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting non-primes and moduli too large for 64-bit products.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        match *self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coefficient::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coefficient {
        match *self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Coefficient::Modular {
                value: reduce_bigint(v, p),
                modulus: p,
            },
        }
    }

    /// Maps a rational into this field. Fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Coefficient> {
        match *self {
            Field::Rational => Ok(Coefficient::Rational(v.clone())),
            Field::Prime(p) => {
                let den = reduce_bigint(v.denom(), p);
                if den == 0 {
                    return Err(Error::DenominatorDivisibleByModulus(p));
                }
                let num = reduce_bigint(v.numer(), p);
                Ok(Coefficient::Modular {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        match (self, c) {
            (Field::Rational, Coefficient::Rational(_)) => true,
            (Field::Prime(p), Coefficient::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with positive denominator;
/// residues satisfy `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    /// True for strictly negative rationals. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Modular { .. } => false,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rational,
            Coefficient::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Modular { value: a, modulus: p },
                Coefficient::Modular { value: b, modulus: q },
            ) if p == q => Coefficient::Modular {
                value: (a + b) % p,
                modulus: *p,
            },
            _ => panic!("coefficient field mismatch: {self:?} vs {other:?}"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Modular { value: a, modulus: p },
                Coefficient::Modular { value: b, modulus: q },
            ) if p == q => Coefficient::Modular {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!("coefficient field mismatch: {self:?} vs {other:?}"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.recip()),
            Coefficient::Modular { value, modulus } => Coefficient::Modular {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Integer value, if this is a rational with denominator one that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coefficient::Rational(r) if r.is_integer() => r.numer().to_i64(),
            Coefficient::Rational(_) => None,
            Coefficient::Modular { value, .. } => Some(*value as i64),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, Fermat
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(matches!(Field::prime(9), Err(Error::InvalidModulus(9))));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coefficient::Modular { value: 6, modulus: 7 });
        assert!(a.mul(&a).is_one());
        let three = f.from_i64(3);
        assert!(three.mul(&three.inv()).is_one());
        assert!(three.add(&three.neg()).is_zero());
    }

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rational;
        let half = q
            .from_rational(&BigRational::new(BigInt::from(-2), BigInt::from(-4)))
            .unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(half.add(&half), q.one());
    }

    #[test]
    fn rational_to_prime_field() {
        let f5 = Field::prime(5).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        // 3 * 2 = 6 = 1 mod 5
        assert_eq!(
            f5.from_rational(&third).unwrap(),
            Coefficient::Modular { value: 2, modulus: 5 }
        );
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert!(f5.from_rational(&fifth).is_err());
    }
}
