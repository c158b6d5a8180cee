use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring: the rationals, or Z/p for a
/// prime p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if p >= (1 << 31) {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::zero())),
            FieldSpec::PrimeField(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::from(BigInt::from(n)))),
            FieldSpec::PrimeField(p) => {
                let p = *p as i64;
                Coeff::Mod(n.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(Box::new(BigRational::from(n.clone()))),
            FieldSpec::PrimeField(p) => {
                let p = BigInt::from(*p);
                let r = ((n % &p) + &p) % &p;
                let digits = r.to_u64_digits().1;
                Coeff::Mod(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::ZeroArgument);
                }
                Ok(Coeff::Rat(Box::new(BigRational::new(
                    num.clone(),
                    den.clone(),
                ))))
            }
            FieldSpec::PrimeField(_) => {
                let d = self.from_bigint(den);
                if self.is_zero(&d) {
                    return Err(Error::ZeroArgument);
                }
                Ok(self.mul(&self.from_bigint(num), &self.inv(&d)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x + &**y))
            }
            (FieldSpec::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod((x + y) % (*p as u64))
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x - &**y))
            }
            (FieldSpec::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                let p = *p as u64;
                Coeff::Mod((x + p - y) % p)
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x * &**y))
            }
            (FieldSpec::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                // residues < 2^31, so the product fits in u64
                Coeff::Mod((x * y) % (*p as u64))
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rat(x)) => Coeff::Rat(Box::new(-&**x)),
            (FieldSpec::PrimeField(p), Coeff::Mod(x)) => {
                let p = *p as u64;
                Coeff::Mod((p - x) % p)
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Rat(Box::new(x.recip()))
            }
            (FieldSpec::PrimeField(p), Coeff::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Mod(mod_inverse(*x, *p as u64))
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Renders with prime-field residues lifted to the symmetric range
    /// [-(p-1)/2, (p-1)/2] so small negative coefficients read naturally.
    pub fn render(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v) => {
                let p = self.characteristic();
                if *v > p / 2 {
                    format!("-{}", p - v)
                } else {
                    v.to_string()
                }
            }
        }
    }

    /// True when the canonical sign of the coefficient is negative; used to
    /// normalize polynomials up to sign.
    pub fn is_negative_rep(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(v) => *v > self.characteristic() / 2,
        }
    }
}

/// An exact coefficient. `Rat` is a fully reduced fraction of
/// arbitrary-precision integers; `Mod` is a residue in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(Box<BigRational>),
    Mod(u64),
}

impl Coeff {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(r) => Some(r),
            Coeff::Mod(_) => None,
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed words; p < 2^31 so products fit
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    s0.rem_euclid(p as i64) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(32003).is_ok());
        assert!(matches!(
            FieldSpec::prime_field(32001),
            Err(Error::NotPrime(_))
        ));
        assert!(matches!(
            FieldSpec::prime_field(1 << 32),
            Err(Error::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn mod_arithmetic() {
        let f = FieldSpec::prime_field(7).unwrap();
        let a = f.from_i64(-3); // 4 mod 7
        assert_eq!(a, Coeff::Mod(4));
        let b = f.from_i64(5);
        assert_eq!(f.add(&a, &b), Coeff::Mod(2));
        assert_eq!(f.mul(&a, &b), Coeff::Mod(6));
        assert_eq!(f.mul(&f.inv(&b), &b), f.one());
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let f = FieldSpec::Rationals;
        let half = f.from_ratio(&BigInt::from(2), &BigInt::from(4)).unwrap();
        assert_eq!(f.render(&half), "1/2");
        let one = f.add(&half, &half);
        assert_eq!(one, f.one());
    }
}
