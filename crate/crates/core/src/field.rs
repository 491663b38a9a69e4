//! Ground fields: exact rationals and prime fields `F_p` with `p < 2^31`.
//!
//! A [`Field`] value is a small context object; elements are plain values
//! of the associated type, so polynomials and matrices carry the context
//! alongside their coefficients.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default prime used when `F_p` is requested without an explicit `p`.
pub const DEFAULT_PRIME: u32 = 32003;

pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Canonical numerator/denominator pair (denominator positive; `1` over `F_p`).
    fn to_ratio(&self, a: &Self::Elem) -> (BigInt, BigInt);
    /// `"Q"` or `"Fp:p"`.
    fn tag(&self) -> String;
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn format(&self, a: &Self::Elem) -> String {
        let (num, den) = self.to_ratio(a);
        if den.is_one() {
            num.to_string()
        } else {
            format!("{num}/{den}")
        }
    }
}

/// The rational numbers, elements kept in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Field("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn to_ratio(&self, a: &BigRational) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
    fn tag(&self) -> String {
        "Q".to_string()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The prime field `F_p`; representatives live in `[0, p-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::Field(format!("p = {p} must be below 2^31")));
        }
        if !is_prime(p as u64) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduce a rational number modulo `p`, `None` if `p` divides the denominator.
    pub fn reduce(&self, r: &BigRational) -> Option<u32> {
        self.from_ratio(r.numer(), r.denom()).ok()
    }

    fn reduce_int(&self, v: &BigInt) -> u32 {
        let m = v.mod_floor(&BigInt::from(self.p));
        m.to_u32().expect("residue fits in u32")
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u32> {
        let d = self.reduce_int(den);
        if d == 0 {
            return Err(Error::Field(format!("denominator vanishes mod {}", self.p)));
        }
        let n = self.reduce_int(num);
        Ok(self.mul(&n, &self.inv(&d).expect("nonzero")))
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a as u64, self.p as u64 - 2))
        }
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn to_ratio(&self, a: &u32) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }
    fn tag(&self) -> String {
        format!("Fp:{}", self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parse a rational literal such as `"3"`, `"-4/6"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Field(format!("cannot parse rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Ok(r)
}
