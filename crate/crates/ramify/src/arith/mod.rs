//! Scalar arithmetic: validated prime moduli, F_p residues, p-adic
//! valuations of integers, and exact rationals.
//!
//! Residues are stored in machine words (moduli are capped below 2^16, so
//! products fit comfortably in 64 bits).  Exact rationals are re-exported
//! from `num`; they are always reduced and keep a positive denominator,
//! which is exactly the invariant the ramification module relies on.

pub mod intpoly;

use std::fmt;

use crate::error::Error;

pub use num::{BigInt, BigRational};

/// A validated prime modulus in the range `2..65536`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Prime(u32);

impl Prime {
    /// Exclusive upper bound on supported moduli.
    pub const LIMIT: u32 = 1 << 16;

    /// Checks primality by trial division; the range cap keeps this cheap.
    pub fn new(p: u32) -> Result<Prime, Error> {
        if p < 2 || p >= Self::LIMIT {
            return Err(Error::NotPrime(p as u64));
        }
        if p % 2 == 0 {
            return if p == 2 { Ok(Prime(2)) } else { Err(Error::NotPrime(p as u64)) };
        }
        let mut d = 3;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p as u64));
            }
            d += 2;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Canonical residue of a signed integer in `0..p`.
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    /// Canonical residue of an arbitrary-precision integer in `0..p`.
    pub fn reduce_bigint(self, v: &BigInt) -> u32 {
        use num::ToPrimitive;
        let m: BigInt = v % self.0;
        let m = if m < BigInt::from(0) { m + self.0 } else { m };
        m.to_u32().expect("residue fits in u32")
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A residue in the prime field F_p, tagged with its modulus.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpElement {
    value: u32,
    modulus: Prime,
}

impl FpElement {
    pub fn new(value: i64, modulus: Prime) -> FpElement {
        FpElement { value: modulus.reduce_i64(value), modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: Prime) -> FpElement {
        FpElement { value: modulus.reduce_bigint(value), modulus }
    }

    pub fn zero(modulus: Prime) -> FpElement {
        FpElement { value: 0, modulus }
    }

    pub fn one(modulus: Prime) -> FpElement {
        FpElement::new(1, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Representative of smallest absolute value, preferring the positive
    /// one on ties; used when rendering coefficients.
    pub fn signed(self) -> i64 {
        let p = self.modulus.get() as i64;
        let c = self.value as i64;
        if p - c < c {
            c - p
        } else {
            c
        }
    }

    fn check_same(self, rhs: FpElement) -> Result<Prime, Error> {
        if self.modulus == rhs.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: rhs.modulus.get(),
            })
        }
    }

    pub fn checked_add(self, rhs: FpElement) -> Result<FpElement, Error> {
        let p = self.check_same(rhs)?;
        Ok(FpElement { value: (self.value + rhs.value) % p.get(), modulus: p })
    }

    pub fn checked_sub(self, rhs: FpElement) -> Result<FpElement, Error> {
        let p = self.check_same(rhs)?;
        Ok(FpElement {
            value: (self.value + p.get() - rhs.value) % p.get(),
            modulus: p,
        })
    }

    pub fn checked_mul(self, rhs: FpElement) -> Result<FpElement, Error> {
        let p = self.check_same(rhs)?;
        let prod = (self.value as u64 * rhs.value as u64) % p.get() as u64;
        Ok(FpElement { value: prod as u32, modulus: p })
    }

    pub fn pow(self, mut e: u64) -> FpElement {
        let mut base = self;
        let mut acc = FpElement::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(base).expect("same modulus");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(base).expect("same modulus");
            }
        }
        acc
    }

    /// Multiplicative inverse via Fermat; zero is rejected.
    pub fn inv(self) -> Result<FpElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.modulus.get() as u64 - 2))
    }
}

impl std::ops::Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.checked_add(rhs).expect("modulus mismatch")
    }
}

impl std::ops::Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.checked_sub(rhs).expect("modulus mismatch")
    }
}

impl std::ops::Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.checked_mul(rhs).expect("modulus mismatch")
    }
}

impl std::ops::Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement::zero(self.modulus) - self
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Exponent of the largest power of `p` dividing `m`; `m` must be nonzero.
pub fn vp_bigint(m: &BigInt, p: Prime) -> Result<u32, Error> {
    use num::Zero;
    if m.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let p = BigInt::from(p.get());
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (q, r) = num::Integer::div_rem(&m, &p);
        if !r.is_zero() {
            return Ok(v);
        }
        m = q;
        v += 1;
    }
}

/// `vp_bigint` specialised to machine integers.
pub fn vp_i64(m: i64, p: Prime) -> Result<u32, Error> {
    if m == 0 {
        return Err(Error::DivisionByZero);
    }
    let p = p.get() as i64;
    let mut m = m;
    let mut v = 0;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    Ok(v)
}
