//! Binomial coefficients modulo a prime, for arbitrary (also negative)
//! upper argument.
//!
//! The residue of `C(m, n)` mod p is a digit-wise product of small binomial
//! coefficients over the base-p expansions.  Negative upper arguments are
//! folded into nonnegative ones through `C(m, n) = (-1)^n C(-m+n-1, n)`.
//! Two consequences drive the rest of the crate: the least `n > 0` with
//! `C(m, n) != 0 (mod p)` is `p^{v_p(m)}`, and the residue there is
//! `m / p^{v_p(m)} mod p`.

use crate::arith::{vp_i64, FpElement, Prime};
use crate::error::Error;

/// Little-endian base-p digits of a nonnegative integer; `0` has no digits.
pub fn base_p_digits(m: i64, p: Prime) -> Result<Vec<u32>, Error> {
    if m < 0 {
        return Err(Error::invalid(format!("base-p digits of negative integer {m}")));
    }
    let p = p.get() as u64;
    let mut m = m as u64;
    let mut digits = Vec::new();
    while m > 0 {
        digits.push((m % p) as u32);
        m /= p;
    }
    Ok(digits)
}

/// `C(a, b) mod p` for `0 <= b <= a < p`, by a multiplicative loop.
fn small_binom(a: u32, b: u32, p: Prime) -> FpElement {
    debug_assert!(b <= a && a < p.get());
    let mut acc = FpElement::one(p);
    for i in 1..=b {
        // numerator factor (a - b + i) and denominator factor i, both
        // nonzero mod p because they lie in 1..p
        let num = FpElement::new((a - b + i) as i64, p);
        let den = FpElement::new(i as i64, p);
        acc = acc * num * den.inv().expect("nonzero below p");
    }
    acc
}

/// Digit-wise product over base-p expansions of nonnegative arguments.
fn binom_nonneg(mut m: u128, mut n: u128, p: Prime) -> FpElement {
    let pl = p.get() as u128;
    let mut acc = FpElement::one(p);
    while n > 0 || m > 0 {
        let dm = (m % pl) as u32;
        let dn = (n % pl) as u32;
        if dn > dm {
            return FpElement::zero(p);
        }
        acc = acc * small_binom(dm, dn, p);
        m /= pl;
        n /= pl;
    }
    acc
}

/// `C(m, n) mod p` for any integer `m` and nonnegative `n`.
pub fn binom_mod_p(m: i64, n: u64, p: Prime) -> FpElement {
    if n == 0 {
        return FpElement::one(p);
    }
    if m >= 0 {
        // n > m forces a digit of n to exceed the matching digit of m
        return binom_nonneg(m as u128, n as u128, p);
    }
    // C(m, n) = (-1)^n C(-m + n - 1, n)
    let top = (-(m as i128)) as u128 + n as u128 - 1;
    let unsigned = binom_nonneg(top, n as u128, p);
    if n % 2 == 1 {
        -unsigned
    } else {
        unsigned
    }
}

/// The least `n > 0` with `C(m, n) != 0 mod p`, namely `p^{v_p(m)}`.
pub fn first_nonzero_binom_index(m: i64, p: Prime) -> Result<u64, Error> {
    let v = vp_i64(m, p)?;
    // p^v divides |m|, so the power fits in u64
    Ok((p.get() as u64).pow(v))
}

/// The (always nonzero) residue at the first nonzero index:
/// `m / p^{v_p(m)} mod p`.
pub fn leading_binom_value(m: i64, p: Prime) -> Result<FpElement, Error> {
    let v = vp_i64(m, p)?;
    let unit = m / (p.get() as i64).pow(v);
    let value = FpElement::new(unit, p);
    debug_assert!(!value.is_zero());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, One, Signed, ToPrimitive, Zero};

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    /// Independent reference: the exact product
    /// `m (m-1) ... (m-n+1) / n!` over big integers, reduced mod p.
    fn binom_exact(m: i64, n: u64, modulus: Prime) -> u32 {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..n as i64 {
            num *= BigInt::from(m - i);
            den *= BigInt::from(i + 1);
        }
        let q = num / den;
        let r = ((&q % modulus.get()) + modulus.get()) % modulus.get();
        r.to_u32().unwrap()
    }

    #[test]
    fn digits_little_endian() {
        assert_eq!(base_p_digits(10, p(5)).unwrap(), vec![0, 2]);
        assert_eq!(base_p_digits(0, p(5)).unwrap(), Vec::<u32>::new());
        assert_eq!(base_p_digits(11, p(2)).unwrap(), vec![1, 1, 0, 1]);
        assert!(base_p_digits(-1, p(5)).is_err());
    }

    #[test]
    fn known_residues() {
        // C(10,5) = 252 = 2 mod 5; via digits: C(0,0) C(2,1) = 2
        assert_eq!(binom_mod_p(10, 5, p(5)).value(), 2);
        // C(-10,5) = -2002 = 3 mod 5
        assert_eq!(binom_mod_p(-10, 5, p(5)).value(), 3);
        assert_eq!(binom_mod_p(7, 0, p(3)).value(), 1);
        assert_eq!(binom_mod_p(4, 7, p(3)).value(), 0);
    }

    #[test]
    fn agrees_with_exact_products() {
        for &q in &[2u32, 3, 5, 7] {
            let modulus = p(q);
            for m in -60..=60 {
                for n in 0..=60 {
                    assert_eq!(
                        binom_mod_p(m, n, modulus).value(),
                        binom_exact(m, n as u64, modulus),
                        "C({m},{n}) mod {q}"
                    );
                }
            }
        }
    }

    #[test]
    fn first_nonzero_index_and_value() {
        assert_eq!(first_nonzero_binom_index(50, p(5)).unwrap(), 25);
        assert_eq!(leading_binom_value(50, p(5)).unwrap().value(), 2);
        assert_eq!(first_nonzero_binom_index(-50, p(5)).unwrap(), 25);
        // -50 / 25 = -2 = 3 mod 5
        assert_eq!(leading_binom_value(-50, p(5)).unwrap().value(), 3);
        assert_eq!(first_nonzero_binom_index(7, p(2)).unwrap(), 1);
        assert!(first_nonzero_binom_index(0, p(5)).is_err());
    }

    #[test]
    fn index_matches_brute_force_scan() {
        for &q in &[2u32, 3, 5] {
            let modulus = p(q);
            for m in (-80..=80).filter(|&m| m != 0) {
                let predicted = first_nonzero_binom_index(m, modulus).unwrap();
                let scanned = (1..)
                    .find(|&n| binom_mod_p(m, n, modulus).value() != 0)
                    .unwrap();
                assert_eq!(predicted, scanned, "m = {m}, p = {q}");
                assert_eq!(
                    binom_mod_p(m, predicted, modulus),
                    leading_binom_value(m, modulus).unwrap()
                );
            }
        }
    }

    #[test]
    fn exact_reference_is_integral() {
        // the product formula used as oracle really divides exactly
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..9i64 {
            num *= BigInt::from(-10 - i);
            den *= BigInt::from(i + 1);
        }
        assert!((num % den).abs().is_zero());
    }
}
