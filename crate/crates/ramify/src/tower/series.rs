//! Truncated expansion of `(1 + a)^m` inside a tower.
//!
//! For the expansion to make sense as a series, `a` must be small: every
//! monomial of `a` must have *negative* tower valuation, i.e. positive
//! valuation in the dual convention `v_dual = -v` used for series orders.
//! Coefficients come straight from the binomial residues, so the leading
//! nonzero correction appears at order `p^{v_p(m)} * v_dual(a)`; a
//! truncation order below that cannot certify the expansion and is
//! rejected.

use crate::arith::vp_i64;
use crate::error::Error;
use crate::lucas::binom_mod_p;
use crate::tower::{TowerDescriptor, TowerElement};

/// Drops every monomial of dual valuation above `trunc`.
fn truncate(
    tower: &TowerDescriptor,
    e: &TowerElement,
    level: usize,
    trunc: i64,
) -> Result<TowerElement, Error> {
    let mut out = TowerElement::zero(e.prime(), e.level());
    for (m, c) in e.terms() {
        let v = tower.monomial_valuation(m, level)?;
        if -v <= trunc {
            out = out.add(&TowerElement::monomial(e.prime(), m.clone(), c))?;
        }
    }
    out.at_level(e.level())
}

/// `(1 + a)^m` up to and including dual order `trunc`.
pub fn binomial_expand(
    tower: &TowerDescriptor,
    a: &TowerElement,
    m: i64,
    trunc: i64,
) -> Result<TowerElement, Error> {
    let p = tower.prime();
    if a.prime() != p {
        return Err(Error::ModulusMismatch { left: p.get(), right: a.prime().get() });
    }
    let level = a.level();
    if a.is_zero() || m == 0 {
        return TowerElement::one(p).at_level(level);
    }
    // dual valuation of a = minimum dual order of its monomials
    let mut dual = i64::MAX;
    for (mono, _) in a.terms() {
        dual = dual.min(-tower.monomial_valuation(mono, level)?);
    }
    if dual < 1 {
        return Err(Error::invalid(
            "series argument must have positive dual valuation (every monomial a proper pole)",
        ));
    }
    let leading = (p.get() as i128).pow(vp_i64(m, p)?) * dual as i128;
    if (trunc as i128) < leading {
        return Err(Error::TruncationTooCoarse {
            required: i64::try_from(leading).unwrap_or(i64::MAX),
            requested: trunc,
        });
    }
    let n_max = (trunc / dual) as u64;
    let mut acc = TowerElement::one(p).at_level(level)?;
    let mut a_pow = TowerElement::one(p).at_level(level)?;
    for n in 1..=n_max {
        a_pow = truncate(tower, &tower.mul(&a_pow, a)?, level, trunc)?;
        let c = binom_mod_p(m, n, p);
        if !c.is_zero() {
            acc = acc.add(&a_pow.scale(c))?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn frobenius_collapses_middle_terms() {
        // (1 + x)^p = 1 + x^p in characteristic p
        let t = TowerDescriptor::new(p5());
        let x = TowerElement::x_power(p5(), 1);
        let e = binomial_expand(&t, &x, 5, 5).unwrap();
        let expected = TowerElement::one(p5())
            .add(&TowerElement::x_power(p5(), 5))
            .unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn negative_exponent_leading_term() {
        // (1 + x)^-10: residues vanish below n = 5, C(-10,5) = 3 mod 5
        let t = TowerDescriptor::new(p5());
        let x = TowerElement::x_power(p5(), 1);
        let e = binomial_expand(&t, &x, -10, 5).unwrap();
        let expected = TowerElement::one(p5())
            .add(&TowerElement::x_power(p5(), 5).scale(crate::arith::FpElement::new(3, p5())))
            .unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn coarse_truncations_are_rejected() {
        let t = TowerDescriptor::new(p5());
        let x = TowerElement::x_power(p5(), 1);
        let err = binomial_expand(&t, &x, -10, 4).unwrap_err();
        assert_eq!(err, Error::TruncationTooCoarse { required: 5, requested: 4 });
    }

    #[test]
    fn arguments_with_poles_are_rejected() {
        let t = TowerDescriptor::new(p5());
        let bad = TowerElement::x_power(p5(), -1); // dual valuation -1
        assert!(matches!(
            binomial_expand(&t, &bad, 3, 10),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn inverse_series_cancels() {
        // (1 + x)^-1 * (1 + x) = 1 after truncation
        let t = TowerDescriptor::new(p5());
        let x = TowerElement::x_power(p5(), 1);
        let inv = binomial_expand(&t, &x, -1, 6).unwrap();
        let one_plus = TowerElement::one(p5()).add(&x).unwrap();
        let prod = t.mul(&inv, &one_plus).unwrap();
        let trimmed = truncate(&t, &prod, 0, 6).unwrap();
        assert_eq!(trimmed, TowerElement::one(p5()));
    }
}
