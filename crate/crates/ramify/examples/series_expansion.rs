//! Binomial series (1 + a)^m with a negative or p-divisible exponent.
//!
//! Over F_p((x)) the binomial series for (1 + a)^m terminates mod p at
//! every truncation order: C(m, n) vanishes mod p for most n, and the
//! terms a^n sink below the truncation threshold.  The first index that
//! contributes after n = 0 is p^(p-adic valuation of m), so the requested
//! precision must reach at least that deep — asking for less is reported
//! as an error instead of returning a silently misleading answer.
//!
//! ```bash
//! cargo run --example series_expansion
//! ```

use ramify::io::render::render_element;
use ramify::tower::binomial_expand;
use ramify::{Error, FpElement, Prime, TowerDescriptor, TowerElement, TowerMonomial};

fn main() -> Result<(), Error> {
    let p = Prime::new(5)?;
    let t = TowerDescriptor::new(p);

    // a = x + 2x^2, a proper pole in the dual order used for truncation
    let a = TowerElement::monomial(p, TowerMonomial::x_power(1), FpElement::one(p)).add(
        &TowerElement::monomial(p, TowerMonomial::x_power(2), FpElement::new(2, p)),
    )?;
    println!("a = {}", render_element(&t, &a)?);
    println!();

    for m in [-1i64, -4, 7] {
        let s = binomial_expand(&t, &a, m, 8)?;
        println!("(1 + a)^{m} = {} + O(x^9)", render_element(&t, &s)?);
    }
    println!();

    // multiplying the truncated inverse back: everything above x^8 is noise
    let inv = binomial_expand(&t, &a, -1, 8)?;
    let one_plus_a = TowerElement::one(p).add(&a)?;
    let product = t.mul(&inv, &one_plus_a)?;
    println!("(1 + a)^-1 * (1 + a) = {}", render_element(&t, &product)?);
    println!();

    // m = 25 = 5^2 means the first correction appears only at order 25,
    // so a truncation order of 24 cannot tell the series from 1
    let s = binomial_expand(&t, &a, 25, 25)?;
    println!("(1 + a)^25 to order 25: {}", render_element(&t, &s)?);
    match binomial_expand(&t, &a, 25, 24) {
        Err(Error::TruncationTooCoarse { required, requested }) => println!(
            "(1 + a)^25 to order 24 is refused: the first correction needs order {required}, got {requested}"
        ),
        _ => println!("unexpected"),
    }
    Ok(())
}
