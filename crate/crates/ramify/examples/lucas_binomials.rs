//! Binomial coefficients modulo p, digit by digit.
//!
//! `binom_mod_p` reduces `C(m, n) mod p` to products of small binomials
//! of the base-p digits, so it is exact for any `i64` numerator — including
//! negative ones, which is what series exponents need.  For a numerator `m`
//! prime to p times a power of p, the first index with a nonzero binomial
//! is exactly that power of p.
//!
//! ```bash
//! cargo run --example lucas_binomials
//! ```

use ramify::lucas::{base_p_digits, binom_mod_p, first_nonzero_binom_index, leading_binom_value};
use ramify::{Error, Prime};

fn main() -> Result<(), Error> {
    let p = Prime::new(5)?;

    println!("base-5 digits of 117: {:?}", base_p_digits(117, p)?);
    println!();

    // a small Pascal triangle mod 5; rows divisible by 5 are almost empty
    println!("C(m, n) mod 5 for m = 0..10, n = 0..=m:");
    for m in 0..10i64 {
        let row: Vec<String> = (0..=m as u64)
            .map(|n| binom_mod_p(m, n, p).value().to_string())
            .collect();
        println!("  m = {m}: {}", row.join(" "));
    }
    println!();

    // negative numerators fold through C(-m, n) = (-1)^n C(m + n - 1, n)
    println!("C(-3, n) mod 5 for n = 0..8:");
    let row: Vec<String> = (0..8u64)
        .map(|n| binom_mod_p(-3, n, p).value().to_string())
        .collect();
    println!("  {}", row.join(" "));
    println!();

    // the first nonzero index of C(m, .) is p^(p-adic valuation of m)
    for m in [50i64, -50, 121, -11] {
        let n = first_nonzero_binom_index(m, p)?;
        let c = leading_binom_value(m, p)?;
        println!("m = {m:4}: first n > 0 with C(m, n) != 0 mod 5 is n = {n}, C(m, {n}) = {c}");
    }
    Ok(())
}
