//! The Herbrand function: lower jumps in, upper jumps out.
//!
//! phi is piecewise linear with slope 1/p^w once w generators have
//! dropped out of the filtration.  Upper jumps are phi at the lower jumps,
//! and the Hasse-Arf property asks them to be integers.  Working over
//! exact rationals keeps a fractional upper jump like 7/3 visible instead
//! of rounding it away.
//!
//! ```bash
//! cargo run --example herbrand_phi
//! ```

use num::{BigInt, BigRational};
use ramify::{Error, JumpData, Prime};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn main() -> Result<(), Error> {
    // the jump data of the height-3 tower over F_2: each level cyclic of
    // degree 2, lower jumps 1, 3, 11
    let d = JumpData::new(Prime::new(2)?, vec![1, 1, 1], vec![1, 3, 11])?;

    println!("phi for lower jumps (1, 3, 11) over F_2:");
    for u in 0..=12 {
        println!("  phi({u:2}) = {}", d.herbrand_phi(&rat(u))?);
    }
    println!();

    let uppers: Vec<String> = d.upper_jumps().iter().map(|u| u.to_string()).collect();
    println!("upper jumps: {}", uppers.join(", "));
    let verdict = d.hasse_arf()?;
    println!("hasse-arf holds: {}", verdict.holds);
    for w in &verdict.witnesses {
        println!(
            "  level {}: jump difference {} must be divisible by {} -> {}",
            w.level,
            w.difference,
            w.required_divisor,
            if w.divides { "ok" } else { "fails" }
        );
    }
    println!();

    // a filtration that violates Hasse-Arf: lower jumps (1, 5) over F_3
    // give phi(5) = 1 + 4/3 = 7/3
    let bad = JumpData::new(Prime::new(3)?, vec![1, 1], vec![1, 5])?;
    let uppers: Vec<String> = bad.upper_jumps().iter().map(|u| u.to_string()).collect();
    println!("lower jumps (1, 5) over F_3 -> upper jumps {}", uppers.join(", "));
    println!("hasse-arf holds: {}", bad.hasse_arf()?.holds);
    Ok(())
}
