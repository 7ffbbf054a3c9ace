//! Witt vector addition: the universal polynomials and what they compute.
//!
//! The addition polynomials `S_0, S_1, ...` have integer coefficients and
//! are determined by making the ghost components additive.  Adding the
//! vector (1, 0, ..., 0) repeatedly shows why towers built from a single
//! Witt vector are cyclic of order p^n: the p-fold multiple of the unit is
//! the shift V(1), so the unit has additive order p^n.
//!
//! ```bash
//! cargo run --example witt_polynomials
//! ```

use ramify::io::render::render_witt_polynomial;
use ramify::{Error, FpElement, Prime, WittSystem};

fn vec_str(v: &[FpElement]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.value().to_string()).collect();
    format!("({})", parts.join(", "))
}

fn main() -> Result<(), Error> {
    let p = Prime::new(3)?;
    let system = WittSystem::new(p, 3)?;

    println!("addition polynomials for p = 3, length 3:");
    for (i, s) in system.addition_polynomials().iter().enumerate() {
        println!("  S_{i} = {}", render_witt_polynomial(s, system.length()));
    }
    println!();

    // componentwise arithmetic on constant vectors over F_3
    let a = vec![
        FpElement::new(1, p),
        FpElement::new(2, p),
        FpElement::new(0, p),
    ];
    let b = vec![
        FpElement::new(2, p),
        FpElement::new(2, p),
        FpElement::new(1, p),
    ];
    println!("{} + {} = {}", vec_str(&a), vec_str(&b), vec_str(&system.add_constants(&a, &b)?));
    println!();

    // multiples of the unit vector: p times the unit is the shift V(1),
    // so the unit generates a cyclic group of order p^3 = 27
    println!("k * (1, 0, 0) in W_3(F_3):");
    for k in [1u64, 2, 3, 9, 26, 27] {
        println!("  k = {k:2}: {}", vec_str(&system.multiple_of_unit(k)?));
    }
    Ok(())
}
