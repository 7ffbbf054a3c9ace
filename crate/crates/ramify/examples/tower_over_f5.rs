//! The height-3 tower over F_5((x)) generated by the Witt vector (x, 0, 0).
//!
//! The interesting step is at level 3: the raw defining element has minimal
//! term -x^24*f1 of valuation -605 = -5 * 121, which is divisible by p and
//! therefore hides the true jump.  Solving one digit-bounded equation in
//! the jump weights finds the unique monomial x^4*f2 of valuation -121, and
//! replacing f3 by f3 + x^4*f2 moves the minimal valuation to -521, which
//! is prime to 5.  The jumps are (1, 21, 521); the upper numbering turns
//! them into (1, 5, 25).
//!
//! ```bash
//! cargo run --example tower_over_f5
//! ```

use ramify::io::render::{render_element, render_substitution};
use ramify::witt::build_tower;
use ramify::{analyze_tower, Error, Prime, TowerElement};

fn main() -> Result<(), Error> {
    let p = Prime::new(5)?;
    let vector = vec![
        TowerElement::x_power(p, 1),
        TowerElement::zero(p, 0),
        TowerElement::zero(p, 0),
    ];
    let wt = build_tower(p, &vector)?;
    let t = wt.tower();

    println!("second defining equation, straight from the addition law:");
    println!("  f2^5 - f2 = {}", render_element(t, t.levels()[1].defining())?);
    println!();

    let raw = &wt.raw_defining()[2];
    let (c, m) = t.minimal_term_at(raw, 2)?;
    let min = TowerElement::monomial(p, m.clone(), c);
    println!(
        "raw level-3 element: {} terms, minimal term {} of valuation {}",
        raw.num_terms(),
        render_element(t, &min)?,
        t.monomial_valuation(&m, 2)?
    );
    let level3 = &t.levels()[2];
    println!("  {}", render_substitution(3, level3.substitutions()));
    let (c, m) = t.minimal_term_at(level3.defining(), 2)?;
    let min = TowerElement::monomial(p, m.clone(), c);
    println!(
        "after the substitution the minimal term is {}, valuation {}",
        render_element(t, &min)?,
        t.monomial_valuation(&m, 2)?
    );
    println!();

    let report = analyze_tower(t, None)?;
    println!("lower jumps: {:?}", report.lower_jumps);
    let uppers: Vec<String> = report.upper_jumps.iter().map(|u| u.to_string()).collect();
    println!("upper jumps: {}", uppers.join(", "));
    println!("hasse-arf:   {}", report.hasse_arf.holds);
    println!("structural:  {:?}", report.structural);
    Ok(())
}
