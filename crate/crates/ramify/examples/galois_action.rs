//! Recovering ramification jumps from the Galois action alone.
//!
//! A tower built from a Witt vector is cyclic of degree p^n, and a
//! distinguished generator sigma acts by adding the unit Witt vector to
//! (f1, ..., fn).  The images sigma(f_i) follow from the addition
//! polynomials.  For each level j, the element sigma^(p^j) fixes the
//! subfield below and moves a test element u of the top field by
//!
//!   i(sigma^(p^j)) = v(sigma^(p^j)(u) - u) - v(u),
//!
//! which is constant over test elements of valuation prime to p and equals
//! the lower jump b_{j+1}.  So the filtration is visible without any
//! valuation table for the defining equations.
//!
//! ```bash
//! cargo run --example galois_action
//! ```

use ramify::io::render::render_element;
use ramify::ramification::{jumps_from_galois, order_function};
use ramify::witt::build_tower;
use ramify::{Error, Prime, TowerElement};

fn main() -> Result<(), Error> {
    let p = Prime::new(2)?;
    let vector = vec![
        TowerElement::x_power(p, 1),
        TowerElement::zero(p, 0),
        TowerElement::zero(p, 0),
    ];
    let wt = build_tower(p, &vector)?;
    let t = wt.tower();

    println!("images of the generators under sigma:");
    let images = wt.generator_images()?;
    for (i, img) in images.iter().enumerate() {
        println!("  sigma(f{}) = {}", i + 1, render_element(t, img)?);
    }
    println!(
        "defining relations preserved: {}",
        wt.verify_relations(&images)?
    );
    println!();

    // sigma^2 and sigma^4 fix ever larger subfields and move the top
    // generator by ever less
    let f3 = TowerElement::generator(p, 3);
    for k in [1u64, 2, 4] {
        let images_k = wt.power_images(k)?;
        let order = order_function(t, &images_k, &f3)?;
        match order {
            Some(i) => println!("i(sigma^{k}) = {i} on the test element f3"),
            None => println!("sigma^{k} fixes f3"),
        }
    }
    println!();

    println!("jumps recovered from the action: {:?}", jumps_from_galois(&wt)?);
    println!("jumps from the valuation theory: {:?}", t.jumps());
    Ok(())
}
