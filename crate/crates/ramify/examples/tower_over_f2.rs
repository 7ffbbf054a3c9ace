//! The height-3 tower over F_2((x)) generated by the Witt vector (x, 0, 0).
//!
//! Every step of the analysis is printed: the raw defining elements that
//! fall out of the Witt addition law, the substitution that makes the last
//! equation visibly ramified, the valuation table, and the jump data in
//! both numberings.  The lower jumps come out as (1, 3, 11) and the upper
//! jumps as (1, 2, 4), so the Hasse-Arf property holds.
//!
//! ```bash
//! cargo run --example tower_over_f2
//! ```

use ramify::io::render::{render_element, render_equation, render_substitution};
use ramify::ramification::{structural_check, MinimalTermData};
use ramify::witt::build_tower;
use ramify::{Error, JumpData, Prime, TowerElement};

fn main() -> Result<(), Error> {
    let p = Prime::new(2)?;
    let vector = vec![
        TowerElement::x_power(p, 1),
        TowerElement::zero(p, 0),
        TowerElement::zero(p, 0),
    ];
    let wt = build_tower(p, &vector)?;
    let t = wt.tower();

    println!("raw defining elements (free of the tower relations):");
    for (i, d) in wt.raw_defining().iter().enumerate() {
        println!("  f{}^2 - f{} = {}", i + 1, i + 1, render_element(t, d)?);
    }
    println!();

    println!("normalized defining equations:");
    for k in 1..=t.height() {
        println!("  {}", render_equation(t, k)?);
    }
    println!();

    for (k, level) in t.levels().iter().enumerate() {
        if !level.substitutions().is_empty() {
            println!(
                "substitution at level {}: {}",
                k + 1,
                render_substitution(k + 1, level.substitutions())
            );
        }
    }
    println!();

    println!("valuation table (rows are the fields, columns x, f1, f2, f3):");
    for (k, row) in t.valuation_table()?.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:4}")).collect();
        println!("  F_{k}: {}", cells.join(" "));
    }
    println!();

    let jumps = JumpData::from_tower(t)?;
    println!("lower jumps: {:?}", jumps.lower_jumps());
    let uppers: Vec<String> = jumps.upper_jumps().iter().map(|u| u.to_string()).collect();
    println!("upper jumps: {}", uppers.join(", "));
    println!("hasse-arf:   {}", jumps.hasse_arf()?.holds);

    let minimal = MinimalTermData::from_tower(t)?;
    println!("structural checks per level: {:?}", structural_check(&minimal));
    Ok(())
}
