//! Hand-built towers: describing each level directly and printing the
//! same report the command-line interface produces.
//!
//! A tower does not have to come from a Witt vector.  Any chain of
//! equations f_i^p - f_i = D_i works, as long as each D_i is ramified
//! enough to be normalized.  This one over F_3 is the smallest example
//! where the Hasse-Arf property fails: the second equation x*f1^2 gives
//! lower jumps (1, 5), and phi(5) = 7/3 is not an integer.
//!
//! ```bash
//! cargo run --example analyze_input
//! ```

use ramify::io::parse::parse_expression;
use ramify::io::report::ReportDocument;
use ramify::{analyze_tower, Error, Prime, TowerDescriptor};

fn main() -> Result<(), Error> {
    let p = Prime::new(3)?;
    let mut t = TowerDescriptor::new(p);
    t.add_level(&parse_expression("x", p)?)?;
    t.add_level(&parse_expression("x*f1^2", p)?)?;

    let report = analyze_tower(&t, None)?;
    let doc = ReportDocument::from_analysis(&t, &report)?;

    println!("--- text report ---");
    print!("{}", doc.to_text());
    println!();
    println!("--- the same data as JSON ---");
    print!("{}", doc.to_json());
    Ok(())
}
