//! Command-line front end.
//!
//! Subcommands:
//!
//! * `lucas binom --p P --m M --n N` — one binomial coefficient mod p.
//! * `lucas index --p P --m M` — first index with a nonzero binomial, and
//!   its value.
//! * `witt polys --p P --n N` — the first N addition polynomials.
//! * `tower from-witt --p P --vector "x, 0, 0"` — build and analyze the
//!   tower generated by a Witt vector.
//! * `tower analyze FILE` — analyze a tower described by a JSON input
//!   document (`witt` or `levels`).
//! * `galois check --p P --vector ...` — generator images, relation
//!   check, and jumps recovered from the action.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 on internal errors
//! (broken invariants; these indicate a bug, not bad input).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::arith::Prime;
use crate::error::Error;
use crate::ramification::analyze_tower;
use crate::tower::{TowerDescriptor, TowerElement};
use crate::witt::{build_tower, WittSystem, WittTower};

use super::parse::parse_expression;
use super::render;
use super::report::{GaloisDocument, ReportDocument};

#[derive(Parser, Debug)]
#[command(
    name = "ramify",
    version,
    about = "ramification jumps of Artin-Schreier-Witt towers over F_p((x))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binomial coefficients modulo p via base-p digits
    #[command(subcommand)]
    Lucas(LucasCommand),
    /// Witt vector addition polynomials
    #[command(subcommand)]
    Witt(WittCommand),
    /// Build towers and compute their ramification data
    #[command(subcommand)]
    Tower(TowerCommand),
    /// The Galois action on a Witt-generated tower
    #[command(subcommand)]
    Galois(GaloisCommand),
}

#[derive(Subcommand, Debug)]
enum LucasCommand {
    /// Print binom(m, n) mod p (m may be negative)
    Binom(BinomArgs),
    /// Print the first n > 0 with binom(m, n) nonzero mod p, and its value
    Index(IndexArgs),
}

#[derive(Args, Debug)]
struct BinomArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long)]
    n: u64,
}

#[derive(Args, Debug)]
struct IndexArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Subcommand, Debug)]
enum WittCommand {
    /// Print the addition polynomials S_0..S_{n-1}
    Polys(PolysArgs),
}

#[derive(Args, Debug)]
struct PolysArgs {
    #[arg(long)]
    p: u32,
    /// Vector length (1..=4)
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum TowerCommand {
    /// Build the tower generated by a Witt vector and analyze it
    FromWitt(FromWittArgs),
    /// Analyze a tower described by a JSON input document
    Analyze(AnalyzeArgs),
}

#[derive(Args, Debug)]
struct FromWittArgs {
    #[arg(long)]
    p: u32,
    /// Comma-separated components, e.g. "x, 0, 0"
    #[arg(long)]
    vector: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Recover the jumps from the Galois action and cross-check them
    #[arg(long)]
    galois_check: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Path to the input document
    file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Recover the jumps from the Galois action and cross-check them
    #[arg(long)]
    galois_check: bool,
}

#[derive(Subcommand, Debug)]
enum GaloisCommand {
    /// Print generator images and verify the defining relations
    Check(CheckArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    p: u32,
    /// Comma-separated Witt vector components
    #[arg(long)]
    vector: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

/// JSON input document for `tower analyze`. Exactly one of `witt` and
/// `levels` must be present.
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct TowerInputDocument {
    p: u32,
    #[serde(default)]
    witt: Option<Vec<String>>,
    #[serde(default)]
    levels: Option<Vec<String>>,
    #[serde(default)]
    galois_check: Option<bool>,
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn dispatch(command: Command) -> Result<(), Error> {
    match command {
        Command::Lucas(LucasCommand::Binom(args)) => {
            let p = Prime::new(args.p)?;
            println!("{}", crate::lucas::binom_mod_p(args.m, args.n, p).value());
            Ok(())
        }
        Command::Lucas(LucasCommand::Index(args)) => {
            let p = Prime::new(args.p)?;
            let index = crate::lucas::first_nonzero_binom_index(args.m, p)?;
            let value = crate::lucas::leading_binom_value(args.m, p)?;
            println!("index: {index}");
            println!("value: {}", value.value());
            Ok(())
        }
        Command::Witt(WittCommand::Polys(args)) => {
            let p = Prime::new(args.p)?;
            let system = WittSystem::new(p, args.n)?;
            for (i, poly) in system.addition_polynomials().iter().enumerate() {
                println!("S_{i} = {}", render::render_witt_polynomial(poly, args.n));
            }
            Ok(())
        }
        Command::Tower(TowerCommand::FromWitt(args)) => {
            let p = Prime::new(args.p)?;
            let wt = build_from_vector(p, &args.vector)?;
            emit_tower_report(wt.tower(), args.galois_check.then_some(&wt), args.json)
        }
        Command::Tower(TowerCommand::Analyze(args)) => {
            let text = std::fs::read_to_string(&args.file).map_err(|e| {
                Error::invalid(format!("cannot read {}: {e}", args.file.display()))
            })?;
            let doc: TowerInputDocument = serde_json::from_str(&text)
                .map_err(|e| Error::invalid(format!("malformed input document: {e}")))?;
            analyze_document(doc, args.json, args.galois_check)
        }
        Command::Galois(GaloisCommand::Check(args)) => {
            let p = Prime::new(args.p)?;
            let wt = build_from_vector(p, &args.vector)?;
            let doc = GaloisDocument::from_witt_tower(&wt)?;
            if args.json {
                print!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            Ok(())
        }
    }
}

fn parse_vector(p: Prime, src: &str) -> Result<Vec<TowerElement>, Error> {
    src.split(',')
        .map(|part| parse_expression(part.trim(), p).map_err(Error::from))
        .collect()
}

fn build_from_vector(p: Prime, src: &str) -> Result<WittTower, Error> {
    build_tower(p, &parse_vector(p, src)?)
}

fn analyze_document(doc: TowerInputDocument, json: bool, galois_flag: bool) -> Result<(), Error> {
    let p = Prime::new(doc.p)?;
    let galois_requested = galois_flag || doc.galois_check.unwrap_or(false);
    match (doc.witt, doc.levels) {
        (Some(_), Some(_)) => Err(Error::invalid(
            "input document must give exactly one of \"witt\" and \"levels\", not both",
        )),
        (None, None) => Err(Error::invalid(
            "input document must give one of \"witt\" and \"levels\"",
        )),
        (Some(components), None) => {
            if components.is_empty() {
                return Err(Error::invalid("\"witt\" must list at least one component"));
            }
            let mut vector = Vec::with_capacity(components.len());
            for c in &components {
                vector.push(parse_expression(c.trim(), p)?);
            }
            let wt = build_tower(p, &vector)?;
            emit_tower_report(wt.tower(), galois_requested.then_some(&wt), json)
        }
        (None, Some(equations)) => {
            if equations.is_empty() {
                return Err(Error::invalid("\"levels\" must list at least one equation"));
            }
            if galois_requested {
                return Err(Error::NotWittGenerated);
            }
            let mut tower = TowerDescriptor::new(p);
            for eq in &equations {
                let d = parse_expression(eq.trim(), p)?;
                tower.add_level(&d)?;
            }
            emit_tower_report(&tower, None, json)
        }
    }
}

fn emit_tower_report(
    tower: &TowerDescriptor,
    galois: Option<&WittTower>,
    json: bool,
) -> Result<(), Error> {
    let analysis = analyze_tower(tower, galois)?;
    let doc = ReportDocument::from_analysis(tower, &analysis)?;
    if json {
        print!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
    }
    Ok(())
}
