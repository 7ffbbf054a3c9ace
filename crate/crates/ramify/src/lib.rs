//! Exact ramification theory for Artin-Schreier-Witt towers over the
//! Laurent series field F_p((x)).
//!
//! A tower is a chain of cyclic degree-p extensions, each cut out by an
//! equation f_i^p - f_i = d_i with d_i a polynomial in x and the lower
//! generators. This crate builds such towers from Witt vectors, normalizes
//! the defining equations until every level is visibly totally ramified,
//! and reads off the full ramification picture — lower jumps, the Herbrand
//! transition function, upper jumps — without ever leaving exact
//! arithmetic. On top of that it decides whether the Hasse-Arf property
//! (integrality of the upper jumps) holds, both by direct computation and
//! by a structural criterion on the shape of the minimal terms, and can
//! cross-check the jumps against the Galois action itself.
//!
//! The main entry points:
//!
//! * [`witt::build_tower`] — tower generated by a Witt vector, with the
//!   Galois action of the distinguished generator available.
//! * [`tower::TowerDescriptor::add_level`] — grow a tower one handwritten
//!   equation at a time.
//! * [`ramification::analyze_tower`] — jumps, Herbrand data, Hasse-Arf
//!   verdict, structural criterion, and the jump difference identity.
//! * [`io`] — a small expression language for tower elements, renderers,
//!   report documents, and the command-line front end.
//!
//! The `examples/` directory walks through each corner of the API:
//!
//! * `lucas_binomials` — binomial coefficients mod p at negative
//!   arguments, digit by digit.
//! * `witt_polynomials` — the addition polynomials and the group law on
//!   constant vectors.
//! * `tower_over_f2`, `tower_over_f5` — the two worked towers, from Witt
//!   vector to valuation table.
//! * `galois_action` — generator images, relation checks, and jumps
//!   recovered from contact orders.
//! * `herbrand_phi` — the transition function evaluated exactly.
//! * `series_expansion` — truncated binomial series for elements of
//!   negative valuation.
//! * `analyze_input` — hand-described levels analyzed into the same text
//!   and JSON reports the CLI emits.

pub mod arith;
pub mod error;
pub mod io;
pub mod lucas;
pub mod ramification;
pub mod tower;
pub mod witt;

pub use arith::{FpElement, Prime};
pub use error::Error;
pub use ramification::{analyze_tower, JumpData, RamificationReport};
pub use tower::{TowerDescriptor, TowerElement, TowerMonomial};
pub use witt::{build_tower, WittSystem, WittTower};
