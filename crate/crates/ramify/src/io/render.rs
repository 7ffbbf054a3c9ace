//! Human-readable rendering of tower elements, defining equations, and
//! Witt addition polynomials.
//!
//! Tower elements are printed by increasing valuation, minimal term first,
//! the order in which the defining equations are usually displayed.
//! Coefficients use the canonical representative in `[0, p)` except that a
//! sign is pulled out when `p - c < c`, so p = 5 renders 4 as a subtracted
//! 1 and 3 as a subtracted 2.

use num::bigint::Sign;
use num::One;

use crate::arith::intpoly::IntPolynomial;
use crate::error::Error;
use crate::tower::{Substitution, TowerDescriptor, TowerElement, TowerMonomial};

/// The factor string of one monomial with a nonnegative coefficient
/// magnitude, e.g. `2*x^3*f1^2`; unit magnitudes are dropped unless the
/// monomial is constant.
fn format_term(magnitude: u64, m: &TowerMonomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    if magnitude != 1 || m.is_constant() {
        parts.push(magnitude.to_string());
    }
    match m.x_exp() {
        0 => {}
        1 => parts.push("x".into()),
        e => parts.push(format!("x^{e}")),
    }
    for j in 1..=m.level() {
        match m.gen_exp(j) {
            0 => {}
            1 => parts.push(format!("f{j}")),
            e => parts.push(format!("f{j}^{e}")),
        }
    }
    parts.join("*")
}

fn join_signed(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.iter().enumerate() {
        if i == 0 {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(if *negative { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Renders an element with its terms in increasing valuation order.
pub fn render_element(tower: &TowerDescriptor, e: &TowerElement) -> Result<String, Error> {
    if e.is_zero() {
        return Ok("0".into());
    }
    let level = e.level();
    let mut terms: Vec<(i64, bool, String)> = Vec::with_capacity(e.num_terms());
    for (m, c) in e.terms() {
        let v = tower.monomial_valuation(m, level)?;
        let signed = c.signed();
        terms.push((v, signed < 0, format_term(signed.unsigned_abs(), m)));
    }
    terms.sort_by_key(|t| t.0);
    let signed: Vec<(bool, String)> = terms.into_iter().map(|(_, n, s)| (n, s)).collect();
    Ok(join_signed(&signed))
}

/// Renders the defining equation `f_i^p - f_i = D_i` of one level.
pub fn render_equation(tower: &TowerDescriptor, level: usize) -> Result<String, Error> {
    if level == 0 || level > tower.height() {
        return Err(Error::LevelOutOfRange { level, height: tower.height() });
    }
    let rhs = render_element(tower, tower.levels()[level - 1].defining())?;
    let p = tower.prime().get();
    Ok(format!("f{level}^{p} - f{level} = {rhs}"))
}

/// Renders the generator replacement performed at one level, e.g.
/// `f3 := f̄3 + x^4*f2`.
pub fn render_substitution(level: usize, substitutions: &[Substitution]) -> String {
    let mut out = format!("f{level} := f\u{0304}{level}");
    for s in substitutions {
        let signed = s.coeff.signed();
        out.push_str(if signed < 0 { " - " } else { " + " });
        out.push_str(&format_term(signed.unsigned_abs(), &s.monomial));
    }
    out
}

/// Renders a Witt addition polynomial in the variables `X0..`, `Y0..`.
/// Terms are ordered by total degree, then lexicographically, so the
/// leading `X_i + Y_i` always comes first.
pub fn render_witt_polynomial(poly: &IntPolynomial, length: usize) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(u64, Vec<u32>, num::BigInt)> = poly
        .terms()
        .map(|(exps, c)| {
            let degree = exps.iter().map(|&e| e as u64).sum();
            (degree, exps.to_vec(), c.clone())
        })
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let rendered: Vec<(bool, String)> = terms
        .into_iter()
        .map(|(_, exps, c)| {
            let negative = c.sign() == Sign::Minus;
            let magnitude = c.magnitude();
            let mut parts: Vec<String> = Vec::new();
            let constant = exps.iter().all(|&e| e == 0);
            if !magnitude.is_one() || constant {
                parts.push(magnitude.to_string());
            }
            for (j, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if j < length {
                    format!("X{j}")
                } else {
                    format!("Y{}", j - length)
                };
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            (negative, parts.join("*"))
        })
        .collect();
    join_signed(&rendered)
}
