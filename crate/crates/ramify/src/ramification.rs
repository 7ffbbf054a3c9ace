//! Lower and upper ramification numbering, the Herbrand function, and the
//! Hasse-Arf divisibility analysis.
//!
//! Jump data is a prime p, multiplicities `n_1, ..., n_r`, and strictly
//! increasing lower jumps `b_1 < ... < b_r`; the filtration subgroup drops
//! by index `p^(n_i)` at `b_i`.  Towers produced by this crate always have
//! `n_i = 1` (each level has degree p), but the Herbrand transition makes
//! sense for any such data.  Jumps divisible by p are rejected as out of
//! scope: normalized towers never produce them.
//!
//! The Herbrand function is the piecewise-linear homeomorphism of
//! `[-1, oo)` with slope `1/p^(n_1 + ... + n_i)` on `(b_i, b_(i+1)]`; the
//! upper jumps are its values at the lower jumps, computed exactly as
//! rationals.  The Hasse-Arf property -- all upper jumps integral -- is
//! equivalent to the per-level divisibilities
//! `p^(n_1 + ... + n_(i-1)) | b_i - b_(i-1)`, and both readings are
//! computed and cross-checked.
//!
//! The structural side works straight from minimal terms: writing the
//! normalized level-i equation's minimal term as
//! `kappa_i * f_1^(w_1) * ... * f_(i-1)^(w_(i-1))`, the difference of
//! consecutive jumps satisfies an exact identity in the `w_j` and
//! `v(kappa_i)`, and the Hasse-Arf property holds whenever every minimal
//! term is `kappa_i * f_(i-1)` on the nose.

use crate::arith::{BigInt, BigRational, FpElement, Prime};
use crate::error::Error;
use crate::tower::{TowerDescriptor, TowerElement};
use crate::witt::{apply_generator_images, WittTower};

/// Ramification jumps of a totally ramified p-group filtration, in the
/// lower numbering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JumpData {
    p: Prime,
    multiplicities: Vec<u32>,
    lower_jumps: Vec<u64>,
}

/// One divisibility check `p^(n_1 + ... + n_(i-1)) | b_i - b_(i-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilityWitness {
    /// The level `i >= 2` whose jump difference is examined.
    pub level: usize,
    pub required_divisor: u64,
    pub difference: u64,
    pub divides: bool,
}

/// Outcome of the Hasse-Arf decision with its per-level evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HasseArf {
    pub holds: bool,
    pub witnesses: Vec<DivisibilityWitness>,
}

impl JumpData {
    pub fn new(
        p: Prime,
        multiplicities: Vec<u32>,
        lower_jumps: Vec<u64>,
    ) -> Result<JumpData, Error> {
        if multiplicities.is_empty() || multiplicities.len() != lower_jumps.len() {
            return Err(Error::invalid(
                "jump data needs one multiplicity per jump and at least one jump",
            ));
        }
        if multiplicities.iter().any(|&n| n == 0) {
            return Err(Error::invalid("multiplicities must be positive"));
        }
        let total = multiplicities
            .iter()
            .try_fold(0u32, |acc, &n| acc.checked_add(n))
            .ok_or_else(|| Error::invalid("group order exponent overflows"))?;
        if (p.get() as u64).checked_pow(total).is_none() {
            return Err(Error::invalid("group order does not fit in 64 bits"));
        }
        for (i, &b) in lower_jumps.iter().enumerate() {
            if b == 0 {
                return Err(Error::invalid("jumps must be positive"));
            }
            if b % p.get() as u64 == 0 {
                return Err(Error::invalid(format!(
                    "jump {b} is divisible by p = {}: out of scope for normalized towers",
                    p.get()
                )));
            }
            if i > 0 && b <= lower_jumps[i - 1] {
                return Err(Error::invalid("jumps must be strictly increasing"));
            }
        }
        Ok(JumpData { p, multiplicities, lower_jumps })
    }

    /// Jump data of a normalized tower: one jump per level, each of
    /// multiplicity 1.
    pub fn from_tower(t: &TowerDescriptor) -> Result<JumpData, Error> {
        if t.height() == 0 {
            return Err(Error::invalid("the base field alone has no ramification data"));
        }
        JumpData::new(t.prime(), vec![1; t.height()], t.jumps())
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn lower_jumps(&self) -> &[u64] {
        &self.lower_jumps
    }

    /// Partial sum `n_1 + ... + n_j` of the multiplicities.
    fn weight(&self, j: usize) -> u32 {
        self.multiplicities[..j].iter().sum()
    }

    /// Values of the Herbrand function at the lower jumps, i.e. the upper
    /// jumps.  Starting from `phi(b_0) = b_0 = -1`, each segment adds
    /// `(b_(i+1) - b_i) / p^(n_1 + ... + n_i)`.
    pub fn phi_at_jumps(&self) -> Vec<BigRational> {
        let mut out = Vec::with_capacity(self.lower_jumps.len());
        let mut acc = BigRational::from_integer(BigInt::from(-1));
        let mut prev: i128 = -1;
        for (i, &b) in self.lower_jumps.iter().enumerate() {
            let diff = BigInt::from(b as i128 - prev);
            let denom = BigInt::from(self.p.get()).pow(self.weight(i));
            acc += BigRational::new(diff, denom);
            prev = b as i128;
            out.push(acc.clone());
        }
        out
    }

    /// The jumps in the upper numbering.
    pub fn upper_jumps(&self) -> Vec<BigRational> {
        self.phi_at_jumps()
    }

    /// The Herbrand function at an arbitrary point of `[-1, oo)`.
    pub fn herbrand_phi(&self, u: &BigRational) -> Result<BigRational, Error> {
        if *u < BigRational::from_integer(BigInt::from(-1)) {
            return Err(Error::invalid("the Herbrand function is defined on [-1, oo)"));
        }
        let as_rational = |b: u64| BigRational::from_integer(BigInt::from(b));
        if *u <= as_rational(self.lower_jumps[0]) {
            return Ok(u.clone());
        }
        // last jump at or below u; the formulas agree at the joints
        let mut seg = 0;
        for (i, &b) in self.lower_jumps.iter().enumerate() {
            if as_rational(b) <= *u {
                seg = i;
            }
        }
        let at_jumps = self.phi_at_jumps();
        let slope_denom = BigInt::from(self.p.get()).pow(self.weight(seg + 1));
        let rise = u - as_rational(self.lower_jumps[seg]);
        Ok(at_jumps[seg].clone() + rise / BigRational::from_integer(slope_denom))
    }

    /// Decides the Hasse-Arf property, reporting the divisibility of every
    /// consecutive jump difference.  The divisibilities are equivalent to
    /// integrality of all upper jumps; both are computed and must agree.
    pub fn hasse_arf(&self) -> Result<HasseArf, Error> {
        let mut witnesses = Vec::with_capacity(self.lower_jumps.len().saturating_sub(1));
        for i in 1..self.lower_jumps.len() {
            // weight(i) <= total, which new() checked to fit in u64
            let required_divisor = (self.p.get() as u64).pow(self.weight(i));
            let difference = self.lower_jumps[i] - self.lower_jumps[i - 1];
            witnesses.push(DivisibilityWitness {
                level: i + 1,
                required_divisor,
                difference,
                divides: difference % required_divisor == 0,
            });
        }
        let by_divisibility = witnesses.iter().all(|w| w.divides);
        let by_integrality = self.phi_at_jumps().iter().all(|q| q.is_integer());
        if by_divisibility != by_integrality {
            return Err(Error::internal(
                "divisibility witnesses and upper-jump integrality disagree",
            ));
        }
        Ok(HasseArf { holds: by_integrality, witnesses })
    }
}

/// The minimal term of the normalized equation at one level `i >= 2`,
/// written as `kappa * f_1^(w_1) * ... * f_(i-1)^(w_(i-1))` with `kappa` a
/// base-field monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalTermLevel {
    pub level: usize,
    pub kappa_coeff: FpElement,
    /// Base-field valuation of kappa, i.e. minus its x-exponent.
    pub kappa_x_valuation: i64,
    /// `w_1, ..., w_(i-1)`, each below p.
    pub gen_exps: Vec<u32>,
}

/// Minimal-term decompositions for levels `2..=height` of a tower.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalTermData {
    levels: Vec<MinimalTermLevel>,
}

impl MinimalTermData {
    pub fn from_tower(t: &TowerDescriptor) -> Result<MinimalTermData, Error> {
        let p = t.prime().get();
        let mut levels = Vec::with_capacity(t.height().saturating_sub(1));
        for i in 2..=t.height() {
            let d = t.levels()[i - 1].defining();
            let (coeff, m) = t.minimal_term_at(d, i - 1)?;
            let gen_exps: Vec<u32> = (1..i).map(|j| m.gen_exp(j)).collect();
            // a minimal term with no generator part would have valuation
            // divisible by p, contradicting normalization
            if gen_exps.iter().all(|&w| w == 0) {
                return Err(Error::internal(
                    "minimal term of a normalized level is a base-field monomial",
                ));
            }
            if gen_exps.iter().any(|&w| w >= p) {
                return Err(Error::internal(
                    "minimal term of a normalized level escapes normal form",
                ));
            }
            levels.push(MinimalTermLevel {
                level: i,
                kappa_coeff: coeff,
                kappa_x_valuation: -m.x_exp(),
                gen_exps,
            });
        }
        Ok(MinimalTermData { levels })
    }

    pub fn levels(&self) -> &[MinimalTermLevel] {
        &self.levels
    }
}

/// The sufficient minimal-term criterion for Hasse-Arf, one flag per
/// recorded level: the minimal term is exactly `kappa * f_(i-1)`, i.e.
/// `w_(i-1) = 1` and all lower `w_j` vanish.
pub fn structural_check(data: &MinimalTermData) -> Vec<bool> {
    data.levels
        .iter()
        .map(|l| {
            let (last, lower) = l.gen_exps.split_last().expect("levels start at 2");
            *last == 1 && lower.iter().all(|&w| w == 0)
        })
        .collect()
}

/// Checks the exact identity tying a jump difference to the minimal term
/// of its level:
///
/// ```text
/// b_i - b_(i-1) = -p^(n_1 + ... + n_(i-1)) v(kappa_i)
///                 + sum_j w'_j p^(n_(j+1) + ... + n_(i-1)) b_j
/// ```
///
/// where `w'_j = w_j` except `w'_(i-1) = w_(i-1) - 1`.
pub fn jumps_difference_identity(
    jumps: &JumpData,
    data: &MinimalTermData,
    level: usize,
) -> Result<bool, Error> {
    let entry = data
        .levels
        .iter()
        .find(|l| l.level == level)
        .ok_or_else(|| Error::invalid(format!("no minimal-term data for level {level}")))?;
    if jumps.lower_jumps.len() < level {
        return Err(Error::invalid(format!("jump data stops below level {level}")));
    }
    let p = jumps.p.get() as i128;
    let overflow = || Error::invalid("jump identity arithmetic overflows");
    let lhs = jumps.lower_jumps[level - 1] as i128 - jumps.lower_jumps[level - 2] as i128;
    let top_weight = jumps.weight(level - 1);
    let mut rhs = p
        .checked_pow(top_weight)
        .and_then(|q| q.checked_mul(-(entry.kappa_x_valuation as i128)))
        .ok_or_else(overflow)?;
    for j in 1..level {
        let w = entry.gen_exps[j - 1] as i128;
        let adjusted = if j == level - 1 { w - 1 } else { w };
        let term = p
            .checked_pow(top_weight - jumps.weight(j))
            .and_then(|q| q.checked_mul(adjusted))
            .and_then(|q| q.checked_mul(jumps.lower_jumps[j - 1] as i128))
            .ok_or_else(overflow)?;
        rhs = rhs.checked_add(term).ok_or_else(overflow)?;
    }
    Ok(lhs == rhs)
}

/// Contact order of an automorphism given by generator images: the
/// valuation gain of `sigma(f) - f` over `f`, measured in the top field.
/// The test element must have valuation prime to p (so it genuinely lives
/// at the top level); returns `None` when the automorphism fixes it.
pub fn order_function(
    tower: &TowerDescriptor,
    images: &[TowerElement],
    f: &TowerElement,
) -> Result<Option<i64>, Error> {
    let h = tower.height();
    let v = tower
        .valuation_at(f, h)?
        .ok_or_else(|| Error::invalid("order function of the zero element"))?;
    if v % tower.prime().get() as i64 == 0 {
        return Err(Error::invalid(
            "order function needs a test element of valuation prime to p",
        ));
    }
    let moved = apply_generator_images(tower, images, f)?;
    let diff = moved.sub(f)?;
    match tower.valuation_at(&diff, h)? {
        None => Ok(None),
        Some(vd) => Ok(Some(vd - v)),
    }
}

/// Recomputes the lower jumps from the Galois action alone: the contact
/// order of `sigma^(p^j)` on the top generator is the jump `b_(j+1)`.
/// Errors if the result disagrees with the jumps read off during
/// normalization.
pub fn jumps_from_galois(wt: &WittTower) -> Result<Vec<u64>, Error> {
    let tower = wt.tower();
    let h = tower.height();
    let f_test = TowerElement::generator(tower.prime(), h);
    let mut jumps = Vec::with_capacity(h);
    for j in 0..h {
        let k = (tower.prime().get() as u64).pow(j as u32);
        let images = wt.power_images(k)?;
        let order = order_function(tower, &images, &f_test)?.ok_or_else(|| {
            Error::internal("a nontrivial tower automorphism fixes the test element")
        })?;
        if order <= 0 {
            return Err(Error::internal("contact order of an automorphism is not positive"));
        }
        jumps.push(order as u64);
    }
    if jumps != tower.jumps() {
        return Err(Error::internal(format!(
            "Galois cross-validation mismatch: the action gives jumps {:?} but normalization gave {:?}",
            jumps,
            tower.jumps()
        )));
    }
    Ok(jumps)
}

/// Everything this module can say about one tower.
#[derive(Clone, PartialEq, Debug)]
pub struct RamificationReport {
    pub lower_jumps: Vec<u64>,
    pub upper_jumps: Vec<BigRational>,
    pub hasse_arf: HasseArf,
    /// Minimal-term criterion per level `2..=height`.
    pub structural: Vec<bool>,
    /// Exact jump-difference identity per level `2..=height`.
    pub difference_identity: Vec<bool>,
    pub minimal_terms: MinimalTermData,
    /// Jumps recovered from the Galois action, when one is available.
    pub galois_jumps: Option<Vec<u64>>,
}

/// Runs the full analysis on a normalized tower, optionally
/// cross-validating against the Galois action of a generating Witt vector.
pub fn analyze_tower(
    t: &TowerDescriptor,
    galois: Option<&WittTower>,
) -> Result<RamificationReport, Error> {
    let jumps = JumpData::from_tower(t)?;
    let minimal_terms = MinimalTermData::from_tower(t)?;
    let structural = structural_check(&minimal_terms);
    let mut difference_identity = Vec::with_capacity(minimal_terms.levels().len());
    for entry in minimal_terms.levels() {
        difference_identity.push(jumps_difference_identity(&jumps, &minimal_terms, entry.level)?);
    }
    let galois_jumps = match galois {
        Some(wt) => Some(jumps_from_galois(wt)?),
        None => None,
    };
    Ok(RamificationReport {
        lower_jumps: jumps.lower_jumps().to_vec(),
        upper_jumps: jumps.upper_jumps(),
        hasse_arf: jumps.hasse_arf()?,
        structural,
        difference_identity,
        minimal_terms,
        galois_jumps,
    })
}
