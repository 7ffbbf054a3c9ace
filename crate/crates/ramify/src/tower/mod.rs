//! Towers of Artin-Schreier extensions of F_p((x)) with exact valuation
//! bookkeeping.
//!
//! A tower of height h is described by equations `f_i^p - f_i = D_i` where
//! each right-hand side `D_i` lives in the previous level.  The descriptor
//! stores the *normalized* equations: the minimal term of `D_i` has
//! valuation prime to p, so the i-th ramification jump can be read off as
//! `b_i = -v_{i-1}(D_i)`.  Normalization is performed by `add_level`: while
//! the minimal valuation is divisible by p, the defining element is shifted
//! by `(c g)^p - (c g)` for a monomial `g` of exactly the offending
//! valuation over p, which cancels the minimal term and strictly raises the
//! valuation.  Valuations are normalized so that `v_k(x) = -p^k`; elements
//! of the base field k((x)) are Laurent polynomials in x.

mod element;
mod series;

pub use element::{TowerElement, TowerMonomial};
pub use series::binomial_expand;

use crate::arith::{FpElement, Prime};
use crate::error::Error;

/// Iteration cap for the normalization loop in `add_level`.
pub const NORMALIZATION_CAP: usize = 64;

/// One generator replacement `f_i := f̄_i + c * g` performed during
/// normalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    pub coeff: FpElement,
    pub monomial: TowerMonomial,
}

/// One level of the tower: its normalized equation and how it was reached.
#[derive(Clone, Debug)]
pub struct Level {
    defining: TowerElement,
    jump: u64,
    substitutions: Vec<Substitution>,
    raw_generator: TowerElement,
}

impl Level {
    /// Normalized right-hand side of `f_i^p - f_i = D_i`.
    pub fn defining(&self) -> &TowerElement {
        &self.defining
    }

    /// Lower ramification jump `b_i = -v_{i-1}(D_i)`.
    pub fn jump(&self) -> u64 {
        self.jump
    }

    /// Replacements applied while normalizing this level, in order.
    pub fn substitutions(&self) -> &[Substitution] {
        &self.substitutions
    }

    /// The original (pre-substitution) generator written in the normalized
    /// ones: `f_i + sum of c * g` over the substitutions.
    pub fn raw_generator(&self) -> &TowerElement {
        &self.raw_generator
    }
}

/// A fully normalized tower: prime, defining equations, jumps.
#[derive(Clone, Debug)]
pub struct TowerDescriptor {
    p: Prime,
    levels: Vec<Level>,
}

impl TowerDescriptor {
    /// The height-0 tower, i.e. the base field F_p((x)) alone.
    pub fn new(p: Prime) -> TowerDescriptor {
        TowerDescriptor { p, levels: Vec::new() }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Lower ramification jumps `b_1 < b_2 < ...`, one per level.
    pub fn jumps(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.jump).collect()
    }

    fn check_element(&self, e: &TowerElement) -> Result<(), Error> {
        if e.prime() != self.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: e.prime().get(),
            });
        }
        if e.level() > self.height() {
            return Err(Error::LevelOutOfRange { level: e.level(), height: self.height() });
        }
        Ok(())
    }

    /// Rewrites every generator power `f_j^p` to `f_j + D_j` until all
    /// generator exponents are below p.  This is reduction modulo the
    /// defining ideal, so it is a ring homomorphism and idempotent.
    pub fn normal_form(&self, e: &TowerElement) -> Result<TowerElement, Error> {
        self.check_element(e)?;
        let p = self.p.get();
        let mut out = TowerElement::zero(self.p, e.level());
        let mut work: Vec<(TowerMonomial, u32)> =
            e.terms().map(|(m, c)| (m.clone(), c.value())).collect();
        while let Some((m, c)) = work.pop() {
            // highest generator with exponent at or above p, if any
            let j = (1..=m.level()).rev().find(|&j| m.gen_exp(j) >= p);
            let Some(j) = j else {
                out.add_term(m, c);
                continue;
            };
            // m = rest * f_j^p;  f_j^p = f_j + D_j
            let mut exps: Vec<u32> = m.gen_exps().to_vec();
            exps[j - 1] -= p;
            let rest = TowerMonomial::new(m.x_exp(), exps);
            work.push((rest.mul(&TowerMonomial::generator(j))?, c));
            for (dm, dc) in self.levels[j - 1].defining.terms() {
                let prod = ((c as u64 * dc.value() as u64) % p as u64) as u32;
                work.push((rest.mul(dm)?, prod));
            }
        }
        Ok(out)
    }

    /// Product in the tower, reduced to normal form.
    pub fn mul(&self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement, Error> {
        self.check_element(a)?;
        self.check_element(b)?;
        self.normal_form(&a.mul_raw(b)?)
    }

    /// Power in the tower by repeated squaring, reduced to normal form.
    pub fn pow(&self, a: &TowerElement, mut e: u64) -> Result<TowerElement, Error> {
        self.check_element(a)?;
        let mut acc = TowerElement::one(self.p).at_level(a.level())?;
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// The p-th power map, the Frobenius-degree step used everywhere.
    pub fn pow_p(&self, a: &TowerElement) -> Result<TowerElement, Error> {
        self.pow(a, self.p.get() as u64)
    }

    /// Valuation of a single monomial at the given level:
    /// `v_k(x) = -p^k` and `v_k(f_j) = -b_j p^{k-j}`.
    pub fn monomial_valuation(&self, m: &TowerMonomial, level: usize) -> Result<i64, Error> {
        if level > self.height() || m.level() > level {
            return Err(Error::LevelOutOfRange {
                level: m.level().max(level),
                height: self.height(),
            });
        }
        let p = self.p.get() as i128;
        let mut v: i128 = -(m.x_exp() as i128) * p.pow(level as u32);
        for j in 1..=m.level() {
            let e = m.gen_exp(j) as i128;
            let b = self.levels[j - 1].jump as i128;
            v -= e * b * p.pow((level - j) as u32);
        }
        i64::try_from(v).map_err(|_| Error::invalid("valuation overflows 64 bits"))
    }

    /// Minimum of the monomial valuations at the element's own level;
    /// `None` for the zero element.  Distinctness of the monomial
    /// valuations is a structural guarantee for normal forms and is
    /// asserted on every call.
    pub fn valuation(&self, e: &TowerElement) -> Result<Option<i64>, Error> {
        self.valuation_at(e, e.level())
    }

    /// Same as `valuation`, computed at an explicitly chosen level.
    pub fn valuation_at(&self, e: &TowerElement, level: usize) -> Result<Option<i64>, Error> {
        self.check_element(e)?;
        let mut vals: Vec<i64> = Vec::with_capacity(e.num_terms());
        for (m, _) in e.terms() {
            vals.push(self.monomial_valuation(m, level)?);
        }
        vals.sort_unstable();
        for w in vals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::internal(format!(
                    "distinct-valuation guarantee violated: two monomials share valuation {}",
                    w[0]
                )));
            }
        }
        Ok(vals.first().copied())
    }

    /// The unique term of minimal valuation; errors on the zero element.
    pub fn minimal_term(&self, e: &TowerElement) -> Result<(FpElement, TowerMonomial), Error> {
        self.minimal_term_at(e, e.level())
    }

    pub fn minimal_term_at(
        &self,
        e: &TowerElement,
        level: usize,
    ) -> Result<(FpElement, TowerMonomial), Error> {
        let v = self
            .valuation_at(e, level)?
            .ok_or_else(|| Error::invalid("minimal term of the zero element"))?;
        for (m, c) in e.terms() {
            if self.monomial_valuation(m, level)? == v {
                return Ok((c, m.clone()));
            }
        }
        unreachable!("valuation came from one of the terms")
    }

    /// Solves `a p^k + sum e_j b_j p^(k-j) = target` for a monomial
    /// `x^a f1^e1 ... fk^ek` with `a >= 0` and `0 <= e_j < p` at level
    /// `k = level`.  The solution is unique when it exists: reading the
    /// equation mod p forces `e_k`, then dividing by p recurses.
    pub fn diophantine_monomial(
        &self,
        target: i64,
        level: usize,
    ) -> Result<Option<TowerMonomial>, Error> {
        if level > self.height() {
            return Err(Error::LevelOutOfRange { level, height: self.height() });
        }
        if target < 0 {
            return Ok(None);
        }
        let p = self.p.get() as i64;
        let mut rem = target;
        let mut exps = vec![0u32; level];
        for j in (1..=level).rev() {
            let b = self.levels[j - 1].jump;
            let b_mod = FpElement::new(b as i64, self.p);
            let e = (FpElement::new(rem, self.p)
                * b_mod.inv().expect("jumps are prime to p"))
            .value();
            exps[j - 1] = e;
            rem -= e as i64 * b as i64;
            if rem < 0 {
                return Ok(None);
            }
            debug_assert_eq!(rem % p, 0, "digit peeling always clears the residue");
            rem /= p;
        }
        Ok(Some(TowerMonomial::new(rem, exps)))
    }

    /// Extends the tower by one level defined by `f^p - f = d_raw`,
    /// normalizing the equation so its minimal valuation is prime to p.
    ///
    /// While the minimal valuation `v` is divisible by p, the unique
    /// monomial `g` with `v_k(g) = v / p` is found, the coefficient `c` is
    /// chosen so that the minimal term of `(c g)^p` cancels the minimal
    /// term of the defining element, and the defining element is replaced
    /// by `d - ((c g)^p - c g)`.  Each pass strictly raises the minimal
    /// valuation.
    pub fn add_level(&mut self, d_raw: &TowerElement) -> Result<(), Error> {
        let k = self.height();
        let new_level = k + 1;
        self.check_element(d_raw)?;
        let mut d = self.normal_form(&d_raw.at_level(k)?)?;
        let mut substitutions = Vec::new();
        let mut previous_v: Option<i64> = None;
        let p = self.p.get();
        let jump = loop {
            if substitutions.len() > NORMALIZATION_CAP {
                return Err(Error::Normalization {
                    level: new_level,
                    reason: format!("iteration cap ({NORMALIZATION_CAP}) exceeded"),
                });
            }
            let v = match self.valuation(&d)? {
                None => {
                    return Err(Error::NotTotallyRamified { level: new_level, valuation: None })
                }
                Some(v) if v >= 0 => {
                    return Err(Error::NotTotallyRamified {
                        level: new_level,
                        valuation: Some(v),
                    })
                }
                Some(v) => v,
            };
            if let Some(pv) = previous_v {
                if v <= pv {
                    return Err(Error::internal(
                        "normalization pass did not raise the minimal valuation",
                    ));
                }
            }
            previous_v = Some(v);
            if (-v) % p as i64 != 0 {
                break (-v) as u64;
            }
            let target = (-v) / p as i64;
            let g = self.diophantine_monomial(target, k)?.ok_or_else(|| {
                Error::Normalization {
                    level: new_level,
                    reason: format!(
                        "no monomial of valuation {} exists at level {k}",
                        -target
                    ),
                }
            })?;
            let g_el = TowerElement::monomial(self.p, g.clone(), FpElement::one(self.p))
                .at_level(k)?;
            let g_pow = self.pow_p(&g_el)?;
            let (gamma, g_min) = self.minimal_term(&g_pow)?;
            let (d_coeff, d_min) = self.minimal_term(&d)?;
            if g_min != d_min {
                return Err(Error::internal(
                    "minimal terms of g^p and the defining element disagree",
                ));
            }
            let c = d_coeff * gamma.inv()?;
            let shift = g_pow.sub(&g_el)?.scale(c);
            d = d.sub(&shift)?;
            substitutions.push(Substitution { coeff: c, monomial: g });
        };
        if let Some(last) = self.levels.last() {
            if jump <= last.jump {
                return Err(Error::invalid(format!(
                    "jump {jump} at level {new_level} does not exceed the previous jump {}",
                    last.jump
                )));
            }
        }
        // original generator written in the normalized ones
        let mut raw_generator = TowerElement::generator(self.p, new_level);
        for s in &substitutions {
            let term = TowerElement::monomial(self.p, s.monomial.clone(), s.coeff);
            raw_generator = raw_generator.add(&term)?;
        }
        self.levels.push(Level {
            defining: d,
            jump,
            substitutions,
            raw_generator,
        });
        Ok(())
    }

    /// Rows `0..=height`; row k lists `v_k(x), v_k(f_1), ..., v_k(f_k)`.
    pub fn valuation_table(&self) -> Result<Vec<Vec<i64>>, Error> {
        let mut table = Vec::with_capacity(self.height() + 1);
        for k in 0..=self.height() {
            let mut row = Vec::with_capacity(k + 1);
            row.push(self.monomial_valuation(&TowerMonomial::x_power(1), k)?);
            for j in 1..=k {
                row.push(self.monomial_valuation(&TowerMonomial::generator(j), k)?);
            }
            table.push(row);
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    /// f1^p - f1 = x over F_5.
    fn one_level_p5() -> TowerDescriptor {
        let mut t = TowerDescriptor::new(p5());
        t.add_level(&TowerElement::x_power(p5(), 1)).unwrap();
        t
    }

    /// The height-3 tower over F_2 with jumps (1, 3, 11).
    fn paper_tower_p2() -> TowerDescriptor {
        let p = p2();
        let mut t = TowerDescriptor::new(p);
        let x = TowerElement::x_power(p, 1);
        t.add_level(&x).unwrap();
        let f1 = TowerElement::generator(p, 1);
        let d2 = t.mul(&x, &f1).unwrap();
        t.add_level(&d2).unwrap();
        // x^3 f1 + x f1^3 + x f1 f2
        let f2 = TowerElement::generator(p, 2);
        let d3 = t
            .mul(&TowerElement::x_power(p, 3), &f1)
            .unwrap()
            .add(&t.mul(&x, &t.pow(&f1, 3).unwrap()).unwrap())
            .unwrap()
            .add(&t.mul(&x, &t.mul(&f1, &f2).unwrap()).unwrap())
            .unwrap();
        t.add_level(&d3).unwrap();
        t
    }

    #[test]
    fn normal_form_rewrites_generator_powers() {
        let t = one_level_p5();
        let f1 = TowerElement::generator(p5(), 1);
        let nf = t.normal_form(&t.pow(&f1, 1).unwrap()).unwrap();
        assert_eq!(nf, f1);
        // f1^5 = f1 + x
        let fifth = f1.mul_raw(&f1.mul_raw(&f1).unwrap().mul_raw(&f1.mul_raw(&f1).unwrap()).unwrap()).unwrap();
        let nf = t.normal_form(&fifth).unwrap();
        let expected = f1.add(&TowerElement::x_power(p5(), 1)).unwrap();
        assert_eq!(nf, expected);
        // idempotent
        assert_eq!(t.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn pow_p_is_frobenius_plus_shift_on_generators() {
        let t = one_level_p5();
        let f1 = TowerElement::generator(p5(), 1);
        let fp = t.pow_p(&f1).unwrap();
        assert_eq!(fp, f1.add(&TowerElement::x_power(p5(), 1)).unwrap());
    }

    #[test]
    fn valuations_on_the_two_level_tower() {
        let p = p5();
        let mut t = TowerDescriptor::new(p);
        t.add_level(&TowerElement::x_power(p, 1)).unwrap();
        assert_eq!(t.jumps(), vec![1]);
        // v_1(x) = -5, v_1(f1) = -1
        assert_eq!(
            t.monomial_valuation(&TowerMonomial::x_power(1), 1).unwrap(),
            -5
        );
        assert_eq!(
            t.monomial_valuation(&TowerMonomial::generator(1), 1).unwrap(),
            -1
        );
        // v_1(x^4 f1) = -21
        let m = TowerMonomial::new(4, vec![1]);
        assert_eq!(t.monomial_valuation(&m, 1).unwrap(), -21);
    }

    #[test]
    fn duplicate_valuations_are_an_internal_error() {
        let t = one_level_p5();
        // x^a and f1^e share valuation only outside normal form; force a
        // duplicate via f1^5 (valuation -5 at level 1, same as x)
        let f1 = TowerElement::generator(p5(), 1);
        let raw = f1
            .mul_raw(&f1)
            .unwrap()
            .mul_raw(&f1.mul_raw(&f1).unwrap())
            .unwrap()
            .mul_raw(&f1)
            .unwrap()
            .add(&TowerElement::x_power(p5(), 1))
            .unwrap();
        assert!(matches!(t.valuation(&raw), Err(Error::Internal(_))));
    }

    #[test]
    fn diophantine_digit_peeling() {
        let p = p5();
        let mut t = TowerDescriptor::new(p);
        t.add_level(&TowerElement::x_power(p, 1)).unwrap();
        // fake second level with jump 21 to match the worked example
        let d2 = crate::io::parse::parse_expression("-x^4*f1 - 2*x^3*f1^2 - 2*x^2*f1^3 - x*f1^4", p)
            .unwrap();
        t.add_level(&d2).unwrap();
        assert_eq!(t.jumps(), vec![1, 21]);
        let g = t.diophantine_monomial(121, 2).unwrap().unwrap();
        assert_eq!(g, TowerMonomial::new(4, vec![0, 1]));
        assert_eq!(t.diophantine_monomial(1, 0).unwrap().unwrap(), TowerMonomial::x_power(1));
        // with b_1 = 1 every nonnegative target is reachable: 2 = 0*5 + 2*1
        assert_eq!(
            t.diophantine_monomial(2, 1).unwrap().unwrap(),
            TowerMonomial::new(0, vec![2])
        );
        assert_eq!(t.diophantine_monomial(-7, 1).unwrap(), None);
        // with b_1 = 3 the target 2 forces e = 2*inv(3) = 4 mod 5 and the
        // remainder 2 - 12 goes negative: no solution
        let mut s = TowerDescriptor::new(p);
        s.add_level(&TowerElement::x_power(p, 3)).unwrap();
        assert_eq!(s.diophantine_monomial(2, 1).unwrap(), None);
    }

    #[test]
    fn the_height_three_tower_over_f2() {
        let t = paper_tower_p2();
        assert_eq!(t.jumps(), vec![1, 3, 11]);
        // normalized top equation, as usually displayed:
        // x^2 f2 + x f2 + x f1^3 + x f1 f2; the stored defining element is
        // its normal form (x f1^3 rewrites through f1^2 = f1 + x)
        let displayed = crate::io::parse::parse_expression(
            "x^2*f2 + x*f2 + x*f1^3 + x*f1*f2",
            p2(),
        )
        .unwrap();
        assert_eq!(t.levels()[2].defining(), &t.normal_form(&displayed).unwrap());
        assert_eq!(
            t.levels()[2].defining(),
            &crate::io::parse::parse_expression(
                "x^2*f2 + x^2*f1 + x*f1*f2 + x^2 + x*f2 + x*f1",
                p2(),
            )
            .unwrap()
        );
        // one substitution: f3 := f̄3 + x f2
        let subs = t.levels()[2].substitutions();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].monomial, TowerMonomial::new(1, vec![0, 1]));
        assert_eq!(subs[0].coeff.value(), 1);
        assert_eq!(
            t.valuation_table().unwrap(),
            vec![
                vec![-1],
                vec![-2, -1],
                vec![-4, -2, -3],
                vec![-8, -4, -6, -11],
            ]
        );
    }

    #[test]
    fn rejects_unramified_levels() {
        let p = p2();
        let mut t = TowerDescriptor::new(p);
        let err = t.add_level(&TowerElement::x_power(p, -1)).unwrap_err();
        assert!(matches!(err, Error::NotTotallyRamified { level: 1, valuation: Some(1) }));
        let err = t.add_level(&TowerElement::zero(p, 0)).unwrap_err();
        assert!(matches!(err, Error::NotTotallyRamified { level: 1, valuation: None }));
    }

    #[test]
    fn rejects_non_increasing_jumps() {
        let p = p2();
        let mut t = TowerDescriptor::new(p);
        t.add_level(&TowerElement::x_power(p, 3)).unwrap();
        assert_eq!(t.jumps(), vec![3]);
        let err = t.add_level(&TowerElement::generator(p, 1)).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn multiplicativity_of_valuations() {
        let t = paper_tower_p2();
        let p = p2();
        let a = crate::io::parse::parse_expression("x^-1*f1*f3 + f2", p).unwrap();
        let b = crate::io::parse::parse_expression("x^2*f2*f3 + f1 + 1", p).unwrap();
        let va = t.valuation(&a).unwrap().unwrap();
        let vb = t.valuation(&b).unwrap().unwrap();
        let prod = t.mul(&a, &b).unwrap();
        assert_eq!(t.valuation(&prod).unwrap().unwrap(), va + vb);
    }
}
