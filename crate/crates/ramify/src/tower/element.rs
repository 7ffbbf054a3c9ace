//! Elements of an Artin-Schreier tower as sparse Laurent-monomial sums.
//!
//! An element of the level-k field is written in the generators
//! `x, f1, ..., fk` as a sum of monomials `c * x^a * f1^e1 * ... * fk^ek`
//! with `a` any integer and coefficients in F_p.  Normal form (generator
//! exponents below p) is the business of the tower descriptor, which knows
//! the defining equations; this module only provides the additive ring
//! structure and canonical term storage.

use std::collections::BTreeMap;

use crate::arith::{FpElement, Prime};
use crate::error::Error;

/// `x^a * f1^e1 * ... * fk^ek`, with trailing zero generator exponents
/// trimmed so that equal monomials from different levels compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TowerMonomial {
    x_exp: i64,
    gen_exps: Vec<u32>,
}

impl TowerMonomial {
    pub fn new(x_exp: i64, mut gen_exps: Vec<u32>) -> TowerMonomial {
        while gen_exps.last() == Some(&0) {
            gen_exps.pop();
        }
        TowerMonomial { x_exp, gen_exps }
    }

    pub fn one() -> TowerMonomial {
        TowerMonomial { x_exp: 0, gen_exps: Vec::new() }
    }

    pub fn x_power(e: i64) -> TowerMonomial {
        TowerMonomial::new(e, Vec::new())
    }

    /// The i-th generator (1-based), so `generator(2)` is `f2`.
    pub fn generator(i: usize) -> TowerMonomial {
        assert!(i >= 1, "generators are 1-based");
        let mut gen_exps = vec![0; i];
        gen_exps[i - 1] = 1;
        TowerMonomial { x_exp: 0, gen_exps }
    }

    pub fn x_exp(&self) -> i64 {
        self.x_exp
    }

    /// Exponent of `f_i` (1-based); zero beyond the stored length.
    pub fn gen_exp(&self, i: usize) -> u32 {
        assert!(i >= 1, "generators are 1-based");
        self.gen_exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn gen_exps(&self) -> &[u32] {
        &self.gen_exps
    }

    /// Smallest level whose field contains this monomial.
    pub fn level(&self) -> usize {
        self.gen_exps.len()
    }

    pub fn is_constant(&self) -> bool {
        self.x_exp == 0 && self.gen_exps.is_empty()
    }

    /// Product of two monomials; fails only on exponent overflow.
    pub fn mul(&self, other: &TowerMonomial) -> Result<TowerMonomial, Error> {
        let x_exp = self
            .x_exp
            .checked_add(other.x_exp)
            .ok_or_else(|| Error::invalid("x exponent overflow"))?;
        let len = self.gen_exps.len().max(other.gen_exps.len());
        let mut gen_exps = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.gen_exps.get(i).copied().unwrap_or(0);
            let b = other.gen_exps.get(i).copied().unwrap_or(0);
            let e = a
                .checked_add(b)
                .ok_or_else(|| Error::invalid("generator exponent overflow"))?;
            gen_exps.push(e);
        }
        Ok(TowerMonomial::new(x_exp, gen_exps))
    }
}

/// A finite F_p-linear combination of tower monomials at a fixed level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerElement {
    p: Prime,
    level: usize,
    terms: BTreeMap<TowerMonomial, u32>,
}

impl TowerElement {
    pub fn zero(p: Prime, level: usize) -> TowerElement {
        TowerElement { p, level, terms: BTreeMap::new() }
    }

    pub fn one(p: Prime) -> TowerElement {
        TowerElement::constant(FpElement::one(p))
    }

    pub fn constant(c: FpElement) -> TowerElement {
        let mut e = TowerElement::zero(c.modulus(), 0);
        e.add_term(TowerMonomial::one(), c.value());
        e
    }

    pub fn x_power(p: Prime, e: i64) -> TowerElement {
        TowerElement::monomial(p, TowerMonomial::x_power(e), FpElement::one(p))
    }

    /// The normalized generator `f_i` as a level-i element.
    pub fn generator(p: Prime, i: usize) -> TowerElement {
        TowerElement::monomial(p, TowerMonomial::generator(i), FpElement::one(p))
    }

    pub fn monomial(p: Prime, m: TowerMonomial, c: FpElement) -> TowerElement {
        assert_eq!(p, c.modulus(), "coefficient from a different field");
        let mut e = TowerElement::zero(p, m.level());
        e.add_term(m, c.value());
        e
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in monomial order with nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&TowerMonomial, FpElement)> {
        let p = self.p;
        self.terms.iter().map(move |(m, &c)| (m, FpElement::new(c as i64, p)))
    }

    pub fn coefficient(&self, m: &TowerMonomial) -> FpElement {
        FpElement::new(self.terms.get(m).copied().unwrap_or(0) as i64, self.p)
    }

    /// Largest generator exponent appearing anywhere; zero for level-0
    /// elements.  The element is in normal form iff this is below p.
    pub fn max_gen_exp(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.gen_exps().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Accumulates `c * m` into the term map, dropping cancellations.
    pub(crate) fn add_term(&mut self, m: TowerMonomial, c: u32) {
        let c = c % self.p.get();
        if c == 0 {
            return;
        }
        if m.level() > self.level {
            self.level = m.level();
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % self.p.get();
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Re-tags the element at a higher level (fields embed upward).
    pub fn at_level(&self, level: usize) -> Result<TowerElement, Error> {
        if level < self.level {
            return Err(Error::LevelOutOfRange { level, height: self.level });
        }
        let mut e = self.clone();
        e.level = level;
        Ok(e)
    }

    fn check_same(&self, other: &TowerElement) -> Result<(), Error> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TowerElement) -> Result<TowerElement, Error> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.level = self.level.max(other.level);
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> TowerElement {
        let p = self.p.get();
        TowerElement {
            p: self.p,
            level: self.level,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), p - c)).collect(),
        }
    }

    pub fn sub(&self, other: &TowerElement) -> Result<TowerElement, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FpElement) -> TowerElement {
        assert_eq!(self.p, c.modulus(), "coefficient from a different field");
        if c.is_zero() {
            return TowerElement::zero(self.p, self.level);
        }
        let p = self.p.get() as u64;
        TowerElement {
            p: self.p,
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(m, &k)| (m.clone(), ((k as u64 * c.value() as u64) % p) as u32))
                .collect(),
        }
    }

    /// Raw product without normal-form reduction; generator exponents may
    /// end up at p or above.  The tower descriptor wraps this.
    pub(crate) fn mul_raw(&self, other: &TowerElement) -> Result<TowerElement, Error> {
        self.check_same(other)?;
        let mut out = TowerElement::zero(self.p, self.level.max(other.level));
        let p = self.p.get() as u64;
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.mul(mb)?;
                out.add_term(m, ((ca as u64 * cb as u64) % p) as u32);
            }
        }
        Ok(out)
    }
}
