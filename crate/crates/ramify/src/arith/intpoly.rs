//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Just enough polynomial algebra to solve the ghost-component recursion
//! for Witt addition polynomials: terms live in a `BTreeMap` keyed by
//! exponent vectors, coefficients are `BigInt`, and division by an integer
//! is *exact* division that fails loudly on a remainder.

use std::collections::BTreeMap;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::Error;

/// A polynomial in `arity` variables over the integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(arity: usize) -> IntPolynomial {
        IntPolynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigInt) -> IntPolynomial {
        let mut poly = IntPolynomial::zero(arity);
        if !c.is_zero() {
            poly.terms.insert(vec![0; arity], c);
        }
        poly
    }

    /// The monomial consisting of the variable with the given index.
    pub fn variable(arity: usize, index: usize) -> IntPolynomial {
        assert!(index < arity, "variable index out of range");
        let mut exps = vec![0; arity];
        exps[index] = 1;
        let mut poly = IntPolynomial::zero(arity);
        poly.terms.insert(exps, BigInt::one());
        poly
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert(terms: &mut BTreeMap<Vec<u32>, BigInt>, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert(&mut terms, e.clone(), c.clone());
        }
        IntPolynomial { arity: self.arity, terms }
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                Self::insert(&mut terms, exps, ca * cb);
            }
        }
        IntPolynomial { arity: self.arity, terms }
    }

    pub fn pow(&self, mut e: u32) -> IntPolynomial {
        let mut acc = IntPolynomial::constant(self.arity, BigInt::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero(self.arity);
        }
        IntPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing if any division leaves a
    /// remainder.  This is the integrality certificate of the ghost
    /// recursion, so a remainder is an internal error, not bad input.
    pub fn div_exact(&self, d: &BigInt) -> Result<IntPolynomial, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::internal(format!(
                    "integrality failure: coefficient {c} not divisible by {d}"
                )));
            }
            terms.insert(e.clone(), q);
        }
        Ok(IntPolynomial { arity: self.arity, terms })
    }

    /// Substitutes a polynomial for every variable.
    pub fn compose(&self, args: &[IntPolynomial]) -> IntPolynomial {
        assert_eq!(args.len(), self.arity, "wrong number of substitution arguments");
        let arity = args.first().map_or(self.arity, IntPolynomial::arity);
        let mut acc = IntPolynomial::zero(arity);
        for (exps, c) in &self.terms {
            let mut term = IntPolynomial::constant(arity, c.clone());
            for (arg, &e) in args.iter().zip(exps) {
                if e > 0 {
                    term = term.mul(&arg.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Largest absolute coefficient value; handy in size diagnostics.
    pub fn max_coeff_abs(&self) -> BigInt {
        self.terms
            .values()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}
