//! Witt vector addition and the cyclic towers it generates.
//!
//! The addition polynomials `S_0, ..., S_{n-1}` are solved from the ghost
//! components: `W_i(S) = W_i(X) + W_i(Y)` with
//! `W_i(Z) = sum_j p^j Z_j^(p^(i-j))`.  Every division by `p^i` in the
//! recursion is performed as exact integer division with a loud failure,
//! which doubles as the integrality certificate for the computed
//! polynomials.
//!
//! Imposing `F(y) - y = a` componentwise on a length-n Witt vector `a`
//! over k((x)) yields the tower equations `f_i^p - f_i = D_i`, and the
//! Galois group acts through Witt addition of constant vectors: the
//! distinguished generator sigma sends `y` to `y +' (1, 0, ..., 0)`.

use crate::arith::intpoly::IntPolynomial;
use crate::arith::{BigInt, FpElement, Prime};
use crate::error::Error;
use crate::tower::{TowerDescriptor, TowerElement, TowerMonomial};

/// Longest supported Witt vectors; the addition polynomials for longer
/// vectors are far outside tractable sizes.
pub const MAX_LENGTH: usize = 4;

/// The addition polynomials of a fixed vector length.
///
/// `S_i` is a polynomial in `X_0..X_{n-1}, Y_0..Y_{n-1}` (variable `j` is
/// `X_j`, variable `n + j` is `Y_j`), though only the variables up to
/// index `i` actually occur.
#[derive(Clone, Debug)]
pub struct WittSystem {
    p: Prime,
    length: usize,
    polys: Vec<IntPolynomial>,
}

impl WittSystem {
    pub fn new(p: Prime, length: usize) -> Result<WittSystem, Error> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::UnsupportedLength(length));
        }
        let arity = 2 * length;
        let var = |i: usize| IntPolynomial::variable(arity, i);
        let big_p = BigInt::from(p.get());
        // ghost component W_i over the variable block starting at `base`
        let ghost = |base: usize, i: usize| {
            let mut acc = IntPolynomial::zero(arity);
            for j in 0..=i {
                let power = p.get().pow((i - j) as u32);
                acc = acc.add(&var(base + j).pow(power).scale(&big_p.pow(j as u32)));
            }
            acc
        };
        let mut polys = vec![var(0).add(&var(length))];
        for i in 1..length {
            let mut numerator = ghost(0, i).add(&ghost(length, i));
            for (j, s) in polys.iter().enumerate() {
                let power = p.get().pow((i - j) as u32);
                numerator = numerator.sub(&s.pow(power).scale(&big_p.pow(j as u32)));
            }
            polys.push(numerator.div_exact(&big_p.pow(i as u32))?);
        }
        Ok(WittSystem { p, length, polys })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn addition_polynomials(&self) -> &[IntPolynomial] {
        &self.polys
    }

    /// Witt sum of two constant vectors over F_p.
    pub fn add_constants(
        &self,
        a: &[FpElement],
        b: &[FpElement],
    ) -> Result<Vec<FpElement>, Error> {
        if a.len() != self.length || b.len() != self.length {
            return Err(Error::invalid("constant vector length mismatch"));
        }
        let mut out = Vec::with_capacity(self.length);
        for s in &self.polys {
            let mut acc = FpElement::zero(self.p);
            for (exps, c) in s.terms() {
                let mut term = FpElement::from_bigint(c, self.p);
                for (j, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let base = if j < self.length { a[j] } else { b[j - self.length] };
                    term = term * base.pow(e as u64);
                }
                acc = acc + term;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// `k`-fold Witt multiple of the unit vector `(1, 0, ..., 0)` in
    /// `W_n(F_p)`, by binary double-and-add.
    pub fn multiple_of_unit(&self, k: u64) -> Result<Vec<FpElement>, Error> {
        let zero = vec![FpElement::zero(self.p); self.length];
        let mut unit = zero.clone();
        unit[0] = FpElement::one(self.p);
        let mut acc = zero;
        let mut base = unit;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_constants(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.add_constants(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Evaluates `S_i` inside a tower at `X_j = xs[j]`, `Y_j = ys[j]`.
    ///
    /// With `formal` set the product is taken in the free polynomial ring
    /// (no rewriting by the defining relations), which keeps the raw
    /// defining elements in the shape the substitution produces; otherwise
    /// everything is reduced to tower normal form as it accumulates.
    fn eval_in_tower(
        &self,
        i: usize,
        tower: &TowerDescriptor,
        xs: &[TowerElement],
        ys: &[TowerElement],
        formal: bool,
    ) -> Result<TowerElement, Error> {
        let mut acc = TowerElement::zero(self.p, 0);
        'terms: for (exps, c) in self.polys[i].terms() {
            let mut term = TowerElement::constant(FpElement::from_bigint(c, self.p));
            if term.is_zero() {
                continue;
            }
            for (j, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let arg = if j < self.length { &xs[j] } else { &ys[j - self.length] };
                if arg.is_zero() {
                    continue 'terms;
                }
                if formal {
                    for _ in 0..e {
                        term = term.mul_raw(arg)?;
                    }
                } else {
                    term = tower.mul(&term, &tower.pow(arg, e as u64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// A tower built from a Witt vector, remembering enough of its origin to
/// realize the Galois action exactly.
#[derive(Clone, Debug)]
pub struct WittTower {
    system: WittSystem,
    vector: Vec<TowerElement>,
    tower: TowerDescriptor,
    raw_defining: Vec<TowerElement>,
}

/// Builds the tower cut out by `F(y) - y = a` for a Witt vector `a` of
/// base-field components, normalizing every level.
pub fn build_tower(p: Prime, vector: &[TowerElement]) -> Result<WittTower, Error> {
    let system = WittSystem::new(p, vector.len())?;
    for component in vector {
        if component.prime() != p {
            return Err(Error::ModulusMismatch {
                left: p.get(),
                right: component.prime().get(),
            });
        }
        if component.level() > 0 {
            return Err(Error::invalid(
                "Witt vector components must lie in the base field k((x))",
            ));
        }
    }
    // the leading component decides total ramification of the whole chain:
    // its minimal valuation must be negative and prime to p
    let base = TowerDescriptor::new(p);
    match base.valuation(&vector[0])? {
        Some(v) if v < 0 && (-v) % p.get() as i64 != 0 => {}
        _ => {
            return Err(Error::invalid(
                "base Witt component not ramified: its minimal valuation must be \
                 negative and prime to p",
            ))
        }
    }
    let mut tower = TowerDescriptor::new(p);
    let mut raw_defining = Vec::with_capacity(vector.len());
    for i in 0..vector.len() {
        // S_i = X_i + Y_i + (terms in lower variables); substituting
        // Y_j -> f_{j+1} for j < i and Y_i -> 0 isolates
        // D_{i+1} = f_{i+1}^p - f_{i+1} in the already-built generators.
        let mut ys: Vec<TowerElement> = tower
            .levels()
            .iter()
            .map(|l| l.raw_generator().clone())
            .collect();
        ys.resize(vector.len(), TowerElement::zero(p, 0));
        let d_raw = system.eval_in_tower(i, &tower, vector, &ys, true)?;
        raw_defining.push(d_raw.clone());
        tower.add_level(&d_raw)?;
    }
    Ok(WittTower { system, vector: vector.to_vec(), tower, raw_defining })
}

/// The raw (pre-normalization) defining elements `D_1, ..., D_n`.
pub fn derive_tower_equations(
    p: Prime,
    vector: &[TowerElement],
) -> Result<Vec<TowerElement>, Error> {
    Ok(build_tower(p, vector)?.raw_defining)
}

impl WittTower {
    pub fn system(&self) -> &WittSystem {
        &self.system
    }

    pub fn vector(&self) -> &[TowerElement] {
        &self.vector
    }

    pub fn tower(&self) -> &TowerDescriptor {
        &self.tower
    }

    pub fn raw_defining(&self) -> &[TowerElement] {
        &self.raw_defining
    }

    pub fn height(&self) -> usize {
        self.tower.height()
    }

    /// Images of the normalized generators under `sigma^k`, where the
    /// distinguished generator sigma adds `(1, 0, ..., 0)`.
    ///
    /// On the original generators, `sigma^k(f_{i+1})` is
    /// `S_i(c; f_1, ..., f_{i+1})` for the constant vector
    /// `c = k (1, 0, ..., 0)`; the normalized image then subtracts the
    /// image of the recorded substitution tail, computed bottom-up.
    pub fn power_images(&self, k: u64) -> Result<Vec<TowerElement>, Error> {
        let p = self.system.p;
        let constants: Vec<TowerElement> = self
            .system
            .multiple_of_unit(k)?
            .into_iter()
            .map(TowerElement::constant)
            .collect();
        let ys: Vec<TowerElement> = self
            .tower
            .levels()
            .iter()
            .map(|l| l.raw_generator().clone())
            .collect();
        let mut images: Vec<TowerElement> = Vec::with_capacity(self.height());
        for i in 0..self.height() {
            let moved_raw = self.system.eval_in_tower(i, &self.tower, &constants, &ys, false)?;
            // raw f_{i+1} = g_{i+1} + tail, so sigma^k(g) = sigma^k(raw) - sigma^k(tail)
            let tail = self.tower.levels()[i]
                .raw_generator()
                .sub(&TowerElement::generator(p, i + 1))?;
            let moved_tail = apply_generator_images(&self.tower, &images, &tail)?;
            images.push(moved_raw.sub(&moved_tail)?);
        }
        Ok(images)
    }

    /// Images of the normalized generators under the distinguished
    /// generator itself.
    pub fn generator_images(&self) -> Result<Vec<TowerElement>, Error> {
        self.power_images(1)
    }

    /// Checks `sigma(g)^p - sigma(g) = sigma(D)` for every level, i.e.
    /// that the images really define a field automorphism.
    pub fn verify_relations(&self, images: &[TowerElement]) -> Result<bool, Error> {
        if images.len() != self.height() {
            return Err(Error::invalid("one image per level expected"));
        }
        for i in 0..self.height() {
            let lhs = self.tower.pow_p(&images[i])?.sub(&images[i])?;
            let rhs = apply_generator_images(
                &self.tower,
                &images[..i],
                self.tower.levels()[i].defining(),
            )?;
            // the two sides may carry different level tags (the right-hand
            // side involves only lower generators), so compare at a common
            // level
            let level = lhs.level().max(rhs.level());
            if lhs.at_level(level)? != rhs.at_level(level)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Convenience wrapper matching the tower-plus-vector calling convention:
/// rebuilds the tower from the vector and fails if the result differs from
/// the descriptor handed in.
pub fn galois_generator_images(
    tower: &TowerDescriptor,
    vector: &[TowerElement],
) -> Result<Vec<TowerElement>, Error> {
    let wt = build_tower(tower.prime(), vector)?;
    let same = wt.tower.height() == tower.height()
        && wt.tower.jumps() == tower.jumps()
        && wt
            .tower
            .levels()
            .iter()
            .zip(tower.levels())
            .all(|(a, b)| a.defining() == b.defining());
    if !same {
        return Err(Error::NotWittGenerated);
    }
    wt.generator_images()
}

/// Substitutes `images[j]` for the normalized generator `f_{j+1}` in `e`,
/// fixing the base field pointwise.
pub fn apply_generator_images(
    tower: &TowerDescriptor,
    images: &[TowerElement],
    e: &TowerElement,
) -> Result<TowerElement, Error> {
    let p = e.prime();
    let mut acc = TowerElement::zero(p, 0);
    for (m, c) in e.terms() {
        if m.level() > images.len() {
            return Err(Error::invalid(format!(
                "no image provided for generator f{}",
                m.level()
            )));
        }
        let mut term = TowerElement::monomial(p, TowerMonomial::x_power(m.x_exp()), c);
        for j in 1..=m.level() {
            let exp = m.gen_exp(j);
            if exp > 0 {
                term = tower.mul(&term, &tower.pow(&images[j - 1], exp as u64)?)?;
            }
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse::parse_expression;

    fn prime(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn length_bounds_are_enforced() {
        assert!(matches!(
            WittSystem::new(prime(2), 0),
            Err(Error::UnsupportedLength(0))
        ));
        assert!(matches!(
            WittSystem::new(prime(2), 5),
            Err(Error::UnsupportedLength(5))
        ));
        assert!(WittSystem::new(prime(2), 4).is_ok());
    }

    #[test]
    fn addition_polynomials_for_p2() {
        let sys = WittSystem::new(prime(2), 3).unwrap();
        let polys = sys.addition_polynomials();
        let v = |i| IntPolynomial::variable(6, i);
        // S_0 = X0 + Y0
        assert_eq!(polys[0], v(0).add(&v(3)));
        // S_1 = X1 + Y1 - X0 Y0
        assert_eq!(polys[1], v(1).add(&v(4)).sub(&v(0).mul(&v(3))));
        // S_2 = X2 + Y2 - X1 Y1 + X0 X1 Y0 + X0 Y0 Y1
        //       - X0^3 Y0 - 2 X0^2 Y0^2 - X0 Y0^3
        let expected = v(2)
            .add(&v(5))
            .sub(&v(1).mul(&v(4)))
            .add(&v(0).mul(&v(1)).mul(&v(3)))
            .add(&v(0).mul(&v(3)).mul(&v(4)))
            .sub(&v(0).pow(3).mul(&v(3)))
            .sub(&v(0).pow(2).mul(&v(3).pow(2)).scale(&BigInt::from(2)))
            .sub(&v(0).mul(&v(3).pow(3)));
        assert_eq!(polys[2], expected);
    }

    #[test]
    fn neutral_element_and_commutativity() {
        for &q in &[2u32, 3, 5] {
            let sys = WittSystem::new(prime(q), 3).unwrap();
            let arity = 6;
            let v = |i| IntPolynomial::variable(arity, i);
            let zero = IntPolynomial::zero(arity);
            for (i, s) in sys.addition_polynomials().iter().enumerate() {
                // S_i(X, 0) = X_i
                let args: Vec<IntPolynomial> =
                    (0..3).map(v).chain((0..3).map(|_| zero.clone())).collect();
                assert_eq!(s.compose(&args), v(i), "neutrality S_{i}, p = {q}");
                // S_i(X, Y) = S_i(Y, X)
                let swapped: Vec<IntPolynomial> =
                    (3..6).map(v).chain((0..3).map(v)).collect();
                assert_eq!(&s.compose(&swapped), s, "commutativity S_{i}, p = {q}");
            }
        }
    }

    #[test]
    fn addition_polynomials_are_isobaric() {
        // weight(X_j) = weight(Y_j) = p^j; every term of S_i has weight p^i
        for &q in &[2u32, 3] {
            let sys = WittSystem::new(prime(q), 3).unwrap();
            for (i, s) in sys.addition_polynomials().iter().enumerate() {
                for (exps, _) in s.terms() {
                    let weight: u64 = exps
                        .iter()
                        .enumerate()
                        .map(|(j, &e)| e as u64 * (q as u64).pow((j % 3) as u32))
                        .sum();
                    assert_eq!(weight, (q as u64).pow(i as u32), "S_{i}, p = {q}");
                }
            }
        }
    }

    #[test]
    fn constant_vectors_form_a_cyclic_group() {
        // W_2(F_3) with repeated addition of (1, 0) is Z/9
        let sys = WittSystem::new(prime(3), 2).unwrap();
        let mut seen = std::collections::HashSet::new();
        for k in 0..9 {
            let v: Vec<u32> = sys
                .multiple_of_unit(k)
                .unwrap()
                .iter()
                .map(|c| c.value())
                .collect();
            assert!(seen.insert(v), "k = {k} repeated early");
        }
        let wrap = sys.multiple_of_unit(9).unwrap();
        assert!(wrap.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn unit_multiples_for_p2() {
        let sys = WittSystem::new(prime(2), 3).unwrap();
        let vals = |k: u64| -> Vec<u32> {
            sys.multiple_of_unit(k).unwrap().iter().map(|c| c.value()).collect()
        };
        assert_eq!(vals(1), vec![1, 0, 0]);
        assert_eq!(vals(2), vec![0, 1, 0]);
        assert_eq!(vals(4), vec![0, 0, 1]);
        assert_eq!(vals(8), vec![0, 0, 0]);
    }

    #[test]
    fn tower_equations_for_p2() {
        let p = prime(2);
        let vector = vec![
            TowerElement::x_power(p, 1),
            TowerElement::zero(p, 0),
            TowerElement::zero(p, 0),
        ];
        let raw = derive_tower_equations(p, &vector).unwrap();
        assert_eq!(raw[0], parse_expression("x", p).unwrap());
        assert_eq!(raw[1], parse_expression("x*f1", p).unwrap());
        assert_eq!(
            raw[2],
            parse_expression("x^3*f1 + x*f1^3 + x*f1*f2", p).unwrap()
        );
    }

    #[test]
    fn tower_equations_for_p5_level_two() {
        let p = prime(5);
        let vector = vec![TowerElement::x_power(p, 1), TowerElement::zero(p, 0)];
        let raw = derive_tower_equations(p, &vector).unwrap();
        assert_eq!(
            raw[1],
            parse_expression("-x^4*f1 - 2*x^3*f1^2 - 2*x^2*f1^3 - x*f1^4", p).unwrap()
        );
    }

    #[test]
    fn galois_images_for_p2() {
        let p = prime(2);
        let vector = vec![
            TowerElement::x_power(p, 1),
            TowerElement::zero(p, 0),
            TowerElement::zero(p, 0),
        ];
        let wt = build_tower(p, &vector).unwrap();
        let images = wt.generator_images().unwrap();
        assert_eq!(images[0], parse_expression("f1 + 1", p).unwrap());
        assert_eq!(images[1], parse_expression("f2 + f1", p).unwrap());
        assert_eq!(images[2], parse_expression("f3 + f1*f2 + x", p).unwrap());
        assert!(wt.verify_relations(&images).unwrap());
        // sigma has order 8: the 8th power fixes every generator
        let identity = wt.power_images(8).unwrap();
        for (i, img) in identity.iter().enumerate() {
            assert_eq!(img, &TowerElement::generator(p, i + 1));
        }
    }

    #[test]
    fn vectors_must_be_base_field_elements() {
        let p = prime(2);
        let bad = vec![TowerElement::generator(p, 1)];
        assert!(matches!(build_tower(p, &bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn base_component_must_be_visibly_ramified() {
        let p = prime(2);
        for bad in ["x^2", "1", "0", "x^-1", "x^4 + x^2"] {
            let vector = vec![parse_expression(bad, p).unwrap()];
            let err = build_tower(p, &vector).unwrap_err();
            match err {
                Error::Invalid(msg) => assert!(msg.contains("not ramified"), "{msg}"),
                other => panic!("expected an invalid-input error, got {other:?}"),
            }
        }
        // a divisible minimal valuation is still fine deeper in the vector
        let vector = vec![
            parse_expression("x", p).unwrap(),
            parse_expression("x^2", p).unwrap(),
        ];
        assert!(build_tower(p, &vector).is_ok());
        // ... and handwritten levels may normalize through it
        let mut t = TowerDescriptor::new(p);
        t.add_level(&parse_expression("x^2", p).unwrap()).unwrap();
        assert_eq!(t.jumps(), vec![1]);
    }

    #[test]
    fn foreign_towers_are_rejected_for_galois_data() {
        let p = prime(2);
        let mut other = TowerDescriptor::new(p);
        other.add_level(&TowerElement::x_power(p, 3)).unwrap();
        let vector = vec![TowerElement::x_power(p, 1)];
        assert!(matches!(
            galois_generator_images(&other, &vector),
            Err(Error::NotWittGenerated)
        ));
    }
}
