//! Graded multivariate polynomials with exact coefficients.
//!
//! A [`RingSpec`] fixes an ordered list of graded variables and a coefficient
//! modulus (0 for the integers, or 2 / 4). Polynomials are stored sparsely as
//! a map from [`Monomial`] to a nonzero coefficient, so two polynomials over
//! the same ring are equal exactly when their term maps are equal.
//!
//! The coefficient type is generic: [`Poly`] uses arbitrary-precision
//! integers (optionally reduced modulo the ring's modulus) and [`QPoly`] uses
//! exact rationals.

mod coeff;
mod parse;
mod render;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use coeff::Coefficient;
pub use render::{Format, PolyJson};

/// A graded variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// Ordered graded variables plus a coefficient modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    vars: Vec<Variable>,
    modulus: u32,
}

/// Shared handle to a ring; polynomials hold one of these.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, u32)>,
        modulus: u32,
    ) -> Result<Ring> {
        let vars: Vec<Variable> = vars
            .into_iter()
            .map(|(name, degree)| Variable { name: name.into(), degree })
            .collect();
        if !matches!(modulus, 0 | 2 | 4) {
            return Err(Error::InvalidRing(format!("modulus {modulus} not in {{0, 2, 4}}")));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.degree == 0 {
                return Err(Error::InvalidRing(format!("variable `{}` has degree 0", v.name)));
            }
            if !valid_name(&v.name) {
                return Err(Error::InvalidRing(format!("bad variable name `{}`", v.name)));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{}`", v.name)));
            }
        }
        Ok(Arc::new(RingSpec { vars, modulus }))
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn degree_of_var(&self, i: usize) -> u32 {
        self.vars[i].degree
    }

    /// The same variables over a different coefficient modulus.
    pub fn with_modulus(&self, modulus: u32) -> Result<Ring> {
        RingSpec::new(self.vars.iter().map(|v| (v.name.clone(), v.degree)), modulus)
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        let degree = exps.iter().zip(&self.vars).map(|(e, v)| e * v.degree).sum();
        Monomial { degree, exps }
    }

    pub fn unit_monomial(&self) -> Monomial {
        self.monomial(vec![0; self.vars.len()])
    }

    /// All monomials of graded degree `d`, in ascending monomial order.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        fn rec(vars: &[Variable], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == vars.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let deg = vars[i].degree;
            for e in 0..=left / deg {
                cur.push(e);
                rec(vars, i + 1, left - e * deg, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(&self.vars, 0, d, &mut Vec::with_capacity(self.vars.len()), &mut raw);
        let mut out: Vec<Monomial> = raw.into_iter().map(|e| Monomial { degree: d, exps: e }).collect();
        out.sort();
        out
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    let alpha = name.bytes().take_while(u8::is_ascii_alphabetic).count();
    alpha > 0 && name.bytes().skip(alpha).all(|b| b.is_ascii_digit())
}

/// Exponent vector together with its graded degree.
///
/// Ordering is graded first; within a degree, exponent vectors compare
/// lexicographically by variable position (a larger exponent on an earlier
/// variable is larger).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Polynomial over a [`RingSpec`] with coefficients of type `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct GPoly<C> {
    ring: Ring,
    terms: BTreeMap<Monomial, C>,
}

/// Integer (or mod 2 / mod 4) polynomial.
pub type Poly = GPoly<BigInt>;
/// Rational polynomial.
pub type QPoly = GPoly<num_rational::BigRational>;

impl<C: Coefficient> GPoly<C> {
    pub fn zero(ring: &Ring) -> Self {
        GPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Ring, c: C) -> Self {
        Self::term(ring, ring.unit_monomial(), c)
    }

    pub fn term(ring: &Ring, mono: Monomial, c: C) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(mono, c);
        p
    }

    /// The generator with the given name.
    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Ring, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Self::term(ring, ring.monomial(e), C::one())
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(ring.monomial(e), c);
        }
        p
    }

    /// Adds `c * mono` in place, keeping the canonical form.
    pub fn add_term(&mut self, mono: Monomial, c: C) {
        let m = self.ring.modulus();
        let c = c.reduce(m);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = (o.get().clone() + c).reduce(m);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> C {
        self.coeff(&self.ring.monomial(exps.to_vec()))
    }

    /// `Some(d)` when every term has degree `d` (zero counts as degree 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn graded_component(&self, d: u32) -> Self {
        GPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct degrees occurring, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.dedup();
        ds
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc: std::collections::HashMap<Monomial, C> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.clone() * cb.clone();
                acc.entry(ma.mul(mb))
                    .and_modify(|x| *x = x.clone() + c.clone())
                    .or_insert(c);
            }
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in acc {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        GPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies the ring homomorphism sending variable `i` to `images[i]`.
    ///
    /// Every image must live in `target` and be homogeneous of the source
    /// variable's degree (zero is allowed). Coefficients are carried over
    /// and reduced by the target modulus.
    pub fn map_into(&self, target: &Ring, images: &[Self]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.ring != *target {
                return Err(Error::RingMismatch);
            }
            let d = self.ring.degree_of_var(i);
            if !img.is_zero() && img.homogeneous_degree() != Some(d) {
                return Err(Error::DegreeMismatch { var: self.ring.name(i).to_string(), expected: d });
            }
        }
        let mut powers: Vec<Vec<Self>> = images.iter().map(|img| vec![Self::one(target), img.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitutes named variables by polynomials of the same ring; other
    /// variables map to themselves.
    pub fn substitute(&self, map: &[(&str, Self)]) -> Result<Self> {
        let mut images: Vec<Self> = (0..self.ring.nvars()).map(|i| Self::var_at(&self.ring, i)).collect();
        for (name, img) in map {
            let i = self.ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !img.same_ring(self) {
                return Err(Error::RingMismatch);
            }
            images[i] = img.clone();
        }
        self.map_into(&self.ring.clone(), &images)
    }

    /// Re-expresses the polynomial over a ring whose variables include all
    /// variables occurring here (matched by name and degree).
    pub fn embed(&self, target: &Ring) -> Result<Self> {
        let images = (0..self.ring.nvars())
            .map(|i| {
                let name = self.ring.name(i);
                match target.index_of(name) {
                    Some(j) if target.degree_of_var(j) == self.ring.degree_of_var(i) => Ok(Self::var_at(target, j)),
                    Some(_) => Err(Error::DegreeMismatch {
                        var: name.to_string(),
                        expected: self.ring.degree_of_var(i),
                    }),
                    None if self.terms.keys().all(|m| m.exps[i] == 0) => Ok(Self::zero(target)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.map_into(target, &images)
    }

    /// Value at a point, one coordinate per variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension");
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total.reduce(self.ring.modulus())
    }

    /// Terms whose monomial satisfies the predicate.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial, &C) -> bool) -> Self {
        GPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, c)| keep(m, c)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Same terms read over another ring with identical variables.
    pub fn with_ring(&self, target: &Ring) -> Result<Self> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }
}

impl Poly {
    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, BigInt::from(n))
    }

    /// Divides every coefficient by `d`, failing on the first monomial that
    /// is not divisible.
    pub fn exact_div_int(&self, d: &BigInt) -> Result<Self> {
        if self.ring.modulus() != 0 {
            return Err(Error::InvalidInput("exact division requires integer coefficients".into()));
        }
        if d.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    monomial: render::monomial_plain(&self.ring, m),
                    divisor: d.to_string(),
                });
            }
            out.terms.insert(m.clone(), q);
        }
        Ok(out)
    }

    /// Reduces integer coefficients modulo 2 or 4.
    pub fn reduce_mod(&self, m: u32) -> Result<Self> {
        if self.ring.modulus() != 0 {
            return Err(Error::InvalidInput("reduction requires integer coefficients".into()));
        }
        if !matches!(m, 2 | 4) {
            return Err(Error::InvalidInput(format!("cannot reduce modulo {m}")));
        }
        let target = self.ring.with_modulus(m)?;
        self.with_ring(&target)
    }

    /// Reads a mod-m polynomial as an integer one using representatives in
    /// `[0, m)`.
    pub fn lift(&self) -> Result<Self> {
        let target = self.ring.with_modulus(0)?;
        self.with_ring(&target)
    }

    pub fn to_rational(&self) -> QPoly {
        let ring = self.ring.clone();
        let mut out = QPoly::zero(&ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), num_rational::BigRational::from_integer(c.clone()));
        }
        out
    }

    /// True when every coefficient is even (or the ring already has
    /// characteristic 2 and the polynomial vanishes).
    pub fn all_even(&self) -> bool {
        self.terms.values().all(|c| c.is_even())
    }
}

impl QPoly {
    /// Converts to an integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(m.clone(), c.to_integer());
        }
        Some(out)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn max_abs_denominator_is_power_of_two(&self) -> bool {
        self.terms.values().all(|c| {
            let d = c.denom().abs();
            d.is_positive() && (&d & (&d - BigInt::one())).is_zero()
        })
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b, C: Coefficient> $tr<&'b GPoly<C>> for &'a GPoly<C> {
            type Output = GPoly<C>;
            fn $method(self, rhs: &'b GPoly<C>) -> GPoly<C> {
                self.$checked(rhs).expect("polynomials over different rings")
            }
        }
        impl<C: Coefficient> $tr<GPoly<C>> for GPoly<C> {
            type Output = GPoly<C>;
            fn $method(self, rhs: GPoly<C>) -> GPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for &GPoly<C> {
    type Output = GPoly<C>;
    fn neg(self) -> GPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Neg for GPoly<C> {
    type Output = GPoly<C>;
    fn neg(self) -> GPoly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for GPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Plain))
    }
}

impl<C: Coefficient> fmt::Debug for GPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GPoly({})", self.render(Format::Plain))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uc() -> Ring {
        RingSpec::new([("y", 2), ("c1", 2), ("c2", 4), ("c3", 6), ("c4", 8)], 0).unwrap()
    }

    fn so(n: u32, modulus: u32) -> Ring {
        RingSpec::new((2..=n).map(|i| (format!("w{i}"), i)), modulus).unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(RingSpec::new([("x", 2), ("x", 2)], 0).is_err());
        assert!(RingSpec::new([("x", 0)], 0).is_err());
        assert!(RingSpec::new([("x", 2)], 3).is_err());
        assert!(RingSpec::new([("2x", 2)], 0).is_err());
    }

    #[test]
    fn addition_examples() {
        let r = so(8, 2);
        let w2 = Poly::var(&r, "w2").unwrap();
        assert!((&w2 + &w2).is_zero());

        let r = uc();
        let lhs = Poly::var(&r, "y").unwrap().scale(&BigInt::from(2)) + (-Poly::var(&r, "c1").unwrap());
        assert_eq!(lhs, Poly::parse(&r, "2*y - c1").unwrap());
        assert_eq!(&lhs + &Poly::zero(&r), lhs);
    }

    #[test]
    fn multiplication_examples() {
        let r = so(8, 2);
        let s = Poly::parse(&r, "w2 + w3").unwrap();
        assert_eq!(&s * &s, Poly::parse(&r, "w2^2 + w3^2").unwrap());

        let r = uc();
        let u = Poly::parse(&r, "2y - c1").unwrap();
        assert_eq!(u.pow(2), Poly::parse(&r, "4y^2 - 4y*c1 + c1^2").unwrap());

        let r = so(8, 2);
        let w6 = Poly::var(&r, "w6").unwrap();
        assert_eq!(&w6 * &w6.pow(2), Poly::parse(&r, "w6^3").unwrap());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Poly::one(&so(8, 2));
        let b = Poly::one(&so(8, 0));
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn substitution_examples() {
        let r = uc();
        let p = Poly::parse(&r, "-c2 + 2y*c1 - 2y^2").unwrap();
        let out = p
            .substitute(&[
                ("y", Poly::parse(&r, "c1").unwrap()),
                ("c1", Poly::parse(&r, "2c1").unwrap()),
            ])
            .unwrap();
        assert_eq!(out, Poly::parse(&r, "-c2 + 2c1^2").unwrap());
        assert_eq!(p.substitute(&[]).unwrap(), p);

        let bad = p.substitute(&[("y", Poly::parse(&r, "c2").unwrap())]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
        assert!(matches!(p.substitute(&[("z", Poly::one(&r))]), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn substitution_between_rings() {
        // w8 + w2 w6 under w_{2i} -> c_i, odd -> 0, read mod 2
        let src = so(8, 2);
        let dst = RingSpec::new((1..=4).map(|i| (format!("c{i}"), 2 * i)), 2).unwrap();
        let images: Vec<Poly> = (2..=8u32)
            .map(|i| {
                if i % 2 == 0 {
                    Poly::var(&dst, &format!("c{}", i / 2)).unwrap()
                } else {
                    Poly::zero(&dst)
                }
            })
            .collect();
        let p = Poly::parse(&src, "w8 + w2*w6").unwrap();
        assert_eq!(p.map_into(&dst, &images).unwrap(), Poly::parse(&dst, "c4 + c1*c3").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = uc();
        let p = Poly::parse(&r, "-2c2 + 4y*c1 - 4y^2").unwrap();
        assert_eq!(
            p.exact_div_int(&BigInt::from(2)).unwrap(),
            Poly::parse(&r, "-c2 + 2y*c1 - 2y^2").unwrap()
        );
        assert!(Poly::zero(&r).exact_div_int(&BigInt::from(7)).unwrap().is_zero());
        let err = Poly::parse(&r, "c1").unwrap().exact_div_int(&BigInt::from(2)).unwrap_err();
        assert_eq!(err, Error::NotDivisible { monomial: "c1".into(), divisor: "2".into() });
    }

    #[test]
    fn reduction() {
        let r = uc();
        let two = Poly::parse(&r, "2y - c1").unwrap().reduce_mod(2).unwrap();
        assert_eq!(two, Poly::parse(&r.with_modulus(2).unwrap(), "c1").unwrap());
        assert!(Poly::parse(&r, "4y^3*c1").unwrap().reduce_mod(4).unwrap().is_zero());
        // -1 mod 4 is stored as 3
        let m4 = Poly::parse(&r, "-c1").unwrap().reduce_mod(4).unwrap();
        assert_eq!(m4.terms().next().unwrap().1, &BigInt::from(3));
    }

    #[test]
    fn bases() {
        let r = RingSpec::new([("w2", 2), ("w3", 3)], 2).unwrap();
        let b = r.basis(5);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].exps(), &[1, 1]);

        let r = so(8, 2);
        let b8: Vec<String> = r.basis(8).iter().map(|m| render::monomial_plain(&r, m)).collect();
        let mut expected = vec!["w8", "w2*w6", "w3*w5", "w4^2", "w2^2*w4", "w2*w3^2", "w2^4"];
        let mut got = b8.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn graded_components() {
        let r = uc();
        let u = Poly::parse(&r, "2y - c1").unwrap();
        assert_eq!(u.graded_component(2), u);
        let p = Poly::parse(&r, "1 + y + c2 + c1^2").unwrap();
        assert_eq!(p.degrees(), vec![0, 2, 4]);
        let sum = p.degrees().into_iter().fold(Poly::zero(&r), |acc, d| acc + p.graded_component(d));
        assert_eq!(sum, p);
    }
}
