//! The `Sq^1` linear algebra, the gamma operator and the derived sequence of `w2`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::BsoModel;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ring::{Monomial, Poly};

/// Matrix of `Sq^1` from degree `d` to degree `d + 1`, columns and rows in
/// ascending monomial order.
#[derive(Debug)]
pub struct Sq1Matrix {
    pub degree: u32,
    pub source: Vec<Monomial>,
    pub target: Vec<Monomial>,
    pub matrix: BitMatrix,
    target_index: HashMap<Monomial, usize>,
}

impl Sq1Matrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Basis of `ker Sq^1` in degree `d`.
    pub fn kernel(&self, model: &BsoModel) -> Vec<Poly> {
        self.matrix.kernel().iter().map(|x| self.source_poly(model, x)).collect()
    }

    fn source_poly(&self, model: &BsoModel, x: &[bool]) -> Poly {
        let mut p = Poly::zero(model.ring());
        for (m, &b) in self.source.iter().zip(x) {
            if b {
                p.add_term(m.clone(), BigInt::one());
            }
        }
        p
    }

    fn target_vec(&self, p: &Poly) -> Result<Vec<bool>> {
        let mut v = vec![false; self.target.len()];
        for (m, _) in p.terms() {
            let i = self.target_index.get(m).ok_or_else(|| {
                Error::Invariant(format!("monomial of degree {} outside the target basis", m.degree()))
            })?;
            v[*i] = true;
        }
        Ok(v)
    }
}

/// Whether a derived-sequence entry came from the built-in table or the solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepSource {
    Initial,
    Tabulated,
    Solver,
}

/// One entry `w2^(k)` with the check of its defining equation.
#[derive(Clone, Debug)]
pub struct DerivedStep {
    pub index: u32,
    pub value: Poly,
    pub source: StepSource,
    /// `Sq^1(w2^(k)) + Sq^{2^k} Sq^1(w2^(k-1)) + w2^(k-1) Sq^1(w2^(k-1))`;
    /// zero when the step is certified.
    pub residue: Poly,
}

impl DerivedStep {
    pub fn certified(&self) -> bool {
        self.residue.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct DerivedW2 {
    pub steps: Vec<DerivedStep>,
}

impl DerivedW2 {
    pub fn values(&self) -> Vec<Poly> {
        self.steps.iter().map(|s| s.value.clone()).collect()
    }
}

/// Outcome of testing `gamma(u1 + u2) = gamma(u1) + gamma(u2) + u1 u2` modulo `ker Sq^1`.
#[derive(Clone, Debug)]
pub struct SumLaw {
    pub difference: Poly,
    pub in_kernel: bool,
}

/// Published representatives of `w2^(1)`, `w2^(2)`, `w2^(3)` over `Z/2[w2..w16]`.
pub const TABULATED_W2: [&str; 3] = [
    "w4",
    "w8 + w2*w6",
    "w16 + w2*w14 + w4*w12 + w6*w10 + w2*w6*w8 + w4*w6^2 + w2*w7^2 \
     + w3^2*(w10 + w2*w8 + w4*w6) + w2^2*(w12 + w2*w10 + w4*w8)",
];

impl BsoModel {
    fn within_bound(&self, d: u32) -> Result<()> {
        if d > self.degree_bound {
            Err(Error::DegreeBound { degree: d, bound: self.degree_bound })
        } else {
            Ok(())
        }
    }

    /// `Sq^1` from degree `d` to `d + 1`; cached per degree.
    pub fn sq1_matrix(&self, d: u32) -> Result<Arc<Sq1Matrix>> {
        self.within_bound(d + 1)?;
        if let Some(m) = self.sq1_cache.lock().expect("sq1 cache").get(&d) {
            return Ok(m.clone());
        }
        let source = self.ring.basis(d);
        let target = self.ring.basis(d + 1);
        let target_index: HashMap<Monomial, usize> =
            target.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = BitMatrix::zeros(target.len(), source.len());
        for (c, m) in source.iter().enumerate() {
            for (t, _) in self.sq_monomial(1, m).terms() {
                matrix.flip(target_index[t], c);
            }
        }
        let out = Arc::new(Sq1Matrix { degree: d, source, target, matrix, target_index });
        self.sq1_cache.lock().expect("sq1 cache").insert(d, out.clone());
        Ok(out)
    }

    /// Solves `Sq^1(v) = rhs` for `v` of degree `d`, free columns set to zero.
    pub fn solve_sq1(&self, d: u32, rhs: &Poly) -> Result<Poly> {
        let mat = self.sq1_matrix(d)?;
        let b = mat.target_vec(&rhs.graded_component(d + 1))?;
        if rhs.terms().any(|(m, _)| m.degree() != d + 1) {
            return Err(Error::InvalidInput(format!("right-hand side is not homogeneous of degree {}", d + 1)));
        }
        let x = mat.matrix.solve(&b).ok_or(Error::NoSolution { degree: d })?;
        Ok(mat.source_poly(self, &x))
    }

    /// `Sq^1(v) = 0`, by the matrix when within the bound.
    pub fn in_sq1_kernel(&self, v: &Poly) -> Result<bool> {
        Ok(self.sq(1, v)?.is_zero())
    }

    /// Right-hand side `Sq^{2r} Sq^1(u) + u Sq^1(u)` of the defining equation of gamma.
    pub fn gamma_rhs(&self, u: &Poly) -> Result<Poly> {
        let d = homogeneous_even(u)?;
        let s1 = self.sq(1, u)?;
        Ok(self.sq(d, &s1)? + u * &s1)
    }

    /// Canonical solution of `Sq^1(v) = Sq^{2r} Sq^1(u) + u Sq^1(u)` for `deg u = 2r`.
    pub fn gamma(&self, u: &Poly) -> Result<Poly> {
        self.check(u)?;
        let d = homogeneous_even(u)?;
        let rhs = self.gamma_rhs(u)?;
        self.solve_sq1(2 * d, &rhs)
    }

    /// `w2^(0), ..., w2^(r_max)`. Entries with a tabulated representative use
    /// it when it satisfies the defining equation; the rest come from the solver.
    pub fn derived_w2(&self, r_max: u32) -> Result<DerivedW2> {
        if r_max > 5 {
            return Err(Error::InvalidInput(format!("r_max = {r_max} above 5")));
        }
        let w2 = self.w(2);
        let mut steps = vec![DerivedStep {
            index: 0,
            value: w2,
            source: StepSource::Initial,
            residue: Poly::zero(&self.ring),
        }];
        for k in 1..=r_max {
            let prev = steps.last().expect("nonempty").value.clone();
            let rhs = self.gamma_rhs(&prev)?;
            let mut chosen = None;
            if let Some(text) = TABULATED_W2.get(k as usize - 1) {
                let t = self.parse_truncated(text)?;
                let residue = self.sq(1, &t)? + rhs.clone();
                if residue.is_zero() {
                    chosen = Some((t, StepSource::Tabulated));
                }
            }
            let (value, source) = match chosen {
                Some(c) => c,
                None => (self.solve_sq1(1 << (k + 1), &rhs)?, StepSource::Solver),
            };
            let residue = self.sq(1, &value)? + rhs;
            steps.push(DerivedStep { index: k, value, source, residue });
        }
        Ok(DerivedW2 { steps })
    }

    /// `gamma(u1 + u2) - gamma(u1) - gamma(u2) - u1 u2` and whether it lies in `ker Sq^1`.
    pub fn gamma_sum_law(&self, u1: &Poly, u2: &Poly) -> Result<SumLaw> {
        let d1 = homogeneous_even(u1)?;
        let d2 = homogeneous_even(u2)?;
        if d1 != d2 && !u1.is_zero() && !u2.is_zero() {
            return Err(Error::InvalidInput("summands must have the same degree".into()));
        }
        let sum = u1 + u2;
        let g = |u: &Poly| if u.is_zero() { Ok(Poly::zero(&self.ring)) } else { self.gamma(u) };
        let difference = g(&sum)? + g(u1)? + g(u2)? + u1 * u2;
        let in_kernel = self.in_sq1_kernel(&difference)?;
        Ok(SumLaw { difference, in_kernel })
    }

    /// Whether `p` lies in the ideal generated by `gens`, tested in degree `deg p`.
    pub fn ideal_member(&self, p: &Poly, gens: &[Poly]) -> Result<bool> {
        self.check(p)?;
        if p.is_zero() {
            return Ok(true);
        }
        let d = p.homogeneous_degree().ok_or_else(|| Error::InvalidInput("p is not homogeneous".into()))?;
        self.within_bound(d)?;
        let target = self.ring.basis(d);
        let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut columns: Vec<Poly> = Vec::new();
        for g in gens {
            self.check(g)?;
            if g.is_zero() {
                continue;
            }
            let e = g.homogeneous_degree().ok_or_else(|| Error::InvalidInput("generator is not homogeneous".into()))?;
            if e > d {
                continue;
            }
            for m in self.ring.basis(d - e) {
                columns.push(g.mul_monomial(&m));
            }
        }
        let mut mat = BitMatrix::zeros(target.len(), columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (m, _) in col.terms() {
                mat.set(index[m], c, true);
            }
        }
        let mut b = vec![false; target.len()];
        for (m, _) in p.terms() {
            b[index[m]] = true;
        }
        Ok(mat.solve(&b).is_some())
    }
}

fn homogeneous_even(u: &Poly) -> Result<u32> {
    match u.homogeneous_degree() {
        Some(d) if d % 2 == 0 => Ok(d),
        _ => Err(Error::InvalidInput("expected a homogeneous polynomial of even degree".into())),
    }
}
