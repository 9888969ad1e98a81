//! The operators psi and delta on `Z[y, c1, ..., ck]`.
//!
//! `psi` keeps the odd-coefficient monomials `y^r c_lambda` of its argument
//! and sends each to `y^{2r} P_lambda`, where `P_r` stands for
//!
//! ```text
//! c_r^2 - 2 c_{r-1} c_{r+1} + ... + 2 (-1)^{r-1} c_1 c_{2r-1} + 2 (-1)^r c_{2r}
//! ```
//!
//! Since `psi(u)` is congruent to `u^2` mod 2, `delta(u) = (psi(u) - u^2) / 2`
//! is an exact integer polynomial.

pub mod symmetric;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Poly, Ring, RingSpec};

/// Model of `H*(B_{U^c(k)}) = Z[y, c1, ..., ck]`.
#[derive(Debug, Clone)]
pub struct UcModel {
    k: u32,
    ring: Ring,
    view: Ring,
    chern: Ring,
}

/// A delta-sequence entry with its recurrence check.
#[derive(Clone, Debug)]
pub struct DeltaStep {
    pub index: u32,
    pub value: Poly,
    /// `psi` of this entry in the Pontryagin view.
    pub psi: Poly,
    /// `2 delta^{r+1} + (delta^r)^2 - psi(delta^r)`, filled for every entry
    /// that has a successor.
    pub residue: Option<Poly>,
}

#[derive(Clone, Debug)]
pub struct DeltaSequence {
    pub steps: Vec<DeltaStep>,
}

impl DeltaSequence {
    pub fn certified(&self) -> bool {
        self.steps.iter().all(|s| s.residue.as_ref().map_or(true, Poly::is_zero))
    }

    pub fn value(&self, r: usize) -> &Poly {
        &self.steps[r].value
    }
}

/// Weyl-invariant generators in `Z[c1, ..., ck]`.
#[derive(Clone, Debug)]
pub struct WeylGenerators {
    /// `g_1, ..., g_k`.
    pub g: Vec<Poly>,
    /// `alpha_1, ..., alpha_rmax`.
    pub alpha: Vec<Poly>,
    /// `f_1, ..., f_rmax`.
    pub f: Vec<Poly>,
    /// `f_r` obtained by substituting `P_j -> g_j` in `psi(delta^r)`.
    pub f_via_g: Vec<Poly>,
    /// `2 alpha_1 - g_1`.
    pub initial_relation: Poly,
    /// `2 alpha_{r+1} + alpha_r^2 - f_r` for `r = 1 .. rmax - 1`.
    pub relations: Vec<Poly>,
}

impl UcModel {
    pub fn new(k: u32) -> Result<Self> {
        if !(2..=8).contains(&k) {
            return Err(Error::InvalidInput(format!("rank k = {k} outside 2..=8")));
        }
        let mut vars = vec![("y".to_string(), 2)];
        vars.extend((1..=k).map(|i| (format!("c{i}"), 2 * i)));
        let ring = RingSpec::new(vars, 0)?;
        let mut vview = vec![("y".to_string(), 2)];
        vview.extend((1..=k).map(|i| (format!("P{i}"), 4 * i)));
        let view = RingSpec::new(vview, 0)?;
        let chern = RingSpec::new((1..=k).map(|i| (format!("c{i}"), 2 * i)), 0)?;
        Ok(UcModel { k, ring, view, chern })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `Z[y, c1, ..., ck]`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `Z[y, P1, ..., Pk]`.
    pub fn view_ring(&self) -> &Ring {
        &self.view
    }

    /// `Z[c1, ..., ck]`.
    pub fn chern_ring(&self) -> &Ring {
        &self.chern
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Poly::parse(&self.ring, text)
    }

    pub fn y(&self) -> Poly {
        Poly::var_at(&self.ring, 0)
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` beyond the rank.
    pub fn c(&self, i: u32) -> Poly {
        match i {
            0 => Poly::one(&self.ring),
            i if i > self.k => Poly::zero(&self.ring),
            i => Poly::var_at(&self.ring, i as usize),
        }
    }

    /// `2y - c1`.
    pub fn u0(&self) -> Poly {
        self.y().scale(&BigInt::from(2)) - self.c(1)
    }

    /// Chern expansion of `P_r`.
    pub fn expand_p(&self, r: u32) -> Poly {
        let mut out = self.c(r).pow(2);
        for i in 1..=r {
            let t = &self.c(r - i) * &self.c(r + i);
            let s = if i % 2 == 0 { 2 } else { -2 };
            out = out + t.scale(&BigInt::from(s));
        }
        out
    }

    /// Expands a Pontryagin-view polynomial into `Z[y, c1, ..., ck]`.
    pub fn expand(&self, v: &Poly) -> Result<Poly> {
        let mut images = vec![self.y()];
        images.extend((1..=self.k).map(|r| self.expand_p(r)));
        v.map_into(&self.ring, &images)
    }

    fn check(&self, u: &Poly) -> Result<()> {
        if u.ring() == &self.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `psi(u)` in the Pontryagin view.
    pub fn psi(&self, u: &Poly) -> Result<Poly> {
        self.check(u)?;
        if u.homogeneous_degree().is_none() {
            return Err(Error::InvalidInput("psi needs a homogeneous polynomial".into()));
        }
        let mut out = Poly::zero(&self.view);
        for (m, c) in u.terms() {
            if c.is_even() {
                continue;
            }
            let mut e = m.exps().to_vec();
            e[0] *= 2;
            out.add_term(self.view.monomial(e), BigInt::one());
        }
        Ok(out)
    }

    /// `(psi(u) - u^2) / 2`.
    pub fn delta(&self, u: &Poly) -> Result<Poly> {
        let psi = self.expand(&self.psi(u)?)?;
        let diff = psi - u.pow(2);
        diff.exact_div_int(&BigInt::from(2))
            .map_err(|e| Error::Invariant(format!("psi(u) - u^2 is not even: {e}")))
    }

    /// `u0, delta(u0), ..., delta^{r_max}(u0)` with `u0 = 2y - c1`.
    pub fn delta_sequence(&self, r_max: u32) -> Result<DeltaSequence> {
        if r_max > 4 {
            return Err(Error::InvalidInput(format!("r_max = {r_max} above 4")));
        }
        let mut steps: Vec<DeltaStep> = Vec::new();
        let mut cur = self.u0();
        for r in 0..=r_max {
            let psi = self.psi(&cur)?;
            let next = if r < r_max { Some(self.delta(&cur)?) } else { None };
            let residue = match &next {
                Some(n) => Some(n.scale(&BigInt::from(2)) + cur.pow(2) - self.expand(&psi)?),
                None => None,
            };
            steps.push(DeltaStep { index: r, value: cur.clone(), psi, residue });
            if let Some(n) = next {
                cur = n;
            }
        }
        Ok(DeltaSequence { steps })
    }

    /// `y -> c1`, `c1 -> 2 c1`, `c_r -> c_r`, into `Z[c1, ..., ck]`.
    pub fn a_prime_pullback(&self, u: &Poly) -> Result<Poly> {
        self.check(u)?;
        let c1 = Poly::var_at(&self.chern, 0);
        let mut images = vec![c1.clone(), c1.scale(&BigInt::from(2))];
        images.extend((2..=self.k).map(|i| Poly::var_at(&self.chern, (i - 1) as usize)));
        u.map_into(&self.chern, &images)
    }

    /// Generators `g_r`, `alpha_r`, `f_r` and the relations among them.
    pub fn weyl_generators(&self, r_max: u32) -> Result<WeylGenerators> {
        if r_max == 0 {
            return Err(Error::InvalidInput("r_max must be at least 1".into()));
        }
        let seq = self.delta_sequence(r_max)?;
        let g: Vec<Poly> = (1..=self.k)
            .map(|r| self.a_prime_pullback(&self.expand_p(r)))
            .collect::<Result<_>>()?;
        let mut alpha = Vec::new();
        let mut f = Vec::new();
        let mut f_via_g = Vec::new();
        for r in 1..=r_max as usize {
            let step = &seq.steps[r];
            alpha.push(self.a_prime_pullback(&step.value)?);
            f.push(self.a_prime_pullback(&self.expand(&step.psi)?)?);
            f_via_g.push(self.psi_in_g(&step.psi, &g)?);
        }
        let initial_relation = alpha[0].scale(&BigInt::from(2)) - g[0].clone();
        let relations = (0..alpha.len() - 1)
            .map(|i| alpha[i + 1].scale(&BigInt::from(2)) + alpha[i].pow(2) - f[i].clone())
            .collect();
        Ok(WeylGenerators { g, alpha, f, f_via_g, initial_relation, relations })
    }

    /// Substitutes `P_j -> g_j` in a y-free Pontryagin-view polynomial.
    fn psi_in_g(&self, v: &Poly, g: &[Poly]) -> Result<Poly> {
        if v.terms().any(|(m, _)| m.exps()[0] != 0) {
            return Err(Error::Invariant("psi image contains y".into()));
        }
        let mut images = vec![Poly::zero(&self.chern)];
        images.extend(g.iter().cloned());
        // y has degree 2 but maps to zero, which map_into accepts.
        v.map_into(&self.chern, &images)
    }

    /// The functional `c1 -> 1`, `c_r -> 0` for `r >= 2`.
    pub fn e_hom(&self, u: &Poly) -> Result<BigInt> {
        let ring = u.ring();
        let mut total = BigInt::zero();
        for (m, c) in u.terms() {
            let mut only_c1 = true;
            for v in m.support() {
                match ring.name(v) {
                    "y" => return Err(Error::InvalidInput("e is defined on y-free polynomials".into())),
                    "c1" => {}
                    _ => only_c1 = false,
                }
            }
            if only_c1 {
                total += c;
            }
        }
        Ok(total)
    }

    /// `prod_{S even} (y - sum_{i in S} x_i)` over subsets of `{1..n/2}`,
    /// rewritten in `y` and the Chern classes.
    pub fn theta_pullback(&self, n: u32) -> Result<Poly> {
        if n % 2 != 0 || n < 4 || n > 10 {
            return Err(Error::InvalidInput(format!("theta needs even n in 4..=10, got {n}")));
        }
        let k = n / 2;
        if k > self.k {
            return Err(Error::InvalidInput(format!("theta_{n} needs rank at least {k}")));
        }
        let mut vars = vec![("y".to_string(), 2)];
        vars.extend((1..=k).map(|i| (format!("x{i}"), 2)));
        let roots_ring = RingSpec::new(vars, 0)?;
        let y = Poly::var_at(&roots_ring, 0);
        let mut factors = Vec::new();
        for mask in 0u32..(1 << k) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let mut f = y.clone();
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    f = f - Poly::var_at(&roots_ring, (i + 1) as usize);
                }
            }
            factors.push(f);
        }
        let product = balanced_product(&factors, &roots_ring);
        let roots: Vec<usize> = (1..=k as usize).collect();
        let target_e: Vec<Poly> = (1..=k).map(|i| self.c(i)).collect();
        let mut others = vec![None; roots_ring.nvars()];
        others[0] = Some(self.y());
        symmetric::reduce(&product, &roots, &self.ring, &target_e, &others)
    }
}

fn balanced_product(factors: &[Poly], ring: &Ring) -> Poly {
    match factors.len() {
        0 => Poly::one(ring),
        1 => factors[0].clone(),
        n => &balanced_product(&factors[..n / 2], ring) * &balanced_product(&factors[n / 2..], ring),
    }
}
