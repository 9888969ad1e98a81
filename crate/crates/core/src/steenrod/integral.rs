//! Integral lifts of mod 2 classes and the reduction to Chern classes.

use num_bigint::BigInt;
use num_traits::One;

use super::BsoModel;
use crate::error::{Error, Result};
use crate::ring::{Poly, Ring, RingSpec};

/// Free part of the integral representation, plus the monomials whose image
/// is 2-torsion.
#[derive(Clone, Debug)]
pub struct FFree {
    pub free: Poly,
    pub torsion: Poly,
}

impl FFree {
    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_zero()
    }
}

impl BsoModel {
    /// `Z[p1, ..., p_h, e_n]` with `h = floor((n-1)/2)`; `e_n` only for even `n`.
    pub fn pontryagin_ring(&self) -> Ring {
        let h = (self.n - 1) / 2;
        let mut vars: Vec<(String, u32)> = (1..=h).map(|r| (format!("p{r}"), 4 * r)).collect();
        if self.n % 2 == 0 {
            vars.push((format!("e{}", self.n), self.n));
        }
        RingSpec::new(vars, 0).expect("valid ring")
    }

    /// Monomial-wise lift: `w_{2r} -> p_r`, `w_n -> e_n^2` for even `n`.
    /// Monomials containing an odd-index generator go to the torsion part.
    pub fn f_free(&self, u: &Poly) -> Result<FFree> {
        self.check(u)?;
        let target = self.pontryagin_ring();
        let h = (self.n - 1) / 2;
        let mut free = Poly::zero(&target);
        let mut torsion = Poly::zero(&self.ring);
        for (m, _) in u.terms() {
            let odd = m.support().any(|v| self.ring.degree_of_var(v) % 2 == 1);
            if odd {
                torsion.add_term(m.clone(), BigInt::one());
                continue;
            }
            let mut exps = vec![0u32; target.nvars()];
            for v in m.support() {
                let i = self.ring.degree_of_var(v);
                let e = m.exps()[v];
                if i == self.n {
                    exps[h as usize] += 2 * e;
                } else {
                    exps[(i / 2 - 1) as usize] += e;
                }
            }
            free.add_term(target.monomial(exps), BigInt::one());
        }
        Ok(FFree { free, torsion })
    }

    /// `Z/2[c1, ..., c_{floor(n/2)}]` with `deg c_i = 2i`.
    pub fn chern_ring_mod2(&self) -> Ring {
        RingSpec::new((1..=self.n / 2).map(|i| (format!("c{i}"), 2 * i)), 2).expect("valid ring")
    }

    /// `w_{2i} -> c_i`, `w_odd -> 0`.
    pub fn real_reduction(&self, u: &Poly) -> Result<Poly> {
        self.check(u)?;
        if u.homogeneous_degree().is_none() {
            return Err(Error::InvalidInput("expected a homogeneous polynomial".into()));
        }
        let target = self.chern_ring_mod2();
        let images: Vec<Poly> = (2..=self.n)
            .map(|i| if i % 2 == 0 { Poly::var_at(&target, (i / 2 - 1) as usize) } else { Poly::zero(&target) })
            .collect();
        u.map_into(&target, &images)
    }
}
