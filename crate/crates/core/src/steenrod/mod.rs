//! Mod 2 cohomology of `B_SO(n)`: Steenrod squares and derived operators.
//!
//! The ring is `Z/2[w2, ..., wn]` with `deg w_i = i`. Squares on generators
//! follow the Wu formula
//!
//! ```text
//! Sq^i(w_j) = sum_{t=0}^{i} C(j-i+t-1, t) w_{i-t} w_{j+t}     (i < j)
//! ```
//!
//! with `w0 = 1`, `w1 = 0` and `w_m = 0` for `m > n`, and extend to
//! products by the Cartan rule.

mod gamma;
mod integral;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Poly, Ring, RingSpec};

pub use gamma::{DerivedStep, DerivedW2, Sq1Matrix, StepSource, SumLaw};
pub use integral::FFree;

/// Default bound on the degrees handled by the linear algebra.
pub const DEFAULT_DEGREE_BOUND: u32 = 34;

/// `C(n, k) mod 2` by Lucas' theorem.
pub fn binom_mod2(n: u32, k: u32) -> bool {
    k & !n == 0
}

/// Model of `H*(B_SO(n); Z/2)`.
pub struct BsoModel {
    n: u32,
    ring: Ring,
    degree_bound: u32,
    sq_cache: Mutex<HashMap<(u32, Monomial), Poly>>,
    sq1_cache: Mutex<HashMap<u32, Arc<Sq1Matrix>>>,
}

impl std::fmt::Debug for BsoModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BsoModel").field("n", &self.n).field("degree_bound", &self.degree_bound).finish()
    }
}

impl BsoModel {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_degree_bound(n, DEFAULT_DEGREE_BOUND)
    }

    pub fn with_degree_bound(n: u32, degree_bound: u32) -> Result<Self> {
        if !(7..=64).contains(&n) {
            return Err(Error::InvalidInput(format!("n = {n} outside 7..=64")));
        }
        if degree_bound > 96 {
            return Err(Error::InvalidInput(format!("degree bound {degree_bound} above 96")));
        }
        let ring = RingSpec::new((2..=n).map(|i| (format!("w{i}"), i)), 2)?;
        Ok(BsoModel {
            n,
            ring,
            degree_bound,
            sq_cache: Mutex::new(HashMap::new()),
            sq1_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// `w_i` as a polynomial: 1 for `i = 0`, zero for `i = 1` or `i > n`.
    pub fn w(&self, i: u32) -> Poly {
        match i {
            0 => Poly::one(&self.ring),
            1 => Poly::zero(&self.ring),
            i if i > self.n => Poly::zero(&self.ring),
            i => Poly::var_at(&self.ring, (i - 2) as usize),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Poly::parse(&self.ring, text)
    }

    /// Parses a polynomial written in `w2, w3, ...` with any indices, setting
    /// `w_m = 0` for `m > n`.
    pub fn parse_truncated(&self, text: &str) -> Result<Poly> {
        let top = text_max_index(text).max(self.n);
        let big = RingSpec::new((2..=top).map(|i| (format!("w{i}"), i)), 2)?;
        let p = Poly::parse(&big, text)?;
        self.truncate(&p)
    }

    /// Image of a polynomial over `Z/2[w2..wN]` under `w_m -> 0` for `m > n`.
    pub fn truncate(&self, p: &Poly) -> Result<Poly> {
        let src = p.ring();
        let images = (0..src.nvars())
            .map(|i| {
                let name = src.name(i);
                let idx: u32 = name
                    .strip_prefix('w')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                if src.degree_of_var(i) != idx {
                    return Err(Error::DegreeMismatch { var: name.to_string(), expected: idx });
                }
                Ok(self.w(idx))
            })
            .collect::<Result<Vec<_>>>()?;
        p.map_into(&self.ring, &images)
    }

    fn check(&self, u: &Poly) -> Result<()> {
        if u.same_ring(&Poly::zero(&self.ring)) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `Sq^i(w_j)` by the Wu formula.
    pub fn sq_generator(&self, i: u32, j: u32) -> Poly {
        if i == 0 {
            return self.w(j);
        }
        if i > j {
            return Poly::zero(&self.ring);
        }
        if i == j {
            return self.w(j).pow(2);
        }
        let mut out = Poly::zero(&self.ring);
        for t in 0..=i {
            if binom_mod2(j - i + t - 1, t) {
                out = out + &self.w(i - t) * &self.w(j + t);
            }
        }
        out
    }

    /// `Sq^i(u)`.
    pub fn sq(&self, i: u32, u: &Poly) -> Result<Poly> {
        self.check(u)?;
        let mut out = Poly::zero(&self.ring);
        for (m, _) in u.terms() {
            out = out + self.sq_monomial(i, m);
        }
        Ok(out)
    }

    fn sq_monomial(&self, i: u32, m: &Monomial) -> Poly {
        if i == 0 {
            return Poly::term(&self.ring, m.clone(), BigInt::one());
        }
        if i > m.degree() {
            return Poly::zero(&self.ring);
        }
        if i == m.degree() {
            return Poly::term(&self.ring, m.mul(m), BigInt::one());
        }
        let key = (i, m.clone());
        if let Some(p) = self.sq_cache.lock().expect("sq cache").get(&key) {
            return p.clone();
        }
        // Peel off one generator and apply the Cartan rule.
        let v = m.support().next().expect("non-unit monomial");
        let j = self.ring.degree_of_var(v);
        let mut rest = m.exps().to_vec();
        rest[v] -= 1;
        let rest = self.ring.monomial(rest);
        let mut out = Poly::zero(&self.ring);
        for a in 0..=i.min(j) {
            let left = self.sq_generator(a, j);
            if left.is_zero() {
                continue;
            }
            let right = self.sq_monomial(i - a, &rest);
            if !right.is_zero() {
                out = out + &left * &right;
            }
        }
        self.sq_cache.lock().expect("sq cache").insert(key, out.clone());
        out
    }

    /// Applies `Sq^{i_1} Sq^{i_2} ... Sq^{i_k}` (rightmost first).
    pub fn sq_composite(&self, ops: &[u32], u: &Poly) -> Result<Poly> {
        let mut acc = u.clone();
        for &i in ops.iter().rev() {
            acc = self.sq(i, &acc)?;
        }
        Ok(acc)
    }

    /// `sigma(x_1), ..., sigma(x_k)` with `sigma(x_1) = w3` and
    /// `sigma(x_{j+1}) = Sq^{2^j} sigma(x_j)`.
    pub fn sigma(&self, k: u32) -> Result<Vec<Poly>> {
        if k == 0 || k > 8 {
            return Err(Error::InvalidInput(format!("k = {k} outside 1..=8")));
        }
        let mut out = vec![self.w(3)];
        for j in 1..k {
            let next = self.sq(1 << j, out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }
}

fn text_max_index(text: &str) -> u32 {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'w' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[i + 1..j].parse::<u32>() {
                best = best.max(v.min(128));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}
