//! Rewriting symmetric polynomials in elementary symmetric functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Poly, Ring};

/// Elementary symmetric polynomials `e_0, ..., e_k` in the variables at
/// `roots` (indices into `ring`).
pub fn elementary(ring: &Ring, roots: &[usize]) -> Vec<Poly> {
    let mut e = vec![Poly::one(ring)];
    for &i in roots {
        let x = Poly::var_at(ring, i);
        let mut next = e.clone();
        next.push(Poly::zero(ring));
        for j in 1..next.len() {
            next[j] = &next[j] + &(&e[j - 1] * &x);
        }
        e = next;
    }
    e
}

/// Rewrites `p`, symmetric in the variables at `roots`, as a polynomial in
/// the target ring where `e_i` of the roots becomes `target_e[i - 1]` and every
/// other source variable `v` becomes `others[v]`.
///
/// Uses the classical leading-term algorithm: subtract
/// `c * e_1^{l1-l2} e_2^{l2-l3} ... e_k^{lk}` for the lex-leading term
/// `c x^l` until nothing is left.
pub fn reduce(p: &Poly, roots: &[usize], target: &Ring, target_e: &[Poly], others: &[Option<Poly>]) -> Result<Poly> {
    let src = p.ring();
    let k = roots.len();
    assert_eq!(target_e.len(), k);
    assert!(roots.windows(2).all(|w| w[0] < w[1]), "roots must be listed in ring order");
    let e = elementary(src, roots);
    let mut e_pows: Vec<Vec<Poly>> = e[1..].iter().map(|x| vec![Poly::one(src), x.clone()]).collect();

    // Split by the non-root part of each monomial.
    let mut groups: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    let root_ring = src.clone();
    for (m, c) in p.terms() {
        let mut other = m.exps().to_vec();
        let mut rootpart = vec![0u32; src.nvars()];
        for &r in roots {
            rootpart[r] = other[r];
            other[r] = 0;
        }
        groups
            .entry(other)
            .or_insert_with(|| Poly::zero(&root_ring))
            .add_term(src.monomial(rootpart), c.clone());
    }

    let mut out = Poly::zero(target);
    for (other, mut rest) in groups {
        let mut prefactor = Poly::one(target);
        for (v, &x) in other.iter().enumerate() {
            if x > 0 {
                let img = others[v].as_ref().ok_or_else(|| {
                    Error::Invariant(format!("no image for variable `{}`", src.name(v)))
                })?;
                prefactor = &prefactor * &img.pow(x);
            }
        }
        let mut sym = Poly::zero(target);
        let mut guard = 0usize;
        loop {
            let next = rest.terms().next_back().map(|(m, c)| (m.clone(), c.clone()));
            let Some((lead, c)) = next else { break };
            guard += 1;
            if guard > 1_000_000 {
                return Err(Error::Invariant("symmetric reduction did not terminate".into()));
            }
            let lam: Vec<u32> = roots.iter().map(|&r| lead.exps()[r]).collect();
            if lam.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Invariant("polynomial is not symmetric in the roots".into()));
            }
            let mut exps_e = vec![0u32; k];
            for i in 0..k {
                exps_e[i] = lam[i] - lam.get(i + 1).copied().unwrap_or(0);
            }
            let mut prod = Poly::constant(src, c.clone());
            let mut img = Poly::constant(target, c);
            for (i, &x) in exps_e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let cache = &mut e_pows[i];
                while cache.len() <= x as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                prod = &prod * &cache[x as usize];
                img = &img * &target_e[i].pow(x);
            }
            rest = &rest - &prod;
            if rest.coeff(&lead) != BigInt::from(0) {
                return Err(Error::Invariant("leading term did not cancel".into()));
            }
            sym = sym + img;
        }
        out = out + &prefactor * &sym;
    }
    Ok(out)
}
