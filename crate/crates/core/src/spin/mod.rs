//! Stable spin classes `q_k`: the recurrence `phi`, the transition between
//! Pontryagin classes and `q`'s, torsion products and the `Spin^c(8)` identity.

mod torsion;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chern::UcModel;
use crate::error::{Error, Result};
use crate::ring::{Coefficient, GPoly, Poly, QPoly, Ring, RingSpec};

pub use torsion::{torsion_product, TorsionClass};

/// Quillen's function `h(n)`.
pub fn quillen_h(n: u32) -> u32 {
    assert!(n >= 1, "h is defined on positive integers");
    let l = (n - 1) / 8;
    let base = [0, 1, 2, 2, 3, 3, 3, 3][((n - 1) % 8) as usize];
    4 * l + base
}

/// `Z[P1, ..., Pk]` with `deg P_i = 4i`.
pub fn pontryagin_symbols(k: u32) -> Result<Ring> {
    RingSpec::new((1..=k).map(|i| (format!("P{i}"), 4 * i)), 0)
}

/// `psi(delta^r(u0))` as a polynomial in `P1, ..., Pk`. Needs `2^r <= k`.
pub fn phi(r: u32, k: u32) -> Result<Poly> {
    if r > 3 || (1u32 << r) > k {
        return Err(Error::InvalidInput(format!("phi({r}) needs rank at least {}", 1u32 << r.min(8))));
    }
    let model = UcModel::new(k)?;
    let seq = model.delta_sequence(r)?;
    if !seq.certified() {
        return Err(Error::Invariant("delta sequence failed its recurrence".into()));
    }
    let psi = &seq.steps[r as usize].psi;
    if psi.terms().any(|(m, _)| m.exps()[0] > 0) {
        return Err(Error::Invariant(format!("psi(delta^{r}) carries y")));
    }
    psi.embed(&pontryagin_symbols(k)?)
}

fn is_power_of_two(k: u32) -> bool {
    k.is_power_of_two()
}

/// Rows expressing each `p_k` in `q`'s and each `q_k` in `p`'s, for
/// `4k <= max_degree`.
#[derive(Clone, Debug)]
pub struct TransitionTable {
    max_degree: u32,
    p_ring: Ring,
    q_ring: Ring,
    p_in_q: Vec<Poly>,
    q_in_p: Vec<QPoly>,
    phis: Vec<Poly>,
}

impl TransitionTable {
    pub const DEFAULT_DEGREE: u32 = 16;
    pub const MAX_DEGREE: u32 = 32;

    pub fn new(max_degree: u32) -> Result<Self> {
        if max_degree < 4 || max_degree > Self::MAX_DEGREE {
            return Err(Error::DegreeBound { degree: max_degree, bound: Self::MAX_DEGREE });
        }
        let kmax = max_degree / 4;
        let p_ring = RingSpec::new((1..=kmax).map(|i| (format!("p{i}"), 4 * i)), 0)?;
        let q_ring = RingSpec::new((1..=kmax).map(|i| (format!("q{i}"), 4 * i)), 0)?;
        let q = |i: u32| Poly::var_at(&q_ring, (i - 1) as usize);
        let two = BigInt::from(2);

        let rank = kmax.max(2);
        let r_max = 31 - kmax.leading_zeros();
        let model = UcModel::new(rank)?;
        let seq = model.delta_sequence(r_max)?;
        let symbols = pontryagin_symbols(rank)?;
        let phis = seq.steps.iter().map(|s| s.psi.embed(&symbols)).collect::<Result<Vec<_>>>()?;

        let mut p_in_q: Vec<Poly> = Vec::new();
        for k in 1..=kmax {
            let row = if k == 1 {
                q(1).scale(&two)
            } else if !is_power_of_two(k) {
                q(k)
            } else {
                let r = k.trailing_zeros();
                let phi = &phis[r as usize];
                let pk = Poly::var_at(&symbols, (k - 1) as usize);
                if phi.coeff(pk.terms().next().expect("variable").0) != BigInt::from(1) {
                    return Err(Error::Invariant(format!("phi({r}) does not contain P{k} once")));
                }
                let rest = phi - &pk;
                let images: Vec<Poly> = (1..=rank)
                    .map(|j| if j < k { p_in_q[(j - 1) as usize].clone() } else { Poly::zero(&q_ring) })
                    .collect();
                let rest_q = rest.map_into(&q_ring, &images)?;
                q(k).scale(&two) + q(k / 2).pow(2) - rest_q
            };
            p_in_q.push(row);
        }

        let half = BigRational::new(BigInt::from(1), two.clone());
        let mut q_in_p: Vec<QPoly> = Vec::new();
        for k in 1..=kmax {
            let pk = QPoly::var_at(&p_ring, (k - 1) as usize);
            let row = if !is_power_of_two(k) {
                pk
            } else {
                let lower = p_in_q[(k - 1) as usize].to_rational() - q(k).to_rational().scale(&BigRational::from_integer(two.clone()));
                let images: Vec<QPoly> = (1..=kmax)
                    .map(|j| if j < k { q_in_p[(j - 1) as usize].clone() } else { QPoly::zero(&p_ring) })
                    .collect();
                (pk - lower.map_into(&p_ring, &images)?).scale(&half)
            };
            q_in_p.push(row);
        }
        Ok(TransitionTable { max_degree, p_ring, q_ring, p_in_q, q_in_p, phis })
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// `Z[p1, ..., p_kmax]`.
    pub fn p_ring(&self) -> &Ring {
        &self.p_ring
    }

    /// `Z[q1, ..., q_kmax]`.
    pub fn q_ring(&self) -> &Ring {
        &self.q_ring
    }

    /// `p_k` in terms of `q`'s.
    pub fn p_row(&self, k: u32) -> Option<&Poly> {
        self.p_in_q.get((k as usize).checked_sub(1)?)
    }

    /// `q_k` in terms of `p`'s.
    pub fn q_row(&self, k: u32) -> Option<&QPoly> {
        self.q_in_p.get((k as usize).checked_sub(1)?)
    }

    /// `phi(0), phi(1), ...` used to build the rows, over `P1, ..., P_rank`.
    pub fn phis(&self) -> &[Poly] {
        &self.phis
    }

    fn into_ring<T: Coefficient>(&self, u: &GPoly<T>, target: &Ring, prefix: char) -> Result<GPoly<T>> {
        u.embed(target).map_err(|e| match e {
            Error::UnknownVariable(name) => match name.strip_prefix(prefix).and_then(|s| s.parse::<u32>().ok()) {
                Some(i) => Error::DegreeBound { degree: 4 * i, bound: self.max_degree },
                None => Error::UnknownVariable(name),
            },
            other => other,
        })
    }

    /// Rewrites a polynomial in `p`'s as an integer polynomial in `q`'s.
    pub fn p_to_q(&self, u: &Poly) -> Result<Poly> {
        if u.ring().modulus() != 0 {
            return Err(Error::InvalidInput("transition needs integer coefficients".into()));
        }
        self.into_ring(u, &self.p_ring, 'p')?.map_into(&self.q_ring, &self.p_in_q)
    }

    /// Rewrites a polynomial in `q`'s in terms of `p`'s over the rationals.
    pub fn q_to_p(&self, u: &Poly) -> Result<QPoly> {
        self.q_to_p_rational(&u.to_rational())
    }

    pub fn q_to_p_rational(&self, u: &QPoly) -> Result<QPoly> {
        self.into_ring(u, &self.q_ring, 'q')?.map_into(&self.p_ring, &self.q_in_p)
    }

    /// `p_to_q` for rational input.
    pub fn p_to_q_rational(&self, u: &QPoly) -> Result<QPoly> {
        let images: Vec<QPoly> = self.p_in_q.iter().map(Poly::to_rational).collect();
        self.into_ring(u, &self.p_ring, 'p')?.map_into(&self.q_ring, &images)
    }
}

/// The relation polynomial `a8` in `q0, q1, q2, p3, e8`.
pub const A8: &str = "e8^2 - 2e8*q2 - q0^2*p3 + 2e8*q0^2*q1";

/// Residues of the `Spin^c(8)` relation in `Z[y, c1, ..., c4]`.
#[derive(Clone, Debug)]
pub struct Spin8Report {
    pub theta: Poly,
    pub a8: Poly,
    /// `4 theta_8 - q2^2 - a8`.
    pub relation: Poly,
    /// `4 (-1)^{h(8)} theta_8 + q2^2 - a8`.
    pub signed_relation: Poly,
}

impl Spin8Report {
    pub fn relation_holds(&self) -> bool {
        self.relation.is_zero()
    }

    pub fn signed_relation_holds(&self) -> bool {
        self.signed_relation.is_zero()
    }
}

/// `Z[q0, q1, q2, p3, e8]`.
pub fn spin8_ring() -> Result<Ring> {
    RingSpec::new([("q0", 2), ("q1", 4), ("q2", 8), ("p3", 12), ("e8", 8)], 0)
}

/// Pulls `a8` and `theta_8` back to `Z[y, c1, ..., c4]` and returns both
/// forms of the relation. `theta` and `a8` override the computed product and
/// the built-in relation polynomial.
pub fn spin8_check(theta: Option<&str>, a8: Option<&str>) -> Result<Spin8Report> {
    let m = UcModel::new(4)?;
    let seq = m.delta_sequence(2)?;
    let theta = match theta {
        Some(t) => m.parse(t)?,
        None => m.theta_pullback(8)?,
    };
    let src = spin8_ring()?;
    let a8_src = Poly::parse(&src, a8.unwrap_or(A8))?;
    let images = [seq.value(0).clone(), seq.value(1).clone(), seq.value(2).clone(), m.expand_p(3), m.c(4)];
    let a8 = a8_src.map_into(m.ring(), &images)?;
    let q2sq = seq.value(2).pow(2);
    let four = BigInt::from(4);
    let sign = if quillen_h(8) % 2 == 0 { four.clone() } else { -four.clone() };
    let relation = &(&theta.scale(&four) - &q2sq) - &a8;
    let signed_relation = &(theta.scale(&sign) + q2sq) - &a8;
    Ok(Spin8Report { theta, a8, relation, signed_relation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quillen_table() {
        let got: Vec<u32> = (1..=16).map(quillen_h).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7]);
    }

    #[test]
    fn low_phis() {
        let s = pontryagin_symbols(4).unwrap();
        assert_eq!(phi(0, 4).unwrap(), Poly::parse(&s, "P1").unwrap());
        assert_eq!(phi(1, 4).unwrap(), Poly::parse(&s, "P2").unwrap());
        assert_eq!(phi(2, 4).unwrap(), Poly::parse(&s, "P4 + P1*P3").unwrap());
        assert!(phi(2, 3).is_err());
    }

    #[test]
    fn default_rows() {
        let t = TransitionTable::new(16).unwrap();
        let q = |s: &str| Poly::parse(t.q_ring(), s).unwrap();
        assert_eq!(t.p_row(1).unwrap(), &q("2q1"));
        assert_eq!(t.p_row(2).unwrap(), &q("2q2 + q1^2"));
        assert_eq!(t.p_row(3).unwrap(), &q("q3"));
        assert_eq!(t.p_row(4).unwrap(), &q("2q4 + q2^2 - 2q1*q3"));
        assert_eq!(t.q_row(2).unwrap(), &QPoly::parse(t.p_ring(), "1/2 p2 - 1/8 p1^2").unwrap());
    }

    #[test]
    fn index_beyond_bound() {
        let t = TransitionTable::new(16).unwrap();
        let r = RingSpec::new([("p5", 20)], 0).unwrap();
        let e = t.p_to_q(&Poly::parse(&r, "p5").unwrap()).unwrap_err();
        assert!(matches!(e, Error::DegreeBound { degree: 20, bound: 16 }));
    }
}
