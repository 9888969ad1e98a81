//! Seeded randomized property runs, shared by the acceptance suite and the
//! command line `selftest --prop`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chern::UcModel;
use crate::error::{Error, Result};
use crate::ring::{Poly, Ring, RingSpec};
use crate::steenrod::BsoModel;

pub const DEFAULT_CASES: usize = 200;

pub const PROPERTIES: [&str; 6] =
    ["ring_laws", "cartan_rule", "sq1_squared", "psi_multiplicative", "psi_square_mod2", "gamma_sum_law"];

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Description of the first failing case.
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Random homogeneous polynomial of degree `d` with up to `max_terms` terms.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Ring, d: u32, max_terms: usize) -> Poly {
    let basis = ring.basis(d);
    let mut p = Poly::zero(ring);
    if basis.is_empty() {
        return p;
    }
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        p.add_term(m, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    p
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_degree: u32) -> Poly {
    let mut p = Poly::zero(ring);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(0..=max_degree);
        p = p + random_homogeneous(rng, ring, d, 3);
    }
    p
}

fn seeded(seed: u64, name: &str) -> ChaCha8Rng {
    let salt = name.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100000001b3));
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

type Check = Box<dyn FnMut(&mut ChaCha8Rng) -> Result<Option<String>>>;

fn checker(name: &str) -> Result<Check> {
    let check: Check = match name {
        "ring_laws" => {
            let ring = RingSpec::new([("a", 2), ("b", 4), ("c", 6)], 0)?;
            Box::new(move |rng| {
                let x = random_poly(rng, &ring, 8);
                let y = random_poly(rng, &ring, 8);
                let z = random_poly(rng, &ring, 8);
                let one = Poly::one(&ring);
                let ok = &(&x * &y) * &z == &x * &(&y * &z)
                    && &x * &y == &y * &x
                    && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
                    && (&x + &(-&x)).is_zero()
                    && &x * &one == x
                    && &x + &y == &y + &x;
                Ok((!ok).then(|| format!("x = {x}, y = {y}, z = {z}")))
            })
        }
        "cartan_rule" => {
            let m = BsoModel::new(10)?;
            Box::new(move |rng| {
                let (d1, d2) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
                let u = random_homogeneous(rng, m.ring(), d1, 4);
                let v = random_homogeneous(rng, m.ring(), d2, 4);
                let i = rng.gen_range(0..=d1 + d2);
                let lhs = m.sq(i, &(&u * &v))?;
                let mut rhs = Poly::zero(m.ring());
                for j in 0..=i {
                    rhs = rhs + &m.sq(j, &u)? * &m.sq(i - j, &v)?;
                }
                Ok((lhs != rhs).then(|| format!("Sq^{i}(({u}) * ({v})): {lhs} vs {rhs}")))
            })
        }
        "sq1_squared" => {
            let m = BsoModel::new(12)?;
            Box::new(move |rng| {
                let d = rng.gen_range(2..=14);
                let u = random_homogeneous(rng, m.ring(), d, 5);
                let r = m.sq(1, &m.sq(1, &u)?)?;
                Ok((!r.is_zero()).then(|| format!("Sq^1 Sq^1({u}) = {r}")))
            })
        }
        "psi_multiplicative" => {
            let m = UcModel::new(4)?;
            Box::new(move |rng| {
                let (du, dv) = (2 * rng.gen_range(1..=3), 2 * rng.gen_range(1..=3));
                let u = random_homogeneous(rng, m.ring(), du, 4);
                let v = random_homogeneous(rng, m.ring(), dv, 4);
                let lhs = m.psi(&(&u * &v))?;
                let rhs = &m.psi(&u)? * &m.psi(&v)?;
                Ok((lhs != rhs).then(|| format!("u = {u}, v = {v}: psi(uv) - psi(u)psi(v) = {}", &lhs - &rhs)))
            })
        }
        "psi_square_mod2" => {
            let m = UcModel::new(4)?;
            Box::new(move |rng| {
                let d = 2 * rng.gen_range(1..=4);
                let u = random_homogeneous(rng, m.ring(), d, 5);
                let lhs = m.expand(&m.psi(&u)?)?.reduce_mod(2)?;
                let rhs = u.pow(2).reduce_mod(2)?;
                Ok((lhs != rhs).then(|| format!("u = {u}")))
            })
        }
        "gamma_sum_law" => {
            let m = BsoModel::new(12)?;
            Box::new(move |rng| {
                let d = 2 * rng.gen_range(1..=4);
                let u1 = random_homogeneous(rng, m.ring(), d, 3);
                let u2 = random_homogeneous(rng, m.ring(), d, 3);
                let law = m.gamma_sum_law(&u1, &u2)?;
                Ok((!law.in_kernel).then(|| format!("u1 = {u1}, u2 = {u2}: {}", law.difference)))
            })
        }
        other => return Err(Error::InvalidInput(format!("unknown property `{other}`"))),
    };
    Ok(check)
}

/// Runs one named property on `cases` random inputs drawn from `seed`.
pub fn run_property(name: &str, seed: u64, cases: usize) -> Result<PropertyOutcome> {
    let mut check = checker(name)?;
    let mut rng = seeded(seed, name);
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..cases {
        if let Some(msg) = check(&mut rng)? {
            failures += 1;
            first_failure.get_or_insert(msg);
        }
    }
    Ok(PropertyOutcome { name: name.to_string(), cases, failures, first_failure })
}

pub fn run_all(seed: u64, cases: usize) -> Result<Vec<PropertyOutcome>> {
    PROPERTIES.iter().map(|p| run_property(p, seed, cases)).collect()
}
