//! Genus polynomials, Rokhlin-type signature formulas, Eells-Kuiper
//! invariants and the Wall-pair classifier.

mod numbers;
mod wall;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{QPoly, Ring, RingSpec};
use crate::spin::TransitionTable;

pub use numbers::{parse_char_numbers, CharNumber};
pub use wall::{determinant, exact_signature, wall_classify, SmoothabilityReport, SpinClassReport, WallPair};

/// Highest genus index with tabulated coefficients.
pub const MAX_GENUS: u32 = 4;

const A_HAT: [&str; 4] = [
    "-1/24 p1",
    "1/5760 (-4p2 + 7p1^2)",
    "1/967680 (-16p3 + 44p2*p1 - 31p1^3)",
    "1/464486400 (-192p4 + 512p1*p3 + 208p2^2 - 904p1^2*p2 + 381p1^4)",
];

const L_GENUS: [&str; 4] = [
    "1/3 p1",
    "1/45 (7p2 - p1^2)",
    "1/945 (62p3 - 13p2*p1 + 2p1^3)",
    "1/14175 (381p4 - 71p1*p3 - 19p2^2 + 22p1^2*p2 - 3p1^4)",
];

const WU_LIFTS: [&str; 4] = ["q1", "q2", "q3 + q1*q2 + q1^3", "q4 + q1*q3 + q1^2*q2"];

const WU_SPIN: [&str; 4] = [
    "-1/2 p1",
    "1/8 (20p2 - 9p1^2)",
    "-1/16 (80p3 + 60p1*p2 - 17p1^3)",
    "1/128 (1856p4 - 528p2^2 + 1176p1^2*p2 - 277p1^4)",
];

/// Eells-Kuiper invariants as rational polynomials in `p`'s and `sigma`.
const EK_P: [&str; 3] = [
    "1/896 (p1^2 - 4sigma)",
    "1/190464 (4p1*p2 - 3p1^3 - 24sigma)",
    "1/11797954560 (12096p1*p3 + 5040p2^2 - 22680p1^2*p2 + 9639p1^4 - 181440sigma)",
];

/// The same invariants as commonly quoted in `q`'s. Only the first agrees
/// with the Pontryagin forms; see [`ek_q_form`] for the exact rewriting.
pub const EK_Q_QUOTED: [&str; 3] = [
    "1/224 (q1^2 - sigma)",
    "1/11904 (2q1*q2 - 2q1^3 - 3sigma)",
    "1/65024 (6q1*q3 + 5q2^2 - 40q1^2*q2 + 17q1^4 - 45sigma)",
];

/// Which characteristic classes a formula is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classes {
    P,
    Q,
}

impl std::str::FromStr for Classes {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Classes::P),
            "q" => Ok(Classes::Q),
            _ => Err(Error::InvalidInput(format!("unknown class set `{s}`"))),
        }
    }
}

fn check_m(m: u32) -> Result<()> {
    if (1..=MAX_GENUS).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("genus index m = {m} outside 1..=4")))
    }
}

/// `Z[p1..pm]` or `Z[q1..qm]`, optionally with an extra variable of degree `4m`.
pub fn class_ring(classes: Classes, m: u32, extra: Option<&str>) -> Result<Ring> {
    let stem = match classes {
        Classes::P => "p",
        Classes::Q => "q",
    };
    let mut vars: Vec<(String, u32)> = (1..=m).map(|i| (format!("{stem}{i}"), 4 * i)).collect();
    if let Some(name) = extra {
        vars.push((name.to_string(), 4 * m));
    }
    RingSpec::new(vars, 0)
}

fn table(texts: &[&str; 4], m: u32) -> Result<QPoly> {
    check_m(m)?;
    QPoly::parse(&class_ring(Classes::P, m, None)?, texts[(m - 1) as usize])
}

/// The A-hat genus `alpha_m` in `p1..pm`.
pub fn a_hat(m: u32) -> Result<QPoly> {
    table(&A_HAT, m)
}

/// The L-genus `tau_m` in `p1..pm`.
pub fn l_genus(m: u32) -> Result<QPoly> {
    table(&L_GENUS, m)
}

/// `c * p_m + rest` for a genus polynomial of degree `4m`.
fn split_top(g: &QPoly, m: u32) -> (BigRational, QPoly) {
    let mut exps = vec![0u32; m as usize];
    exps[(m - 1) as usize] = 1;
    let c = g.coeff_of(&exps);
    let rest = g.filter_terms(|mono, _| mono.exps() != exps.as_slice());
    (c, rest)
}

/// The signature in `q1..q_{m-1}` and `alpha_m`, obtained by eliminating
/// `p_m` between the two genera and rewriting the remaining `p`'s in `q`'s.
pub fn signature_in_q(m: u32) -> Result<QPoly> {
    let alpha = a_hat(m)?;
    let tau = l_genus(m)?;
    let (a, l) = split_top(&alpha, m);
    let (b, k) = split_top(&tau, m);
    if a.is_zero() || b.is_zero() {
        return Err(Error::Invariant("genus has no top Pontryagin term".into()));
    }
    let ratio = &b / &a;
    let src = class_ring(Classes::P, m, Some(&format!("alpha{m}")))?;
    let alpha_var = QPoly::var_at(&src, m as usize);
    let l = l.embed(&src)?;
    let k = k.embed(&src)?;
    let in_p = (alpha_var - l).scale(&ratio) + k;

    let table = TransitionTable::new(16)?;
    let target = class_ring(Classes::Q, m, Some(&format!("alpha{m}")))?;
    let mut images: Vec<QPoly> = (1..=m)
        .map(|j| table.p_row(j).expect("row within bound").to_rational().embed(&target))
        .collect::<Result<_>>()?;
    images.push(QPoly::var_at(&target, m as usize));
    in_p.map_into(&target, &images)
}

/// Congruence for the signature of a string manifold (`q1 = 0`) of
/// dimension `4m`: the signature is congruent to the returned polynomial
/// modulo the returned integer. Uses that `alpha_m` is an integer, even for
/// odd `m`.
pub fn string_congruence(m: u32) -> Result<(QPoly, BigInt)> {
    let sig = signature_in_q(m)?;
    let alpha_index = m as usize;
    let mut modulus = BigInt::zero();
    let rest = sig.filter_terms(|mono, c| {
        if mono.exps()[alpha_index] > 0 {
            modulus = c.numer().abs() / c.denom();
            false
        } else {
            mono.exps()[0] == 0
        }
    });
    if m % 2 == 1 {
        modulus *= 2;
    }
    Ok((rest, modulus))
}

/// The tabulated integral lift of the Wu class `v_{4k}` in `q`'s.
pub fn wu_lift(k: u32) -> Result<QPoly> {
    check_m(k)?;
    QPoly::parse(&class_ring(Classes::Q, k, None)?, WU_LIFTS[(k - 1) as usize])
}

/// The exponential Wu class `v_{4k}^{Spin}` in `p`'s.
pub fn wu_spin(k: u32) -> Result<QPoly> {
    table(&WU_SPIN, k)
}

/// `v_{4k}^{Spin}` rewritten in `q`'s, and whether it is integral and agrees
/// with the tabulated lift mod 2.
pub fn wu_consistency(k: u32) -> Result<(QPoly, bool)> {
    let table = TransitionTable::new(16)?;
    let ring = class_ring(Classes::Q, k, None)?;
    let v = table.p_to_q_rational(&wu_spin(k)?)?.embed(&ring)?;
    let diff = &v - &wu_lift(k)?;
    let even = diff.terms().all(|(_, c)| c.is_integer() && c.to_integer().is_even());
    Ok((v, even))
}

fn check_ek(k: u32) -> Result<()> {
    if (2..=4).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("Eells-Kuiper index k = {k} outside 2..=4")))
    }
}

/// The Eells-Kuiper invariant `mu_k` as a polynomial in `p`'s and `sigma`.
pub fn ek_p_form(k: u32) -> Result<QPoly> {
    check_ek(k)?;
    QPoly::parse(&class_ring(Classes::P, k, Some("sigma"))?, EK_P[(k - 2) as usize])
}

/// `mu_k` in `q`'s and `sigma`, by exact rewriting of [`ek_p_form`].
pub fn ek_q_form(k: u32) -> Result<QPoly> {
    let table = TransitionTable::new(16)?;
    let target = class_ring(Classes::Q, k, Some("sigma"))?;
    let mut images: Vec<QPoly> =
        (1..=k).map(|j| table.p_row(j).expect("row").to_rational().embed(&target)).collect::<Result<_>>()?;
    images.push(QPoly::var_at(&target, k as usize));
    ek_p_form(k)?.map_into(&target, &images)
}

/// The quoted `q`-form of `mu_k`.
pub fn ek_q_quoted(k: u32) -> Result<QPoly> {
    check_ek(k)?;
    QPoly::parse(&class_ring(Classes::Q, k, Some("sigma"))?, EK_Q_QUOTED[(k - 2) as usize])
}

/// `x mod 1` in `[0, 1)`.
pub fn frac_mod_one(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Evaluates `mu_k` from characteristic numbers and the signature of the
/// coboundary, reduced mod 1.
pub fn eells_kuiper(k: u32, classes: Classes, numbers: &[CharNumber], sigma: &BigInt) -> Result<BigRational> {
    let form = match classes {
        Classes::P => ek_p_form(k)?,
        Classes::Q => ek_q_form(k)?,
    };
    let ring = form.ring().clone();
    let sigma_index = k as usize;
    let mut total = BigRational::zero();
    for (mono, c) in form.terms() {
        let value = if mono.exps()[sigma_index] > 0 {
            BigRational::from_integer(sigma.clone())
        } else {
            let found = numbers.iter().find(|n| n.monomial.exps() == &mono.exps()[..sigma_index]).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "missing characteristic number {}[W]",
                    QPoly::term(&ring, mono.clone(), BigRational::one())
                ))
            })?;
            BigRational::from_integer(found.value.clone())
        };
        total += c * value;
    }
    Ok(frac_mod_one(&total))
}

/// Characteristic numbers for `mu_k` parsed against the ring of [`ek_p_form`]
/// or [`ek_q_form`].
pub fn ek_numbers(k: u32, classes: Classes, text: &str) -> Result<Vec<CharNumber>> {
    check_ek(k)?;
    parse_char_numbers(&class_ring(classes, k, None)?, text, 4 * k)
}
