//! Exact signatures and the smoothability test for Wall pairs `(A, b)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted matrix size.
pub const MAX_RANK: usize = 64;
/// Largest accepted absolute value of an entry of `A` or `b`.
pub const MAX_ENTRY: i64 = 1 << 31;

const SMOOTH_MODULUS: i64 = 224;

/// A unimodular symmetric integer matrix with an integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WallPair {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub b: Vec<i64>,
}

impl WallPair {
    /// Decodes `{"A": [[...]], "b": [...]}` and validates it.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let pair: WallPair = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("Wall pair: {e}")))?;
        pair.validate()?;
        Ok(pair)
    }

    /// Decodes either one pair or an array of pairs.
    pub fn batch_from_json_str(text: &str) -> Result<Vec<Self>> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("Wall pair: {e}")))?;
        let pairs: Vec<WallPair> = if value.is_array() {
            serde_json::from_value(value)
        } else {
            serde_json::from_value(value).map(|p| vec![p])
        }
        .map_err(|e| Error::InvalidInput(format!("Wall pair: {e}")))?;
        for p in &pairs {
            p.validate()?;
        }
        Ok(pairs)
    }

    /// Checks shape, entry bounds, symmetry and `|det A| = 1`.
    pub fn validate(&self) -> Result<()> {
        let n = self.a.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidInput(format!("rank {n} outside 1..={MAX_RANK}")));
        }
        if self.a.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("A is not square".into()));
        }
        if self.b.len() != n {
            return Err(Error::InvalidInput(format!("b has length {}, expected {n}", self.b.len())));
        }
        if self.a.iter().flatten().chain(&self.b).any(|x| x.unsigned_abs() > MAX_ENTRY as u64) {
            return Err(Error::InvalidInput(format!("entries must lie within +-{MAX_ENTRY}")));
        }
        for i in 0..n {
            for j in 0..i {
                if self.a[i][j] != self.a[j][i] {
                    return Err(Error::InvalidInput(format!("A is not symmetric at ({i}, {j})")));
                }
            }
        }
        let det = determinant(&to_big(&self.a));
        if det.abs() != BigInt::one() {
            return Err(Error::InvalidInput(format!("A is not unimodular (det = {det})")));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `a_ii = b_i mod 2` for every `i`.
    pub fn wall_condition(&self) -> bool {
        (0..self.rank()).all(|i| (self.a[i][i] - self.b[i]).rem_euclid(2) == 0)
    }

    /// `q1^2 = b A^{-1} b^T`, reading `b_i` as the value of `q1` on the
    /// `i`-th basis sphere. This is the quantity preserved by
    /// `(A, b) -> (P^T A P, b P)` and equals `b A b^T` whenever `A^{-1} = A`.
    pub fn q1_squared(&self) -> Result<BigInt> {
        let inv = inverse(&self.a)?;
        let n = self.rank();
        let mut total = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                total += BigInt::from(self.b[i]) * &inv[i][j] * BigInt::from(self.b[j]);
            }
        }
        Ok(total)
    }

    /// `b A b^T`.
    pub fn b_a_bt(&self) -> BigInt {
        let n = self.rank();
        let mut total = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                total += BigInt::from(self.b[i]) * BigInt::from(self.a[i][j]) * BigInt::from(self.b[j]);
            }
        }
        total
    }
}

/// Inverse of a unimodular integer matrix by Gauss-Jordan over the rationals.
fn inverse(a: &[Vec<i64>]) -> Result<Vec<Vec<BigInt>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let d = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &d;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    m.into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::Invariant("inverse is not integral".into())) })
                .collect()
        })
        .collect()
}

fn to_big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Signature of a symmetric integer matrix by exact symmetric elimination.
/// A nonzero diagonal entry is a 1x1 pivot; when the remaining diagonal is
/// zero a 2x2 block `[[0, a], [a, 0]]` is split off, contributing nothing.
pub fn exact_signature(a: &[Vec<BigInt>]) -> Result<i64> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    for i in 0..n {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::InvalidInput("matrix is not symmetric".into()));
            }
        }
    }
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut signature = 0i64;
    while !m.is_empty() {
        let size = m.len();
        if let Some(p) = (0..size).find(|&i| !m[i][i].is_zero()) {
            let d = m[p][p].clone();
            signature += if d.is_positive() { 1 } else { -1 };
            let keep: Vec<usize> = (0..size).filter(|&i| i != p).collect();
            m = keep
                .iter()
                .map(|&i| keep.iter().map(|&j| &m[i][j] - &m[i][p] * &m[p][j] / &d).collect())
                .collect();
            continue;
        }
        let Some((p, q)) = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero())
        else {
            return Err(Error::Singular);
        };
        // zero diagonal, so [[0, c], [c, 0]] with inverse [[0, 1/c], [1/c, 0]]
        let c = m[p][q].clone();
        let keep: Vec<usize> = (0..size).filter(|&i| i != p && i != q).collect();
        m = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| &m[i][j] - (&m[i][p] * &m[q][j] + &m[i][q] * &m[p][j]) / &c)
                    .collect()
            })
            .collect();
    }
    Ok(signature)
}

/// Total spin class `1 + (b1 x1 + ... + bn xn) + c w` of a smoothable pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinClassReport {
    pub q0: i64,
    pub q1: Vec<i64>,
    #[serde(serialize_with = "ser_big")]
    pub q2: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothabilityReport {
    pub wall_ok: bool,
    pub signature: i64,
    #[serde(rename = "bAbT", serialize_with = "ser_big")]
    pub b_a_bt: BigInt,
    /// `b A^{-1} b^T`, the value of `q1^2` used by the tests below.
    #[serde(serialize_with = "ser_big")]
    pub q1_squared: BigInt,
    pub smoothable: Option<bool>,
    pub psc: Option<bool>,
    #[serde(serialize_with = "ser_ratio_opt")]
    pub mu: Option<BigRational>,
    #[serde(serialize_with = "ser_spin_class")]
    pub total_spin_class: Option<SpinClassReport>,
}

fn ser_big<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i128() {
        Some(v) => s.serialize_i128(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn ser_ratio_opt<S: Serializer>(x: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_str("undefined"),
    }
}

fn ser_spin_class<S: Serializer>(x: &Option<SpinClassReport>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(c) => c.serialize(s),
        None => s.serialize_str("undefined"),
    }
}

/// Classifies the 8-manifold of a Wall pair: smoothable iff
/// `sign A = q1^2 mod 224`, positive scalar curvature iff they are equal.
pub fn wall_classify(pair: &WallPair) -> Result<SmoothabilityReport> {
    pair.validate()?;
    let signature = exact_signature(&to_big(&pair.a))?;
    let b_a_bt = pair.b_a_bt();
    let q1_squared = pair.q1_squared()?;
    let wall_ok = pair.wall_condition();
    if !wall_ok {
        return Ok(SmoothabilityReport {
            wall_ok,
            signature,
            b_a_bt,
            q1_squared,
            smoothable: None,
            psc: None,
            mu: None,
            total_spin_class: None,
        });
    }
    let sig = BigInt::from(signature);
    let modulus = BigInt::from(SMOOTH_MODULUS);
    let diff = &q1_squared - &sig;
    let smoothable = diff.mod_floor(&modulus).is_zero();
    let psc = diff.is_zero();
    let mu_raw = BigRational::new(diff, modulus);
    let mu = &mu_raw - mu_raw.floor();
    let total_spin_class = if smoothable {
        let num = BigInt::from(3) * (BigInt::from(15) * &sig - &q1_squared);
        let (q2, r) = num.div_rem(&BigInt::from(14));
        if !r.is_zero() {
            return Err(Error::Invariant("14 does not divide 3(15 sign A - b A b^T)".into()));
        }
        Some(SpinClassReport { q0: 1, q1: pair.b.clone(), q2 })
    } else {
        None
    };
    Ok(SmoothabilityReport {
        wall_ok,
        signature,
        b_a_bt,
        q1_squared,
        smoothable: Some(smoothable),
        psc: Some(psc),
        mu: Some(mu),
        total_spin_class,
    })
}
