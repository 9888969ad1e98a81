//! Plain text, LaTeX and JSON forms of polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Coefficient, GPoly, Monomial, Ring, RingSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidInput(format!("unknown format `{s}`"))),
        }
    }
}

pub(crate) fn monomial_plain(ring: &RingSpec, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in m.support() {
        let e = m.exps()[i];
        if e == 1 {
            parts.push(ring.name(i).to_string());
        } else {
            parts.push(format!("{}^{}", ring.name(i), e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn latex_name(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (stem, idx) = name.split_at(split);
    let stem = match stem {
        "theta" => "\\theta".to_string(),
        "sigma" => "\\sigma".to_string(),
        "ahat" => "\\hat{A}".to_string(),
        "alpha" => "\\alpha".to_string(),
        s => s.to_string(),
    };
    if idx.is_empty() {
        stem
    } else {
        format!("{stem}_{{{idx}}}")
    }
}

fn monomial_latex(ring: &RingSpec, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in m.support() {
        let e = m.exps()[i];
        let v = latex_name(ring.name(i));
        if e == 1 {
            parts.push(v);
        } else {
            parts.push(format!("{v}^{{{e}}}"));
        }
    }
    parts.join(" ")
}

fn ratio_latex(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

impl<C: Coefficient> GPoly<C> {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.render_plain(),
            Format::Latex => self.render_latex(),
            Format::Json => serde_json::to_string(&self.to_json()).expect("json encoding"),
        }
    }

    /// Terms in descending monomial order, joined with ` + ` / ` - `.
    fn render_plain(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.needs_minus();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_plain(&self.ring, m);
            if m.is_unit() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let r = c.to_ratio();
            let neg = r.is_negative();
            let abs = r.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_unit() {
                out.push_str(&ratio_latex(&abs));
            } else if abs.is_one() {
                out.push_str(&monomial_latex(&self.ring, m));
            } else {
                out.push_str(&ratio_latex(&abs));
                out.push(' ');
                out.push_str(&monomial_latex(&self.ring, m));
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            ring: RingJson {
                vars: self.ring.vars().iter().map(|v| (v.name.clone(), v.degree)).collect(),
                modulus: self.ring.modulus(),
            },
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson { coeff: c.to_string(), exps: m.exps().to_vec() })
                .collect(),
        }
    }

    /// Decodes the JSON form, validating the ring and every term.
    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let ring = RingSpec::new(j.ring.vars.iter().map(|(n, d)| (n.clone(), *d)), j.ring.modulus)?;
        Self::from_json_in(&ring, j)
    }

    /// Decodes into an existing ring; the encoded ring must match it.
    pub fn from_json_in(ring: &Ring, j: &PolyJson) -> Result<Self> {
        let same = j.ring.modulus == ring.modulus()
            && j.ring.vars.len() == ring.nvars()
            && j.ring.vars.iter().zip(ring.vars()).all(|((n, d), v)| *n == v.name && *d == v.degree);
        if !same {
            return Err(Error::RingMismatch);
        }
        if !C::allows_modulus(ring.modulus()) {
            return Err(Error::InvalidInput("rational coefficients need modulus 0".into()));
        }
        let mut out = Self::zero(ring);
        for t in &j.terms {
            if t.exps.len() != ring.nvars() {
                return Err(Error::InvalidInput(format!(
                    "exponent vector has length {}, ring has {} variables",
                    t.exps.len(),
                    ring.nvars()
                )));
            }
            let mut degree: u32 = 0;
            for (e, v) in t.exps.iter().zip(ring.vars()) {
                degree = e
                    .checked_mul(v.degree)
                    .and_then(|x| degree.checked_add(x))
                    .ok_or_else(|| Error::InvalidInput("monomial degree overflows".into()))?;
            }
            let c = parse_coeff::<C>(&t.coeff)?;
            out.add_term(ring.monomial(t.exps.clone()), c);
        }
        Ok(out)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
        Self::from_json(&j)
    }
}

fn parse_coeff<C: Coefficient>(s: &str) -> Result<C> {
    let bad = || Error::InvalidInput(format!("bad coefficient `{s}`"));
    if s.len() > 400 {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    C::from_ratio(num, den).ok_or_else(bad)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub vars: Vec<(String, u32)>,
    #[serde(rename = "mod")]
    pub modulus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub ring: RingJson,
    pub terms: Vec<TermJson>,
}
