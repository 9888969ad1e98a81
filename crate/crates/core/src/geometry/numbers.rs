//! Lists of characteristic numbers such as `q1^2[W]=4, q2[W]=-3`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Poly, Ring};

const MAX_ENTRIES: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharNumber {
    pub monomial: Monomial,
    pub value: BigInt,
}

/// Parses comma separated entries `monomial[W]=integer`. Every monomial must
/// have degree `degree` in `ring` and appear at most once.
pub fn parse_char_numbers(ring: &Ring, text: &str, degree: u32) -> Result<Vec<CharNumber>> {
    let mut out: Vec<CharNumber> = Vec::new();
    let mut offset = 0usize;
    for entry in text.split(',') {
        let here = offset;
        offset += entry.len() + 1;
        if entry.trim().is_empty() {
            continue;
        }
        if out.len() == MAX_ENTRIES {
            return Err(Error::syntax(here, "too many characteristic numbers"));
        }
        let (lhs, rhs) = entry.split_once('=').ok_or_else(|| Error::syntax(here, "expected `=`"))?;
        let lhs = lhs.trim();
        let mono_text = lhs
            .strip_suffix("[W]")
            .ok_or_else(|| Error::syntax(here, "expected `[W]` after the monomial"))?;
        let rhs = rhs.trim();
        let digits = rhs.strip_prefix('-').unwrap_or(rhs);
        if digits.is_empty() || digits.len() > 200 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::syntax(here, "expected an integer value"));
        }
        let value: BigInt = rhs.parse().map_err(|_| Error::syntax(here, "expected an integer value"))?;
        let p = Poly::parse(ring, mono_text)?;
        let mut terms = p.terms();
        let (mono, c) = match (terms.next(), terms.next()) {
            (Some((m, c)), None) => (m.clone(), c.clone()),
            _ => return Err(Error::InvalidInput(format!("`{mono_text}` is not a single monomial"))),
        };
        if c != BigInt::from(1) {
            return Err(Error::InvalidInput(format!("`{mono_text}` carries a coefficient")));
        }
        if mono.degree() != degree {
            return Err(Error::InvalidInput(format!("`{mono_text}` has degree {}, expected {degree}", mono.degree())));
        }
        if out.iter().any(|n| n.monomial == mono) {
            return Err(Error::InvalidInput(format!("`{mono_text}` given twice")));
        }
        out.push(CharNumber { monomial: mono, value });
    }
    Ok(out)
}
