//! Text parser for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | name | '(' poly ')'
//! name   := [a-zA-Z]+[0-9]*
//! ```
//!
//! The exponent after `^` must be a bare integer, so `w2^(3)` is rejected.

use num_bigint::BigInt;

use super::{Coefficient, GPoly, Ring};
use crate::error::{Error, Result};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 4096;
/// Largest graded degree of any intermediate value.
const MAX_DEGREE: u32 = 4096;
const MAX_NESTING: usize = 64;
const MAX_TERMS: usize = 5_000;
const MAX_WORK: usize = 2_000_000;

impl<C: Coefficient> GPoly<C> {
    /// Parses `text` as an element of `ring`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        if !C::allows_modulus(ring.modulus()) {
            return Err(Error::InvalidInput("rational coefficients need modulus 0".into()));
        }
        let mut p = Parser { ring, src: text.as_bytes(), pos: 0, depth: 0 };
        p.skip_ws();
        if p.pos == p.src.len() {
            return Err(Error::syntax(0, "empty expression"));
        }
        let out = p.poly()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::syntax(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly<C: Coefficient>(&mut self) -> Result<GPoly<C>> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(Error::syntax(self.pos, "nesting too deep"));
        }
        let mut acc = GPoly::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'('
    }

    fn term<C: Coefficient>(&mut self) -> Result<GPoly<C>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.bounded_mul(&acc, &f)?;
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    acc = self.bounded_mul(&acc, &f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn bounded_mul<C: Coefficient>(&self, a: &GPoly<C>, b: &GPoly<C>) -> Result<GPoly<C>> {
        let d = a.max_degree().unwrap_or(0) + b.max_degree().unwrap_or(0);
        if d > MAX_DEGREE {
            return Err(Error::syntax(self.pos, format!("degree exceeds {MAX_DEGREE}")));
        }
        if a.len().saturating_mul(b.len()) > MAX_WORK {
            return Err(Error::syntax(self.pos, "expression too large"));
        }
        let out = a * b;
        if out.len() > MAX_TERMS {
            return Err(Error::syntax(self.pos, "expression too large"));
        }
        Ok(out)
    }

    fn factor<C: Coefficient>(&mut self) -> Result<GPoly<C>> {
        self.skip_ws();
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        if self.peek().map_or(true, |c| !c.is_ascii_digit()) {
            return Err(Error::syntax(self.pos, "exponent must be a non-negative integer"));
        }
        let e = self.integer()?;
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(Error::syntax(at, "exponent too large")),
        };
        let d = base.max_degree().unwrap_or(0);
        if d.checked_mul(e).map_or(true, |x| x > MAX_DEGREE) {
            return Err(Error::syntax(start, format!("degree exceeds {MAX_DEGREE}")));
        }
        let mut acc = GPoly::one(self.ring);
        let mut sq = base;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.bounded_mul(&acc, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.bounded_mul(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    fn atom<C: Coefficient>(&mut self) -> Result<GPoly<C>> {
        match self.peek() {
            None => Err(Error::syntax(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(Error::syntax(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if self.peek().map_or(true, |c| !c.is_ascii_digit()) {
                        return Err(Error::syntax(self.pos, "expected denominator"));
                    }
                    let den = self.integer()?;
                    let c = C::from_ratio(num, den)
                        .ok_or_else(|| Error::syntax(at, "coefficient is not representable in this ring"))?;
                    Ok(GPoly::constant(self.ring, c))
                } else {
                    let c = C::from_ratio(num, BigInt::from(1)).expect("unit denominator");
                    Ok(GPoly::constant(self.ring, c))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[at..self.pos]).expect("ascii");
                GPoly::var(self.ring, name)
            }
            Some(c) => Err(Error::syntax(self.pos, format!("unexpected `{}`", c as char))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let at = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos - at > 200 {
            return Err(Error::syntax(at, "integer literal too long"));
        }
        std::str::from_utf8(&self.src[at..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::syntax(at, "expected integer"))
    }
}
