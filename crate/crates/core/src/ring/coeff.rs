use std::fmt::Display;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact coefficient domain for [`super::GPoly`].
pub trait Coefficient:
    Clone
    + Eq
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Canonical representative modulo `m` (0 means no reduction).
    fn reduce(self, m: u32) -> Self;
    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self>;
    fn to_ratio(&self) -> BigRational;
    /// True when rendering needs a leading minus sign.
    fn needs_minus(&self) -> bool;
    /// Whether polynomials with this coefficient type may live over modulus `m`.
    fn allows_modulus(m: u32) -> bool;
}

impl Coefficient for BigInt {
    fn reduce(self, m: u32) -> Self {
        if m == 0 {
            self
        } else {
            self.mod_floor(&BigInt::from(m))
        }
    }

    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (q, r) = num.div_rem(&den);
        r.is_zero().then_some(q)
    }

    fn to_ratio(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn needs_minus(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }

    fn allows_modulus(_: u32) -> bool {
        true
    }
}

impl Coefficient for BigRational {
    fn reduce(self, m: u32) -> Self {
        let _ = m;
        self
    }

    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }

    fn to_ratio(&self) -> BigRational {
        self.clone()
    }

    fn needs_minus(&self) -> bool {
        self.numer().sign() == num_bigint::Sign::Minus
    }

    fn allows_modulus(m: u32) -> bool {
        m == 0
    }
}
