use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::{Format, Poly};
use crate::steenrod::BsoModel;

/// The integral class `delta2(x)` for a mod-2 polynomial `x`. It has order 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionClass {
    x: Poly,
}

impl TorsionClass {
    pub fn bockstein_of(x: Poly) -> Result<Self> {
        if x.ring().modulus() != 2 {
            return Err(Error::InvalidInput("delta2 takes a mod 2 polynomial".into()));
        }
        Ok(TorsionClass { x })
    }

    pub fn x(&self) -> &Poly {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    /// `delta2(x) + delta2(x') = delta2(x + x')`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(TorsionClass { x: self.x.checked_add(&other.x)? })
    }

    /// `n delta2(x)`, which vanishes for even `n`.
    pub fn times(&self, n: i64) -> Self {
        if n % 2 == 0 {
            TorsionClass { x: Poly::zero(self.x.ring()) }
        } else {
            self.clone()
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => format!("delta2({})", self.x.render(Format::Plain)),
            Format::Latex => format!("\\delta_{{2}}\\left({}\\right)", self.x.render(Format::Latex)),
            Format::Json => self.to_json().to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "bockstein_of": self.x.to_json() })
    }
}

/// `Q_k` times `delta2(x)`: `delta2(x w_{2k}^2)` when `k` is not a power of 2,
/// otherwise `delta2(x w2^(log2 k + 1))`.
pub fn torsion_product(model: &BsoModel, k: u32, x: &Poly) -> Result<TorsionClass> {
    if k == 0 {
        return Err(Error::InvalidInput("class index k must be positive".into()));
    }
    if x.ring() != model.ring() {
        return Err(Error::RingMismatch);
    }
    let factor = if k.is_power_of_two() {
        let r = k.trailing_zeros() + 1;
        let derived = model.derived_w2(r)?;
        let step = &derived.steps[r as usize];
        if !step.certified() {
            return Err(Error::Invariant(format!("w2^({r}) failed its defining equation")));
        }
        step.value.clone()
    } else {
        model.w(2 * k).pow(2)
    };
    TorsionClass::bockstein_of(x * &factor)
}
