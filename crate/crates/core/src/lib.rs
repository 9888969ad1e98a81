//! Exact computer algebra for characteristic classes of SO(n), Spin(n) and
//! Spin^c(n) bundles.

pub mod chern;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod properties;
pub mod ring;
pub mod spin;
pub mod steenrod;

pub use error::{Error, Result};
pub use ring::{Format, GPoly, Monomial, Poly, QPoly, Ring, RingSpec};
