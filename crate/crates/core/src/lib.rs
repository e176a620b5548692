//! Exact computer algebra for Thom polynomials and Thom series.

pub mod classes;
pub mod fixtures;
pub mod interpolation;
pub mod linalg;
pub mod parse;
pub mod residue;
pub mod ring;
pub mod scalar;
pub mod symmetric;
pub mod thom_series;

pub use ring::{Family, LinForm, Mono, Poly, TruncSeries, VarId};
pub use scalar::{Gf2, Rat};

/// Polynomials with exact rational coefficients.
pub type QPoly = Poly<Rat>;
/// Polynomials over the two-element field.
pub type F2Poly = Poly<Gf2>;
/// Polynomials with floating-point coefficients.
pub type FPoly = Poly<f64>;
