//! Coefficient domains.
//!
//! Polynomials and series are generic over [`Coeff`]; anything that needs
//! division (series inversion, division by linear forms) asks for [`Field`].
//! Three domains are provided: exact rationals ([`Rat`]), the two-element
//! field ([`Gf2`]) used for Stiefel–Whitney reductions, and `f64` for quick
//! numerical evaluation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Ring of coefficients for sparse polynomials.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Image of a small integer.
    fn from_i64(n: i64) -> Self;

    /// Whether the canonical printed form needs a leading minus sign.
    fn is_negative(&self) -> bool;

    /// Plain-text rendering of the magnitude (no sign).
    fn abs_string(&self) -> String;
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coeff + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Coeff for Rat {
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn abs_string(&self) -> String {
        self.abs().to_string()
    }
}

impl Field for Rat {}

impl Coeff for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn abs_string(&self) -> String {
        self.abs().to_string()
    }
}

impl Field for f64 {}

/// Build a rational from numerator and denominator.
///
/// Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Whether a rational is an integer.
pub fn is_integral(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Element of the field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Gf2 {
    /// Reduce a rational with odd denominator modulo 2.
    ///
    /// Returns `None` when the denominator is even.
    pub fn reduce(q: &Rat) -> Option<Gf2> {
        if q.denom().is_even() {
            return None;
        }
        Some(Gf2(q.numer().is_odd()))
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 && rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        self
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Gf2 {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Gf2 {
        Gf2(true)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Coeff for Gf2 {
    fn from_i64(n: i64) -> Self {
        Gf2(n.rem_euclid(2) == 1)
    }

    fn is_negative(&self) -> bool {
        false
    }

    fn abs_string(&self) -> String {
        self.to_string()
    }
}

impl Field for Gf2 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_is_canonical() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7), Rat::zero());
        assert_eq!(Rat::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn gf2_reduction() {
        assert_eq!(Gf2::reduce(&int(-3)), Some(Gf2(true)));
        assert_eq!(Gf2::reduce(&int(2)), Some(Gf2(false)));
        assert_eq!(Gf2::reduce(&rat(1, 3)), Some(Gf2(true)));
        assert_eq!(Gf2::reduce(&rat(1, 2)), None);
        assert_eq!(Gf2(true) + Gf2(true), Gf2(false));
    }
}
