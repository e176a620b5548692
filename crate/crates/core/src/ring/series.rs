use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::poly::Poly;
use super::RingError;
use crate::scalar::Coeff;

/// A graded power series known up to total degree `cutoff`.
///
/// Terms above the cutoff are unknown, not zero. Binary operations use the
/// smaller of the two cutoffs.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Coeff> {
    body: Poly<C>,
    cutoff: u32,
}

impl<C: Coeff> TruncSeries<C> {
    /// Truncates `body` at `cutoff`.
    pub fn new(body: Poly<C>, cutoff: u32) -> Self {
        TruncSeries {
            body: body.truncate(cutoff as i64),
            cutoff,
        }
    }

    pub fn one(cutoff: u32) -> Self {
        TruncSeries::new(Poly::one(), cutoff)
    }

    pub fn body(&self) -> &Poly<C> {
        &self.body
    }

    pub fn into_body(self) -> Poly<C> {
        self.body
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Same series with a lower cutoff. Raising the cutoff is not allowed.
    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        TruncSeries::new(self.body.clone(), cutoff.min(self.cutoff))
    }

    /// Degree-`d` component, `None` above the cutoff.
    pub fn component(&self, d: u32) -> Option<Poly<C>> {
        (d <= self.cutoff).then(|| self.body.homogeneous_part(d as i64))
    }

    /// Multiplicative inverse; the degree-0 part must be exactly 1 and no
    /// negative degrees may occur.
    pub fn invert(&self) -> Result<Self, RingError> {
        let parts = self.body.by_degree();
        if parts.get(&0) != Some(&Poly::one()) || parts.keys().any(|&d| d < 0) {
            return Err(RingError::NonUnitConstantTerm);
        }
        // inv_d = -sum_{k=1..d} s_k inv_{d-k}
        let n = self.cutoff as usize;
        let mut inv: Vec<Poly<C>> = Vec::with_capacity(n + 1);
        inv.push(Poly::one());
        for d in 1..=n {
            let mut acc = Poly::zero();
            for k in 1..=d {
                if let Some(sk) = parts.get(&(k as i64)) {
                    acc -= &(sk * &inv[d - k]);
                }
            }
            inv.push(acc);
        }
        let mut body = Poly::zero();
        for p in &inv {
            body += p;
        }
        Ok(TruncSeries { body, cutoff: self.cutoff })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        TruncSeries {
            body: self.body.mul_truncated(&other.body, cutoff as i64),
            cutoff,
        }
    }

    /// `self / other`, with `other` a unit.
    pub fn div(&self, other: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&other.invert()?))
    }
}

impl<C: Coeff> Add for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        TruncSeries::new(&self.body + &rhs.body, self.cutoff.min(rhs.cutoff))
    }
}

impl<C: Coeff> Sub for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        TruncSeries::new(&self.body - &rhs.body, self.cutoff.min(rhs.cutoff))
    }
}

impl<C: Coeff> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        TruncSeries::mul(self, rhs)
    }
}

impl<C: Coeff> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+O({})", self.body, self.cutoff + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarId;
    use crate::scalar::Rat;

    type S = TruncSeries<Rat>;

    fn a(i: i32) -> Poly<Rat> {
        Poly::var(VarId::a(i))
    }

    #[test]
    fn geometric_series() {
        let s = S::new(&Poly::one() + &a(1), 4);
        let inv = s.invert().unwrap();
        assert_eq!(inv.body().to_string(), "1-a1+a1^2-a1^3+a1^4");
    }

    #[test]
    fn inverse_of_one() {
        assert_eq!(S::one(3).invert().unwrap(), S::one(3));
    }

    #[test]
    fn two_term_inverse() {
        let s = S::new(&(&Poly::one() + &a(1)) + &a(2), 2);
        let inv = s.invert().unwrap();
        let expected = &(&(&Poly::one() - &a(1)) + &a(1).pow(2)) - &a(2);
        assert_eq!(inv.body(), &expected);
        assert_eq!(s.mul(&inv), S::one(2));
    }

    #[test]
    fn non_unit() {
        let s = S::new(&Poly::int(2) + &a(1), 3);
        assert_eq!(s.invert(), Err(RingError::NonUnitConstantTerm));
        assert_eq!(S::new(a(1), 3).invert(), Err(RingError::NonUnitConstantTerm));
    }

    #[test]
    fn mixed_cutoffs_take_minimum() {
        let s = S::new(&Poly::one() + &a(1), 5);
        let t = S::new(&Poly::one() + &a(1), 2);
        let p = &s * &t;
        assert_eq!(p.cutoff(), 2);
        assert_eq!(p.body().max_degree(), Some(2));
    }
}
