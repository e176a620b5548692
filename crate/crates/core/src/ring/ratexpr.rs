use std::fmt;

use super::linform::{divide_by_linform, LinForm};
use super::poly::Poly;
use super::RingError;
use crate::scalar::Field;

/// A quotient `numer / (scale * prod f_i^{k_i})` whose denominator is a
/// product of monic linear forms.
#[derive(Clone, Debug, PartialEq)]
pub struct RatExpr<C: Field> {
    numer: Poly<C>,
    scale: C,
    denom: Vec<(LinForm<C>, u32)>,
}

impl<C: Field> RatExpr<C> {
    pub fn from_poly(p: Poly<C>) -> Self {
        RatExpr {
            numer: p,
            scale: C::one(),
            denom: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        RatExpr::from_poly(Poly::zero())
    }

    /// `numer / prod factors`.
    pub fn new(numer: Poly<C>, factors: &[LinForm<C>]) -> Self {
        let mut r = RatExpr::from_poly(numer);
        for f in factors {
            let (s, g) = f.normalize();
            r.scale = r.scale.clone() * s;
            bump(&mut r.denom, g, 1);
        }
        r
    }

    pub fn numer(&self) -> &Poly<C> {
        &self.numer
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Number of linear factors in the denominator, with multiplicity.
    pub fn denom_degree(&self) -> u32 {
        self.denom.iter().map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denom = self.denom.clone();
        for (f, k) in &other.denom {
            bump(&mut denom, f.clone(), *k);
        }
        RatExpr {
            numer: &self.numer * &other.numer,
            scale: self.scale.clone() * other.scale.clone(),
            denom,
        }
    }

    /// Sum over the least common multiple of the denominators.
    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut lcm = self.denom.clone();
        for (f, k) in &other.denom {
            match lcm.iter_mut().find(|p| &p.0 == f) {
                Some(p) => p.1 = p.1.max(*k),
                None => lcm.push((f.clone(), *k)),
            }
        }
        let lift = |r: &Self| -> Poly<C> {
            let mut p = r.numer.scale(&r.scale.inv());
            for (f, k) in &lcm {
                let k = *k;
                let have = r.denom.iter().find(|p| &p.0 == f).map_or(0, |p| p.1);
                if k > have {
                    p = &p * &f.to_poly().pow(k - have);
                }
            }
            p
        };
        RatExpr {
            numer: &lift(self) + &lift(other),
            scale: C::one(),
            denom: lcm,
        }
    }

    /// Cancel every denominator factor that divides the numerator.
    pub fn reduce(&self) -> Self {
        let mut numer = self.numer.clone();
        let mut denom = Vec::new();
        for (f, k) in &self.denom {
            let mut left = *k;
            while left > 0 {
                match divide_by_linform(&numer, f) {
                    Ok(q) => {
                        numer = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                denom.push((f.clone(), left));
            }
        }
        RatExpr {
            numer,
            scale: self.scale.clone(),
            denom,
        }
    }

    /// The polynomial this expression equals, if it is one.
    pub fn to_poly(&self) -> Result<Poly<C>, RingError> {
        let r = self.reduce();
        if r.numer.is_zero() {
            return Ok(Poly::zero());
        }
        if !r.denom.is_empty() {
            return Err(RingError::NotPolynomial);
        }
        Ok(r.numer.scale(&r.scale.inv()))
    }
}

fn bump<C: Field>(denom: &mut Vec<(LinForm<C>, u32)>, f: LinForm<C>, k: u32) {
    match denom.iter_mut().find(|p| p.0 == f) {
        Some(p) => p.1 += k,
        None => denom.push((f, k)),
    }
}

impl<C: Field> fmt::Display for RatExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numer)?;
        if self.denom.is_empty() && self.scale.is_one() {
            return Ok(());
        }
        write!(f, "/({}", self.scale.abs_string())?;
        for (g, k) in &self.denom {
            write!(f, "*({g})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarId;
    use crate::scalar::{int, Rat};

    type P = Poly<Rat>;

    fn z(i: i32) -> P {
        P::var(VarId::z(i))
    }

    fn lf(p: &P) -> LinForm<Rat> {
        LinForm::from_poly(p).unwrap()
    }

    #[test]
    fn partial_fractions_recombine() {
        // 1/(z1-z2) + 1/(z2-z1) = 0
        let a = RatExpr::new(P::one(), &[lf(&(&z(1) - &z(2)))]);
        let b = RatExpr::new(P::one(), &[lf(&(&z(2) - &z(1)))]);
        assert_eq!(a.add(&b).to_poly().unwrap(), P::zero());
    }

    #[test]
    fn telescoping_sum_is_polynomial() {
        // z1^2/(z1-z2) + z2^2/(z2-z1) = z1+z2
        let a = RatExpr::new(z(1).pow(2), &[lf(&(&z(1) - &z(2)))]);
        let b = RatExpr::new(z(2).pow(2), &[lf(&(&z(2) - &z(1)))]);
        assert_eq!(a.add(&b).to_poly().unwrap(), &z(1) + &z(2));
    }

    #[test]
    fn genuine_fraction() {
        let a = RatExpr::new(P::one(), &[lf(&z(1).scale(&int(2)))]);
        assert_eq!(a.to_poly(), Err(RingError::NotPolynomial));
        assert_eq!(a.denom_degree(), 1);
    }
}
