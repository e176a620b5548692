use std::collections::BTreeMap;
use std::fmt;

use super::mono::Mono;
use super::poly::Poly;
use super::var::VarId;
use super::RingError;
use crate::scalar::{Coeff, Field};

/// A nonzero linear form `sum alpha_i v_i` in degree-one variables.
#[derive(Clone, PartialEq, Debug)]
pub struct LinForm<C: Coeff> {
    coeffs: Vec<(VarId, C)>,
}

impl<C: Coeff> LinForm<C> {
    /// Build from (variable, coefficient) pairs. Zero coefficients are
    /// dropped; repeated variables are summed.
    pub fn new<I: IntoIterator<Item = (VarId, C)>>(pairs: I) -> Result<Self, RingError> {
        let mut map: BTreeMap<VarId, C> = BTreeMap::new();
        for (v, c) in pairs {
            if v.degree() != 1 {
                return Err(RingError::NotLinear);
            }
            let e = map.entry(v).or_insert_with(C::zero);
            *e = e.clone() + c;
        }
        let coeffs: Vec<(VarId, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if coeffs.is_empty() {
            return Err(RingError::NotLinear);
        }
        Ok(LinForm { coeffs })
    }

    pub fn from_poly(p: &Poly<C>) -> Result<Self, RingError> {
        let mut pairs = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            match m.exps() {
                [(v, 1)] => pairs.push((*v, c.clone())),
                _ => return Err(RingError::NotLinear),
            }
        }
        LinForm::new(pairs)
    }

    pub fn var(v: VarId) -> Result<Self, RingError> {
        LinForm::new([(v, C::one())])
    }

    pub fn coeffs(&self) -> &[(VarId, C)] {
        &self.coeffs
    }

    pub fn coeff(&self, v: VarId) -> C {
        self.coeffs
            .iter()
            .find(|p| p.0 == v)
            .map(|p| p.1.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn to_poly(&self) -> Poly<C> {
        Poly::from_terms(self.coeffs.iter().map(|(v, c)| (Mono::var(*v), c.clone())))
    }

    /// The first variable in canonical variable order.
    pub fn lead_var(&self) -> VarId {
        self.coeffs[0].0
    }
}

impl<C: Field> LinForm<C> {
    /// Split as `scale * monic`, where the monic form has leading
    /// coefficient 1.
    pub fn normalize(&self) -> (C, LinForm<C>) {
        let lead = self.coeffs[0].1.clone();
        let inv = lead.inv();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(v, c)| (*v, c.clone() * inv.clone()))
            .collect();
        (lead, LinForm { coeffs })
    }
}

impl<C: Coeff> fmt::Display for LinForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Exact quotient `p / f`.
///
/// Long division in the leading variable of `f`; any remainder gives
/// `NotDivisible`.
pub fn divide_by_linform<C: Field>(p: &Poly<C>, f: &LinForm<C>) -> Result<Poly<C>, RingError> {
    let v = f.lead_var();
    let alpha_inv = f.coeff(v).inv();
    let rest: Vec<(VarId, C)> = f.coeffs().iter().filter(|q| q.0 != v).cloned().collect();

    // Group p by the power of v.
    let mut by_power: BTreeMap<u32, Poly<C>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (e, r) = m.split(v);
        by_power.entry(e).or_default().add_term(r, c.clone());
    }

    let mut quotient = Poly::zero();
    while let Some((&k, _)) = by_power.iter().next_back() {
        let lead = by_power.remove(&k).unwrap();
        if lead.is_zero() {
            continue;
        }
        if k == 0 {
            return Err(RingError::NotDivisible);
        }
        // lead v^k = (lead/alpha) v^(k-1) (alpha v + rest) - (lead/alpha) v^(k-1) rest
        let q = lead.scale(&alpha_inv);
        quotient += &q.mul_mono(&Mono::pow(v, k - 1));
        let slot = by_power.entry(k - 1).or_default();
        for (w, c) in &rest {
            *slot -= &q.mul_mono(&Mono::var(*w)).scale(c);
        }
    }
    Ok(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rat};

    type P = Poly<Rat>;

    fn x() -> P {
        P::var(VarId::z(1))
    }
    fn y() -> P {
        P::var(VarId::z(2))
    }

    #[test]
    fn difference_of_squares() {
        let p = &y().pow(2) - &x().pow(2);
        let f = LinForm::from_poly(&(&y() - &x())).unwrap();
        assert_eq!(divide_by_linform(&p, &f).unwrap(), &y() + &x());
    }

    #[test]
    fn remainder_detected() {
        let p = &y().pow(2) - &x().pow(2);
        let f = LinForm::from_poly(&(&y() - &x().scale(&int(2)))).unwrap();
        assert_eq!(divide_by_linform(&p, &f), Err(RingError::NotDivisible));
    }

    #[test]
    fn one_variable() {
        let a = P::var(VarId::a(1));
        let p = a.pow(4).scale(&int(24));
        let f = LinForm::new([(VarId::a(1), int(2))]).unwrap();
        assert_eq!(divide_by_linform(&p, &f).unwrap(), a.pow(3).scale(&int(12)));
    }

    #[test]
    fn rejects_nonlinear() {
        assert_eq!(LinForm::from_poly(&x().pow(2)), Err(RingError::NotLinear));
        assert_eq!(LinForm::<Rat>::new([(VarId::c(2), int(1))]), Err(RingError::NotLinear));
        assert_eq!(LinForm::<Rat>::new([]), Err(RingError::NotLinear));
    }

    #[test]
    fn normalize_scales_leading_coefficient() {
        let f = LinForm::new([(VarId::z(2), int(-1)), (VarId::z(1), int(2))]).unwrap();
        let (s, g) = f.normalize();
        assert_eq!(s, int(2));
        assert_eq!(g.to_string(), "z1-1/2z2");
    }
}
