//! Characteristic classes of torus representations, quotient variables,
//! evaluation of Thom polynomials, and mod-2 reduction.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ring::{Family, LinForm, Mono, RingError, Substitution, TruncSeries, VarId};
use crate::scalar::{Gf2, Rat};
use crate::{F2Poly, QPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("Chern data known to degree {have}, polynomial has degree {need}")]
    InsufficientCutoff { have: u32, need: i64 },
    #[error("coefficient {0} has an even denominator and no mod-2 image")]
    EvenDenominator(String),
    #[error("polynomial is not symmetric in the given variables (monomial {0})")]
    NotSymmetric(String),
    #[error("polynomial has a term outside the c variables: {0}")]
    NotChernPolynomial(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Torus weights of a representation, as linear forms in the characters.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightList(Vec<LinForm<Rat>>);

impl WeightList {
    pub fn new(weights: Vec<LinForm<Rat>>) -> WeightList {
        WeightList(weights)
    }

    /// Weights given as integer coefficient vectors over `t_1, t_2, ...`.
    pub fn from_coeffs(rows: &[&[i64]]) -> WeightList {
        WeightList(
            rows.iter()
                .map(|r| {
                    LinForm::new(
                        r.iter()
                            .enumerate()
                            .map(|(i, &c)| (VarId::t(i as i32 + 1), Rat::from_integer(c.into()))),
                    )
                    .expect("nonzero weight")
                })
                .collect(),
        )
    }

    pub fn weights(&self) -> &[LinForm<Rat>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `prod (1 + w_i)` up to degree `cutoff`.
pub fn total_chern(w: &WeightList, cutoff: u32) -> TruncSeries<Rat> {
    let mut s = TruncSeries::one(cutoff);
    for f in w.weights() {
        s = s.mul(&TruncSeries::new(&QPoly::one() + &f.to_poly(), cutoff));
    }
    s
}

/// `prod w_i`.
pub fn euler_class(w: &WeightList) -> QPoly {
    w.weights()
        .iter()
        .fold(QPoly::one(), |acc, f| &acc * &f.to_poly())
}

/// `1 + c_1 + c_2 + ... = b / a` up to `cutoff`.
pub fn quotient_vars(
    a: &TruncSeries<Rat>,
    b: &TruncSeries<Rat>,
    cutoff: u32,
) -> Result<TruncSeries<Rat>, ClassError> {
    let q = b.with_cutoff(cutoff).div(&a.with_cutoff(cutoff))?;
    Ok(q)
}

/// Substitute `c_i` by the degree-`i` part of `cdata`.
pub fn evaluate_tp(tp: &QPoly, cdata: &TruncSeries<Rat>) -> Result<QPoly, ClassError> {
    let need = tp.max_degree().unwrap_or(0);
    if need > cdata.cutoff() as i64 {
        return Err(ClassError::InsufficientCutoff {
            have: cdata.cutoff(),
            need,
        });
    }
    let mut subst = Substitution::new();
    for v in tp.variables() {
        if v.family != Family::C {
            return Err(ClassError::NotChernPolynomial(v.to_string()));
        }
        subst.insert(v, cdata.component(v.index as u32).unwrap());
    }
    Ok(tp.substitute(&subst, None)?)
}

/// Write a polynomial in the quotient variables in terms of source classes
/// `a_1..a_m` and target classes `b_1..b_n`.
pub fn expand_in_ab(tp: &QPoly, m: u32, n: u32) -> Result<QPoly, ClassError> {
    let cutoff = tp.max_degree().unwrap_or(0).max(0) as u32;
    let a = TruncSeries::new(
        (1..=m as i32).fold(QPoly::one(), |acc, i| &acc + &QPoly::var(VarId::a(i))),
        cutoff,
    );
    let b = TruncSeries::new(
        (1..=n as i32).fold(QPoly::one(), |acc, i| &acc + &QPoly::var(VarId::b(i))),
        cutoff,
    );
    let c = quotient_vars(&a, &b, cutoff)?;
    evaluate_tp(tp, &c)
}

/// Reduce coefficients mod 2, renaming `c_i` to the Stiefel–Whitney class
/// `w_i`. Other families keep their names.
pub fn mod2_reduce(p: &QPoly) -> Result<F2Poly, ClassError> {
    let reduced = p.try_map_coeffs(|q| Gf2::reduce(q).ok_or_else(|| ClassError::EvenDenominator(q.to_string())))?;
    Ok(reduced.map_vars(|v| match v.family {
        Family::C => VarId::w(v.index),
        _ => v,
    }))
}

/// Elementary symmetric polynomials `e_0..e_m` of `vars`.
pub fn elementary(vars: &[VarId]) -> Vec<QPoly> {
    let mut e = vec![QPoly::one()];
    for &v in vars {
        let x = QPoly::var(v);
        let mut next = e.clone();
        next.push(QPoly::zero());
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_default() + &(&e[k - 1] * &x);
        }
        e = next;
    }
    e
}

/// Rewrite a polynomial symmetric in `vars` in terms of their elementary
/// symmetric functions, named `family_1, family_2, ...`.
///
/// Other variables are treated as coefficients. Uses the leading-term
/// algorithm: the lexicographically largest monomial `x^lambda` is removed
/// with `prod e_k^(lambda_k - lambda_{k+1})`.
pub fn to_elementary(p: &QPoly, vars: &[VarId], family: Family) -> Result<QPoly, ClassError> {
    let e = elementary(vars);
    let mut e_pow: BTreeMap<(usize, u32), QPoly> = BTreeMap::new();
    let mut out = QPoly::zero();
    let mut rest = p.clone();
    let split = |m: &Mono| -> (Vec<u32>, Mono) {
        let mut exps = Vec::with_capacity(vars.len());
        let mut other = m.clone();
        for &v in vars {
            let (k, r) = other.split(v);
            exps.push(k);
            other = r;
        }
        (exps, other)
    };
    while !rest.is_zero() {
        let (lead_exps, other, c) = rest
            .terms()
            .map(|(m, c)| {
                let (exps, other) = split(m);
                (exps, other, c.clone())
            })
            .max_by(|x, y| x.0.cmp(&y.0))
            .unwrap();
        if lead_exps.windows(2).any(|w| w[0] < w[1]) {
            let m = rest.terms().next().unwrap().0.to_string();
            return Err(ClassError::NotSymmetric(m));
        }
        let mut sub = QPoly::monomial(other.clone(), c.clone());
        let mut target = Mono::one();
        for k in 0..vars.len() {
            let mult = lead_exps[k] - lead_exps.get(k + 1).copied().unwrap_or(0);
            if mult == 0 {
                continue;
            }
            let pw = e_pow
                .entry((k + 1, mult))
                .or_insert_with(|| e[k + 1].pow(mult))
                .clone();
            sub = &sub * &pw;
            target = target.mul(&Mono::pow(
                VarId::new(family, k as i32 + 1).expect("indexed family"),
                mult,
            ));
        }
        rest -= &sub;
        out.add_term(target.mul(&other), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn t(i: i32) -> QPoly {
        QPoly::var(VarId::t(i))
    }
    fn c(i: i32) -> QPoly {
        QPoly::var(VarId::c(i))
    }

    #[test]
    fn total_chern_examples() {
        let w = WeightList::from_coeffs(&[&[1], &[2]]);
        assert_eq!(total_chern(&w, 2).body().to_string(), "1+3t1+2t1^2");
        let w = WeightList::from_coeffs(&[&[1, 0], &[0, 1], &[2, -1], &[-1, 2]]);
        assert_eq!(total_chern(&w, 1).body().to_string(), "1+2t1+2t2");
    }

    #[test]
    fn quotient_for_a4_germ() {
        let a = total_chern(&WeightList::from_coeffs(&[&[1], &[4], &[3], &[2]]), 4);
        let b = total_chern(&WeightList::from_coeffs(&[&[5], &[4], &[3], &[2]]), 4);
        let q = quotient_vars(&a, &b, 4).unwrap();
        assert_eq!(q.body().to_string(), "1+4t1-4t1^2+4t1^3-4t1^4");
        assert_eq!(quotient_vars(&a, &a, 4).unwrap(), TruncSeries::one(4));
    }

    #[test]
    fn euler_classes() {
        let w = WeightList::from_coeffs(&[&[1], &[4], &[3], &[2]]);
        assert_eq!(euler_class(&w), t(1).pow(4).scale(&int(24)));
    }

    #[test]
    fn evaluate_a1() {
        let a = total_chern(&WeightList::from_coeffs(&[&[1]]), 1);
        let b = total_chern(&WeightList::from_coeffs(&[&[2]]), 1);
        let q = quotient_vars(&a, &b, 1).unwrap();
        assert_eq!(evaluate_tp(&c(1), &q).unwrap(), t(1));
        assert!(matches!(evaluate_tp(&c(2), &q), Err(ClassError::InsufficientCutoff { .. })));
        assert_eq!(evaluate_tp(&c(1), &TruncSeries::one(3)).unwrap(), QPoly::zero());
    }

    #[test]
    fn expand_a2_in_ab() {
        let tp = &c(1).pow(2) + &c(2);
        let p = expand_in_ab(&tp, 2, 2).unwrap();
        assert_eq!(p.to_string(), "2a1^2-3a1b1-a2+b1^2+b2");
        assert_eq!(mod2_reduce(&p).unwrap().to_string(), "a1b1+a2+b1^2+b2");
        assert_eq!(expand_in_ab(&c(1), 2, 2).unwrap().to_string(), "-a1+b1");
    }

    #[test]
    fn mod2_of_gtp3() {
        let p = crate::symmetric::gtp(3, 0);
        assert_eq!(mod2_reduce(&p).unwrap().to_string(), "w1w3w5+w1w4^2+w2^2w5+w3^3");
        assert!(mod2_reduce(&c(1).scale(&crate::scalar::rat(1, 2))).is_err());
    }

    #[test]
    fn elementary_reduction() {
        let vars = [VarId::t(1), VarId::t(2)];
        let p = &t(1).pow(2) + &t(2).pow(2);
        let e = to_elementary(&p, &vars, Family::A).unwrap();
        assert_eq!(e.to_string(), "a1^2-2a2");
        let bad = t(1);
        assert!(to_elementary(&bad, &vars, Family::A).is_err());
    }
}
