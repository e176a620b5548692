use std::collections::BTreeMap;

use super::record::{Basis, FixtureRecord, Theory};
use super::FixtureError;
use crate::scalar::Rat;
use crate::symmetric::schur_expand;
use crate::QPoly;

/// All Schur coefficients are non-negative. Polynomials outside the Schur
/// span (or outside the width bound) fail.
pub fn schur_positive_check(tp: &QPoly, width: Option<usize>) -> bool {
    schur_expand(tp, width).is_ok_and(|e| e.is_nonnegative())
}

/// All Chern-monomial coefficients are non-negative.
pub fn monomial_positive_check(tp: &QPoly) -> bool {
    tp.terms().all(|(_, c)| c >= &Rat::default())
}

/// Schur coefficients of degree `d` all carry the sign `(-1)^(d - d0)`,
/// where `d0` is the lowest degree present.
pub fn ssm_sign_check(record: &FixtureRecord) -> Result<bool, FixtureError> {
    if record.theory != Theory::Ssm || record.basis != Basis::Schur {
        return Err(FixtureError::WrongBasis {
            id: record.id.clone(),
            expected: "SSM record in the Schur basis".into(),
        });
    }
    let e = record.to_schur()?;
    let mut by_degree: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
    for (p, c) in e.terms() {
        by_degree.entry(p.size()).or_default().push(c.clone());
    }
    let Some(&d0) = by_degree.keys().next() else {
        return Ok(true);
    };
    Ok(by_degree.iter().all(|(&d, cs)| {
        let positive = (d - d0) % 2 == 0;
        cs.iter().all(|c| if positive { c > &Rat::default() } else { c < &Rat::default() })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::FixtureStore;
    use crate::parse::parse_poly;

    #[test]
    fn schur_positivity() {
        let s = FixtureStore::embedded();
        assert!(schur_positive_check(&s.get("Tp.A5.l0").unwrap().to_chern_poly().unwrap(), None));
        assert!(schur_positive_check(&s.get("Tp.I24.l0").unwrap().to_chern_poly().unwrap(), None));
        assert!(!schur_positive_check(&parse_poly("c1^2-3c2").unwrap(), None));
    }

    #[test]
    fn monomial_positivity() {
        let s = FixtureStore::embedded();
        assert!(monomial_positive_check(&s.get("Tp.A5.l0").unwrap().to_chern_poly().unwrap()));
        assert!(monomial_positive_check(&s.get("Tp.A4.l0").unwrap().to_chern_poly().unwrap()));
        assert!(!monomial_positive_check(&s.get("Tp.I24.l0").unwrap().to_chern_poly().unwrap()));
    }

    #[test]
    fn ssm_signs() {
        let s = FixtureStore::embedded();
        let r = s.get("SSMTp.A1.l0.schur").unwrap();
        assert!(ssm_sign_check(r).unwrap());
        let mut flipped = r.clone();
        flipped.terms[3].1 = "-3".into();
        assert!(!ssm_sign_check(&flipped).unwrap());
        let mut only = r.clone();
        only.terms.truncate(1);
        assert!(ssm_sign_check(&only).unwrap());
        assert!(ssm_sign_check(s.get("Tp.A2.l0.schur").unwrap()).is_err());
    }
}
