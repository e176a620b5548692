use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::hbar::HbarCoeff;
use super::FixtureError;
use crate::parse::{parse_poly, parse_rational};
use crate::ring::{Mono, VarId};
use crate::scalar::{Gf2, Rat};
use crate::symmetric::{groth_normalize, GrothExpansion, Partition, SchurExpansion};
use crate::thom_series::{DSeries, RSeries};
use crate::{F2Poly, QPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ell {
    Value(u32),
    Series(SeriesTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesTag {
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theory {
    H,
    K,
    #[serde(rename = "SSM")]
    Ssm,
    #[serde(rename = "MS")]
    Ms,
    #[serde(rename = "real-mod2")]
    RealMod2,
    #[serde(rename = "real-Z")]
    RealZ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    ChernMonomial,
    Schur,
    DSeries,
    RSeries,
    Groth,
    AbVariables,
    #[serde(rename = "real-Z")]
    RealZ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientDomain {
    Rational,
    RationalInHbar,
    RationalInS,
    Mod2,
}

/// One stored polynomial or series.
///
/// Labels are integer arrays: index multisets for Chern monomials, weakly
/// decreasing sequences for Schur, Grothendieck and series keys. In the
/// `ab-variables` basis `a_i` is `i` and `b_j` is `-j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub id: String,
    pub singularity: String,
    pub ell: Ell,
    pub theory: Theory,
    pub basis: Basis,
    pub width: Option<usize>,
    pub coefficient_domain: CoefficientDomain,
    pub terms: Vec<(Vec<i32>, String)>,
    pub truncation_degree: Option<u32>,
    pub provenance: String,
}

impl FixtureRecord {
    fn bad_coeff(&self, text: &str) -> FixtureError {
        FixtureError::BadCoefficient {
            id: self.id.clone(),
            text: text.to_string(),
        }
    }

    fn expect(&self, basis: Basis, domain: CoefficientDomain) -> Result<(), FixtureError> {
        if self.basis != basis || self.coefficient_domain != domain {
            return Err(FixtureError::WrongBasis {
                id: self.id.clone(),
                expected: format!("{basis:?}/{domain:?}"),
            });
        }
        Ok(())
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation_degree.is_some()
    }

    /// Rational coefficients, in file order.
    pub fn rational_terms(&self) -> Result<Vec<(Vec<i32>, Rat)>, FixtureError> {
        if self.coefficient_domain != CoefficientDomain::Rational && self.coefficient_domain != CoefficientDomain::Mod2 {
            return Err(FixtureError::WrongBasis {
                id: self.id.clone(),
                expected: "rational coefficients".into(),
            });
        }
        self.terms
            .iter()
            .map(|(l, c)| Ok((l.clone(), parse_rational(c).map_err(|_| self.bad_coeff(c))?)))
            .collect()
    }

    fn chern_mono(&self, label: &[i32]) -> Result<Mono, FixtureError> {
        if label.iter().any(|&i| i < 1) {
            return Err(FixtureError::BadLabel {
                id: self.id.clone(),
                label: label.to_vec(),
            });
        }
        Ok(Mono::from_pairs(label.iter().map(|&i| (VarId::c(i), 1))))
    }

    pub fn to_chern_poly(&self) -> Result<QPoly, FixtureError> {
        self.expect(Basis::ChernMonomial, CoefficientDomain::Rational)?;
        let mut p = QPoly::zero();
        for (l, c) in self.rational_terms()? {
            p.add_term(self.chern_mono(&l)?, c);
        }
        Ok(p)
    }

    /// A mod-2 record in Stiefel–Whitney (`w`) or `a`/`b` variables.
    pub fn to_f2_poly(&self) -> Result<F2Poly, FixtureError> {
        if self.coefficient_domain != CoefficientDomain::Mod2 {
            return Err(FixtureError::WrongBasis {
                id: self.id.clone(),
                expected: "mod2 coefficients".into(),
            });
        }
        let mut p = F2Poly::zero();
        for (l, c) in self.rational_terms()? {
            let c = Gf2::reduce(&c).ok_or_else(|| self.bad_coeff(&c.to_string()))?;
            let m = match self.basis {
                Basis::ChernMonomial => Mono::from_pairs(
                    self.chern_mono(&l)?
                        .exps()
                        .iter()
                        .map(|&(v, e)| (VarId::w(v.index), e)),
                ),
                Basis::AbVariables => self.ab_mono(&l)?,
                _ => {
                    return Err(FixtureError::WrongBasis {
                        id: self.id.clone(),
                        expected: "chern-monomial or ab-variables".into(),
                    })
                }
            };
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn ab_mono(&self, label: &[i32]) -> Result<Mono, FixtureError> {
        if label.contains(&0) {
            return Err(FixtureError::BadLabel {
                id: self.id.clone(),
                label: label.to_vec(),
            });
        }
        Ok(Mono::from_pairs(
            label
                .iter()
                .map(|&i| (if i > 0 { VarId::a(i) } else { VarId::b(-i) }, 1)),
        ))
    }

    fn partition(&self, label: &[i32]) -> Result<Partition, FixtureError> {
        Partition::from_entries(label).map_err(|_| FixtureError::BadLabel {
            id: self.id.clone(),
            label: label.to_vec(),
        })
    }

    pub fn to_schur(&self) -> Result<SchurExpansion, FixtureError> {
        self.expect(Basis::Schur, CoefficientDomain::Rational)?;
        let mut e = SchurExpansion::new();
        for (l, c) in self.rational_terms()? {
            e.add(self.partition(&l)?, c);
        }
        Ok(e)
    }

    pub fn to_groth(&self) -> Result<GrothExpansion, FixtureError> {
        self.expect(Basis::Groth, CoefficientDomain::Rational)?;
        let terms = self.rational_terms()?;
        Ok(groth_normalize(terms.iter().map(|(l, c)| (l.as_slice(), c.clone())))?)
    }

    /// Groth labels with coefficients rational in `hbar`.
    pub fn to_hbar_terms(&self) -> Result<Vec<(Partition, HbarCoeff)>, FixtureError> {
        self.expect(Basis::Groth, CoefficientDomain::RationalInHbar)?;
        self.terms
            .iter()
            .map(|(l, c)| {
                let q = HbarCoeff::parse(c).map_err(|_| self.bad_coeff(c))?;
                Ok((self.partition(l)?, q))
            })
            .collect()
    }

    /// Groth labels with coefficients polynomial in `s`.
    pub fn to_s_terms(&self) -> Result<Vec<(Partition, QPoly)>, FixtureError> {
        self.expect(Basis::Groth, CoefficientDomain::RationalInS)?;
        self.terms
            .iter()
            .map(|(l, c)| Ok((self.partition(l)?, parse_poly(c).map_err(|_| self.bad_coeff(c))?)))
            .collect()
    }

    fn width_or_err(&self) -> Result<usize, FixtureError> {
        self.width.ok_or_else(|| FixtureError::WrongBasis {
            id: self.id.clone(),
            expected: "a width".into(),
        })
    }

    /// The series floor implied by `truncation_degree`.
    pub fn index_floor(&self) -> Option<i32> {
        self.truncation_degree.map(|d| -(d as i32))
    }

    pub fn to_dseries(&self) -> Result<DSeries, FixtureError> {
        self.expect(Basis::DSeries, CoefficientDomain::Rational)?;
        let mut s = DSeries::new(self.width_or_err()?, self.index_floor());
        for (l, c) in self.rational_terms()? {
            s.add(&l, c)?;
        }
        Ok(s)
    }

    pub fn to_rseries(&self) -> Result<RSeries, FixtureError> {
        self.expect(Basis::RSeries, CoefficientDomain::Rational)?;
        let mut s = RSeries::new(self.width_or_err()?);
        for (l, c) in self.rational_terms()? {
            s.add(&l, c)?;
        }
        Ok(s)
    }
}

/// All fixtures, keyed by id.
#[derive(Clone, Debug, PartialEq)]
pub struct FixtureStore {
    records: BTreeMap<String, FixtureRecord>,
}

const EMBEDDED: &str = include_str!("../../fixtures/fixtures.json");

impl FixtureStore {
    /// The fixture file compiled into the library.
    pub fn embedded() -> FixtureStore {
        FixtureStore::from_json(EMBEDDED).expect("embedded fixture file is valid")
    }

    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn from_json(text: &str) -> Result<FixtureStore, FixtureError> {
        let list: Vec<FixtureRecord> = serde_json::from_str(text).map_err(|e| FixtureError::Json(e.to_string()))?;
        let mut records = BTreeMap::new();
        for r in list {
            if let Some(dup) = records.insert(r.id.clone(), r) {
                return Err(FixtureError::Json(format!("duplicate id {}", dup.id)));
            }
        }
        Ok(FixtureStore { records })
    }

    pub fn load(path: &Path) -> Result<FixtureStore, FixtureError> {
        let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io(format!("{}: {e}", path.display())))?;
        FixtureStore::from_json(&text)
    }

    pub fn get(&self, id: &str) -> Result<&FixtureRecord, FixtureError> {
        self.records
            .get(id)
            .ok_or_else(|| FixtureError::UnknownFixture(id.to_string()))
    }

    pub fn contains(&self, id: &str) -> bool {
        self.records.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn records(&self) -> impl Iterator<Item = &FixtureRecord> {
        self.records.values()
    }

    pub fn insert(&mut self, r: FixtureRecord) {
        self.records.insert(r.id.clone(), r);
    }

    /// Canonical file text: records sorted by id, one compact JSON object
    /// per line, newline-terminated.
    pub fn to_canonical_json(&self) -> String {
        let lines: Vec<String> = self
            .records
            .values()
            .map(|r| serde_json::to_string(r).expect("records serialize"))
            .collect();
        format!("[\n{}\n]\n", lines.join(",\n"))
    }
}
