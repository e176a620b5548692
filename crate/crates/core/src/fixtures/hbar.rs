use std::fmt;

use super::record::FixtureRecord;
use super::FixtureError;
use crate::parse::{parse_poly, ParseError};
use crate::ring::{Family, VarId};
use crate::scalar::Rat;
use crate::symmetric::{groth_normalize, GrothExpansion, Partition};
use crate::QPoly;

/// `num / den` with both parts polynomials in `hbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct HbarCoeff {
    pub num: QPoly,
    pub den: QPoly,
}

fn univariate_eval(p: &QPoly, x: &Rat) -> Rat {
    let mut acc = Rat::default();
    for (m, c) in p.terms() {
        let e = m.exps().first().map(|&(_, e)| e).unwrap_or(0);
        acc += c * num_traits::pow(x.clone(), e as usize);
    }
    acc
}

impl HbarCoeff {
    /// Parse `N` or `N/(D)`, where the denominator is parenthesized (and may
    /// carry a power).
    pub fn parse(text: &str) -> Result<HbarCoeff, ParseError> {
        let bytes = text.as_bytes();
        let mut depth = 0i32;
        let mut split = None;
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'/' if depth == 0 && bytes[i + 1..].iter().find(|c| !c.is_ascii_whitespace()) == Some(&b'(') => {
                    split = Some(i)
                }
                _ => {}
            }
        }
        let (num, den) = match split {
            Some(i) => (
                parse_poly(&text[..i])?,
                parse_poly(&text[i + 1..]).map_err(|e| ParseError {
                    offset: e.offset + i + 1,
                    message: e.message,
                })?,
            ),
            None => (parse_poly(text)?, QPoly::one()),
        };
        for v in num.variables().into_iter().chain(den.variables()) {
            if v.family != Family::Hbar {
                return Err(ParseError {
                    offset: 0,
                    message: format!("unexpected variable {v}"),
                });
            }
        }
        Ok(HbarCoeff { num, den })
    }

    pub fn eval(&self, value: &Rat) -> Result<Rat, FixtureError> {
        let d = univariate_eval(&self.den, value);
        if d == Rat::default() {
            return Err(FixtureError::PoleAtValue(value.to_string()));
        }
        Ok(univariate_eval(&self.num, value) / d)
    }

    /// Substitute `hbar = p / q` with `p`, `q` polynomials in another
    /// variable. Returns numerator and denominator after clearing powers of
    /// `q`.
    pub fn substitute_fraction(&self, p: &QPoly, q: &QPoly) -> (QPoly, QPoly) {
        let deg = |f: &QPoly| f.terms().map(|(m, _)| m.exponent(VarId::hbar())).max().unwrap_or(0);
        let (dn, dd) = (deg(&self.num), deg(&self.den));
        let homog = |f: &QPoly, d: u32| {
            let mut out = QPoly::zero();
            for (m, c) in f.terms() {
                let e = m.exponent(VarId::hbar());
                out += &(&p.pow(e) * &q.pow(d - e)).scale(c);
            }
            out
        };
        // num(p/q) / den(p/q) = homog(num) q^dd / (homog(den) q^dn)
        let common = dn.min(dd);
        (&homog(&self.num, dn) * &q.pow(dd - common), &homog(&self.den, dd) * &q.pow(dn - common))
    }
}

impl fmt::Display for HbarCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Evaluate every coefficient of a motivic Segre record at `hbar = value`.
pub fn hbar_substitute(record: &FixtureRecord, value: &Rat) -> Result<GrothExpansion, FixtureError> {
    let terms = record.to_hbar_terms()?;
    let mut evaluated = Vec::with_capacity(terms.len());
    for (p, q) in &terms {
        evaluated.push((p.entries(), q.eval(value)?));
    }
    Ok(groth_normalize(evaluated.iter().map(|(l, c)| (l.as_slice(), c.clone())))?)
}

/// One row of the `hbar = -1/(s-1)` comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct SRow {
    pub label: Partition,
    pub num: QPoly,
    pub den: QPoly,
    pub stored: Option<QPoly>,
}

impl SRow {
    /// Whether `num / den` equals the stored polynomial.
    pub fn agrees(&self) -> bool {
        match &self.stored {
            Some(s) => &(s * &self.den) == &self.num,
            None => false,
        }
    }
}

/// Substitute `hbar = -1/(s-1)` into the motivic Segre record, divide by
/// `s^2`, and line the result up with the stored `s`-form.
pub fn hbar_to_s_report(hbar: &FixtureRecord, s_form: &FixtureRecord) -> Result<Vec<SRow>, FixtureError> {
    let s = QPoly::var(VarId::s());
    let p = QPoly::int(-1);
    let q = &s - &QPoly::one();
    let stored = s_form.to_s_terms()?;
    let mut rows = Vec::new();
    for (label, coeff) in hbar.to_hbar_terms()? {
        let (num, den) = coeff.substitute_fraction(&p, &q);
        rows.push(SRow {
            stored: stored.iter().find(|(l, _)| l == &label).map(|(_, v)| v.clone()),
            label,
            num,
            den: &den * &s.pow(2),
        });
    }
    Ok(rows)
}
