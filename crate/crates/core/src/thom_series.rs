//! Thom series in `d`-variable and Schur (`r_lambda`) form, the lowering
//! operator, and specialization at a given relative dimension `l`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ring::{Family, Mono, VarId};
use crate::scalar::Rat;
use crate::symmetric::{jacobi_trudi, render_labelled, schur_expand, SchurExpansion, SymError, ZSeq};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("monomial {0} has more than {1} factors")]
    WidthExceeded(String, usize),
    #[error("key {0:?} does not have width {1}")]
    WrongWidth(Vec<i32>, usize),
    #[error("series is only known down to index {floor}; l = {ell} needs index {needed}")]
    InsufficientWindow { floor: i32, ell: u32, needed: i32 },
    #[error("keys have different index sums ({0} and {1})")]
    Inhomogeneous(i32, i32),
    #[error("series is empty")]
    Empty,
    #[error("term {0} is not a d monomial")]
    NotDMonomial(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Width-`w` Thom series `sum coeff * d_{k_1} ... d_{k_w}`.
///
/// Keys are index multisets sorted in descending order. `index_floor`, when
/// set, is the smallest index down to which the series is complete; keys
/// with a smaller entry may be present but are not guaranteed to be.
#[derive(Clone, PartialEq, Debug)]
pub struct DSeries {
    width: usize,
    terms: BTreeMap<Vec<i32>, Rat>,
    index_floor: Option<i32>,
}

impl DSeries {
    pub fn new(width: usize, index_floor: Option<i32>) -> DSeries {
        DSeries {
            width,
            terms: BTreeMap::new(),
            index_floor,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn index_floor(&self) -> Option<i32> {
        self.index_floor
    }

    pub fn set_index_floor(&mut self, floor: Option<i32>) {
        self.index_floor = floor;
    }

    /// Add `c` to the coefficient of the multiset `key` (any order).
    pub fn add(&mut self, key: &[i32], c: Rat) -> Result<(), SeriesError> {
        if key.len() != self.width {
            return Err(SeriesError::WrongWidth(key.to_vec(), self.width));
        }
        let mut k = key.to_vec();
        k.sort_unstable_by(|a, b| b.cmp(a));
        let e = self.terms.entry(k.clone()).or_default();
        *e += c;
        if e == &Rat::default() {
            self.terms.remove(&k);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[i32]) -> Rat {
        let mut k = key.to_vec();
        k.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keep only keys whose entries are all `>= floor`, and record the
    /// floor.
    pub fn truncate_below(&self, floor: i32) -> DSeries {
        DSeries {
            width: self.width,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().all(|&e| e >= floor))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
            index_floor: Some(floor),
        }
    }

    /// Keep only keys with index sum `sigma`.
    pub fn project_index_sum(&self, sigma: i32) -> DSeries {
        DSeries {
            width: self.width,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().sum::<i32>() == sigma)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
            index_floor: self.index_floor,
        }
    }

    /// The series as a polynomial in the `d` variables.
    pub fn to_poly(&self) -> QPoly {
        QPoly::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (Mono::from_pairs(k.iter().map(|&i| (VarId::d(i), 1))), c.clone())),
        )
    }

    /// Read a polynomial in `d` variables whose monomials all have `width`
    /// factors.
    pub fn from_poly(p: &QPoly, width: usize, index_floor: Option<i32>) -> Result<DSeries, SeriesError> {
        let mut s = DSeries::new(width, index_floor);
        for (m, c) in p.terms() {
            if !m.only_family(Family::D) || m.is_one() {
                return Err(SeriesError::NotDMonomial(m.to_string()));
            }
            s.add(&m.index_multiset(), c.clone())?;
        }
        Ok(s)
    }
}

impl fmt::Display for DSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Schur-form Thom series `sum coeff * r_lambda` over weakly decreasing
/// integer sequences of a fixed width.
#[derive(Clone, PartialEq, Debug)]
pub struct RSeries {
    width: usize,
    terms: BTreeMap<ZSeq, Rat>,
}

impl RSeries {
    pub fn new(width: usize) -> RSeries {
        RSeries {
            width,
            terms: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn add(&mut self, label: &[i32], c: Rat) -> Result<(), SeriesError> {
        if label.len() != self.width {
            return Err(SeriesError::WrongWidth(label.to_vec(), self.width));
        }
        let z = ZSeq::new(label.to_vec())?;
        let e = self.terms.entry(z.clone()).or_default();
        *e += c;
        if e == &Rat::default() {
            self.terms.remove(&z);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZSeq, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &[i32]) -> Rat {
        ZSeq::new(label.to_vec())
            .ok()
            .and_then(|z| self.terms.get(&z).cloned())
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_latex(&self) -> String {
        render_labelled("r", self.terms.iter().map(|(z, c)| (z.entries().to_vec(), c)), true)
    }
}

impl fmt::Display for RSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_labelled("r", self.terms.iter().map(|(z, c)| (z.entries().to_vec(), c)), false);
        f.write_str(&s)
    }
}

/// Lowering operator: pad each monomial with `c_0` to exactly `width`
/// factors and lower every index by one (`c_0 = 1`, `c_{-1} = 0`).
pub fn flat(p: &QPoly, width: usize) -> Result<QPoly, SeriesError> {
    let mut out = QPoly::zero();
    for (m, c) in p.terms() {
        if !m.only_family(Family::C) {
            return Err(SeriesError::Sym(SymError::NotChernPolynomial(m.to_string())));
        }
        let mut idx = m.index_multiset();
        if idx.len() > width {
            return Err(SeriesError::WidthExceeded(m.to_string(), width));
        }
        idx.resize(width, 0);
        if let Some(t) = chern_product(idx.iter().map(|i| i - 1)) {
            out.add_term(t, c.clone());
        }
    }
    Ok(out)
}

// c_{i_1} ... c_{i_k} with c_0 = 1 and c_{<0} = 0 (None).
fn chern_product<I: IntoIterator<Item = i32>>(indices: I) -> Option<Mono> {
    let mut pairs = Vec::new();
    for i in indices {
        match i {
            i if i < 0 => return None,
            0 => {}
            i => pairs.push((VarId::c(i), 1)),
        }
    }
    Some(Mono::from_pairs(pairs))
}

/// `d_i -> c_{i+l+1}`.
pub fn specialize_d(ts: &DSeries, ell: u32) -> Result<QPoly, SeriesError> {
    let needed = -(ell as i32) - 1;
    if let Some(floor) = ts.index_floor {
        if floor > needed {
            return Err(SeriesError::InsufficientWindow { floor, ell, needed });
        }
    }
    Ok(specialize_known(ts, ell))
}

/// Specialization of the stored terms only, without checking that the
/// window is complete.
pub fn specialize_known(ts: &DSeries, ell: u32) -> QPoly {
    let shift = ell as i32 + 1;
    let mut out = QPoly::zero();
    for (k, c) in &ts.terms {
        if let Some(m) = chern_product(k.iter().map(|i| i + shift)) {
            out.add_term(m, c.clone());
        }
    }
    out
}

/// `r_lambda -> s_{lambda + l + 1}`, straightened by Jacobi–Trudi.
pub fn specialize_r(ts: &RSeries, ell: u32) -> Result<SchurExpansion, SeriesError> {
    let shift = ell as i32 + 1;
    let mut p = QPoly::zero();
    for (z, c) in &ts.terms {
        p += &jacobi_trudi(z.shift(shift).entries()).scale(c);
    }
    Ok(schur_expand(&p, None)?)
}

/// The common index sum of all keys.
pub fn index_sum_check(ts: &DSeries) -> Result<i32, SeriesError> {
    let mut sums = ts.terms.keys().map(|k| k.iter().sum::<i32>());
    let first = sums.next().ok_or(SeriesError::Empty)?;
    for s in sums {
        if s != first {
            return Err(SeriesError::Inhomogeneous(first, s));
        }
    }
    Ok(first)
}

/// The d-form of a width-2 r-series, from the 2x2 Jacobi–Trudi
/// determinant: `r_{i,j} = d_i d_j - d_{i+1} d_{j-1}`.
pub fn r_to_d_width2(ts: &RSeries) -> Result<DSeries, SeriesError> {
    if ts.width != 2 {
        return Err(SeriesError::WrongWidth(vec![], 2));
    }
    let mut out = DSeries::new(2, None);
    for (z, c) in &ts.terms {
        let (i, j) = (z.entries()[0], z.entries()[1]);
        out.add(&[i, j], c.clone())?;
        out.add(&[i + 1, j - 1], -c.clone())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn c(i: i32) -> QPoly {
        QPoly::var(VarId::c(i))
    }

    fn ts_a3() -> DSeries {
        let mut s = DSeries::new(3, Some(-2));
        for (k, v) in [
            ([0, 0, 0], 1),
            ([1, 0, -1], 3),
            ([2, -1, -1], 2),
            ([1, 1, -2], 1),
            ([2, 0, -2], 7),
            ([3, -1, -2], 10),
            ([4, -2, -2], 12),
            ([5, -2, -3], 60),
            ([4, -1, -3], 26),
        ] {
            s.add(&k, int(v)).unwrap();
        }
        s
    }

    #[test]
    fn flat_examples() {
        assert_eq!(flat(&c(3).pow(2), 3).unwrap(), QPoly::zero());
        assert_eq!(flat(&c(1).pow(3), 3).unwrap(), QPoly::one());
        assert!(matches!(flat(&c(1).pow(4), 3), Err(SeriesError::WidthExceeded(..))));
    }

    #[test]
    fn specialize_a3() {
        let ts = ts_a3();
        assert_eq!(specialize_d(&ts, 0).unwrap().to_string(), "c1^3+3c1c2+2c3");
        assert_eq!(
            specialize_d(&ts, 1).unwrap().to_string(),
            "2c1^2c4+3c1c2c3+10c1c5+c2^3+7c2c4+c3^2+12c6"
        );
        assert!(matches!(specialize_d(&ts, 2), Err(SeriesError::InsufficientWindow { .. })));
        assert_eq!(index_sum_check(&ts), Ok(0));
    }

    #[test]
    fn single_terms() {
        let mut s = DSeries::new(3, None);
        s.add(&[1, 1, -2], int(1)).unwrap();
        assert_eq!(specialize_d(&s, 1).unwrap(), c(3).pow(2));
        assert_eq!(specialize_d(&s, 0).unwrap(), QPoly::zero());
        let mut s = DSeries::new(3, None);
        s.add(&[2, -1, -1], int(1)).unwrap();
        assert_eq!(index_sum_check(&s), Ok(0));
        s.add(&[1, 0, 0], int(1)).unwrap();
        assert_eq!(index_sum_check(&s), Err(SeriesError::Inhomogeneous(1, 0)));
    }

    #[test]
    fn r_series_a2() {
        let mut r = RSeries::new(2);
        for (k, v) in [([0, 0], 1), ([1, -1], 2), ([2, -2], 4), ([3, -3], 8)] {
            r.add(&k, int(v)).unwrap();
        }
        assert_eq!(specialize_r(&r, 0).unwrap().to_string(), "s11+2s2");
        assert_eq!(specialize_r(&r, 1).unwrap().to_string(), "s22+2s31+4s4");
        assert_eq!(specialize_r(&r, 2).unwrap().to_string(), "s33+2s42+4s51+8s6");
    }
}
