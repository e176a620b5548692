use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::mono::Mono;
use super::var::{Family, VarId};
use super::RingError;
use crate::scalar::Coeff;

/// Sparse multivariate polynomial with coefficients in `C`.
///
/// No zero coefficients are stored, so equality is term-map equality.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::monomial(Mono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(C::from_i64(n))
    }

    pub fn var(v: VarId) -> Self {
        Poly::monomial(Mono::var(v), C::one())
    }

    pub fn monomial(m: Mono, c: C) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// `c_i` with the conventions `c_0 = 1` and `c_i = 0` for `i < 0`.
    pub fn chern(i: i32) -> Self {
        match i {
            i if i < 0 => Poly::zero(),
            0 => Poly::one(),
            i => Poly::var(VarId::c(i)),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, C)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Mono, C)> {
        self.terms.into_iter()
    }

    /// Stored coefficient of `m`, or zero.
    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Mono::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())))
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Product with every term of degree above `cutoff` discarded.
    pub fn mul_truncated(&self, other: &Self, cutoff: i64) -> Self {
        let mut acc: HashMap<Mono, C> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.degree() + m2.degree() > cutoff {
                    continue;
                }
                let m = m1.mul(m2);
                let c = c1.clone() * c2.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_terms(acc)
    }

    pub fn truncate(&self, cutoff: i64) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cutoff)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: i64) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn by_degree(&self) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(Mono::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Whether every variable belongs to one of `families`.
    pub fn in_families(&self, families: &[Family]) -> bool {
        self.variables().iter().all(|v| families.contains(&v.family))
    }

    pub fn map_coeffs<D: Coeff, F: FnMut(&C) -> D>(&self, mut f: F) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Coeff, E, F: FnMut(&C) -> Result<D, E>>(
        &self,
        mut f: F,
    ) -> Result<Poly<D>, E> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Rename variables monomial by monomial (the map must be injective on
    /// the variables present for the result to be meaningful).
    pub fn map_vars<F: Fn(VarId) -> VarId>(&self, f: F) -> Self {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono::from_pairs(m.exps().iter().map(|&(v, e)| (f(v), e))), c.clone())),
        )
    }

    /// Simultaneous substitution.
    ///
    /// Every variable of `self` must either have an image in `subst` or be
    /// declared fixed there. With a `cutoff`, terms of degree above it are
    /// dropped during expansion (valid when all degrees involved are
    /// nonnegative).
    pub fn substitute(&self, subst: &Substitution<C>, cutoff: Option<i64>) -> Result<Self, RingError> {
        let mut out = Poly::zero();
        let mut powers: HashMap<(VarId, u32), Self> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for &(v, e) in m.exps() {
                let factor = match subst.image(v) {
                    Some(img) => powers
                        .entry((v, e))
                        .or_insert_with(|| match cutoff {
                            Some(k) => pow_truncated(img, e, k),
                            None => img.pow(e),
                        })
                        .clone(),
                    None if subst.is_fixed(v) => Poly::monomial(Mono::pow(v, e), C::one()),
                    None => return Err(RingError::UnmappedVariable(v)),
                };
                term = match cutoff {
                    Some(k) => term.mul_truncated(&factor, k),
                    None => &term * &factor,
                };
                if term.is_zero() {
                    break;
                }
            }
            out += &term;
        }
        Ok(out)
    }

    /// Leading (first in canonical order) term.
    pub fn first_term(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next()
    }

    pub fn to_latex(&self) -> String {
        render(self, |m| m.latex(), latex_coeff)
    }
}

fn pow_truncated<C: Coeff>(p: &Poly<C>, e: u32, cutoff: i64) -> Poly<C> {
    let mut out = Poly::one();
    for _ in 0..e {
        out = out.mul_truncated(p, cutoff);
    }
    out
}

/// Images for [`Poly::substitute`], plus the set of variables that are left
/// untouched.
#[derive(Clone, Debug)]
pub struct Substitution<C: Coeff> {
    images: BTreeMap<VarId, Poly<C>>,
    fixed_vars: BTreeSet<VarId>,
    fixed_families: BTreeSet<Family>,
}

impl<C: Coeff> Default for Substitution<C> {
    fn default() -> Self {
        Substitution::new()
    }
}

impl<C: Coeff> Substitution<C> {
    pub fn new() -> Self {
        Substitution {
            images: BTreeMap::new(),
            fixed_vars: BTreeSet::new(),
            fixed_families: BTreeSet::new(),
        }
    }

    pub fn map(mut self, v: VarId, image: Poly<C>) -> Self {
        self.images.insert(v, image);
        self
    }

    pub fn insert(&mut self, v: VarId, image: Poly<C>) {
        self.images.insert(v, image);
    }

    pub fn fix(mut self, v: VarId) -> Self {
        self.fixed_vars.insert(v);
        self
    }

    pub fn fix_family(mut self, f: Family) -> Self {
        self.fixed_families.insert(f);
        self
    }

    pub fn image(&self, v: VarId) -> Option<&Poly<C>> {
        self.images.get(&v)
    }

    pub fn is_fixed(&self, v: VarId) -> bool {
        self.fixed_vars.contains(&v) || self.fixed_families.contains(&v.family)
    }
}

fn plain_coeff<C: Coeff>(c: &C, mono_is_one: bool) -> String {
    let mag = c.abs_string();
    if !mono_is_one && mag == "1" {
        String::new()
    } else {
        mag
    }
}

fn latex_coeff<C: Coeff>(c: &C, mono_is_one: bool) -> String {
    let mag = plain_coeff(c, mono_is_one);
    match mag.split_once('/') {
        Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
        None => mag,
    }
}

fn render<C: Coeff>(
    p: &Poly<C>,
    mono: impl Fn(&Mono) -> String,
    coeff: impl Fn(&C, bool) -> String,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        if c.is_negative() {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        s.push_str(&coeff(c, m.is_one()));
        if !m.is_one() {
            s.push_str(&mono(m));
        }
    }
    s
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, |m| m.to_string(), plain_coeff))
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Mono, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1.clone() * c2.clone();
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let v = e.get().clone() + c;
                        *e.get_mut() = v;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> FromIterator<(Mono, C)> for Poly<C> {
    fn from_iter<I: IntoIterator<Item = (Mono, C)>>(iter: I) -> Self {
        Poly::from_terms(iter)
    }
}
