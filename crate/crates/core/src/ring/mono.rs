use std::cmp::Ordering;
use std::fmt;

use super::var::{Family, VarId};

/// A monomial: variables with positive exponents, sorted by variable.
///
/// Monomials are ordered by total degree first, then lexicographically with
/// earlier variables (`c1` before `c2`, `c` before `a`) counting as larger.
/// That is the order used for storage and display, so `c1^4` precedes
/// `c1^2c2`, which precedes `c4`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    exps: Vec<(VarId, u32)>,
    deg: i64,
}

impl Mono {
    fn build(exps: Vec<(VarId, u32)>) -> Mono {
        let deg = exps.iter().map(|&(v, e)| v.degree() * e as i64).sum();
        Mono { exps, deg }
    }

    pub fn one() -> Mono {
        Mono::build(Vec::new())
    }

    pub fn var(v: VarId) -> Mono {
        Mono::build(vec![(v, 1)])
    }

    pub fn pow(v: VarId, e: u32) -> Mono {
        if e == 0 {
            Mono::one()
        } else {
            Mono::build(vec![(v, e)])
        }
    }

    /// Build from arbitrary (variable, exponent) pairs; merges repeats and
    /// drops zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Mono {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        exps.sort_by(|x, y| x.0.cmp(&y.0));
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Mono::build(merged)
    }

    /// Product of `c_i` over the given indices (a Chern monomial labelled by
    /// a partition). Indices must be >= 1.
    pub fn chern(indices: &[i32]) -> Mono {
        Mono::from_pairs(indices.iter().map(|&i| (VarId::c(i), 1)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by(|p| p.0.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.deg
    }

    /// Number of variable factors counted with multiplicity.
    pub fn width(&self) -> u32 {
        self.exps.iter().map(|p| p.1).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    pub fn only_family(&self, family: Family) -> bool {
        self.exps.iter().all(|p| p.0.family == family)
    }

    /// The multiset of indices, descending. For a Chern monomial this is its
    /// partition label.
    pub fn index_multiset(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self
            .exps
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat(v.index).take(e as usize))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono {
            exps: out,
            deg: self.deg + other.deg,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 == v {
                let f = other.exps[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else if j < other.exps.len() && other.exps[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        (j == other.exps.len()).then(|| Mono::build(out))
    }

    /// Split off the power of `v`: returns `(exponent, rest)`.
    pub fn split(&self, v: VarId) -> (u32, Mono) {
        let mut rest = self.exps.clone();
        match rest.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(i) => {
                let e = rest.remove(i).1;
                (e, Mono::build(rest))
            }
            Err(_) => (0, Mono::build(rest)),
        }
    }

    pub fn latex(&self) -> String {
        let mut s = String::new();
        for &(v, e) in &self.exps {
            s.push_str(&v.latex());
            if e > 1 {
                s.push_str(&format!("^{{{e}}}"));
            }
        }
        s
    }
}

impl Default for Mono {
    fn default() -> Mono {
        Mono::one()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| lex_descending(&self.exps, &other.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Lexicographically larger exponent vectors sort first.
fn lex_descending(a: &[(VarId, u32)], b: &[(VarId, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            return x.0.cmp(&y.0);
        }
        if x.1 != y.1 {
            return y.1.cmp(&x.1);
        }
    }
    b.len().cmp(&a.len())
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for &(v, e) in &self.exps {
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order_matches_chern_convention() {
        let mut ms = vec![
            Mono::chern(&[4]),
            Mono::chern(&[2, 2]),
            Mono::chern(&[3, 1]),
            Mono::chern(&[2, 1, 1]),
            Mono::chern(&[1, 1, 1, 1]),
        ];
        ms.sort();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["c1^4", "c1^2c2", "c1c3", "c2^2", "c4"]);
    }

    #[test]
    fn constant_sorts_first() {
        assert!(Mono::one() < Mono::var(VarId::t(1)));
    }

    #[test]
    fn division() {
        let m = Mono::chern(&[3, 1, 1]);
        assert_eq!(m.div(&Mono::chern(&[1])), Some(Mono::chern(&[3, 1])));
        assert_eq!(m.div(&Mono::chern(&[2])), None);
        assert_eq!(m.div(&Mono::chern(&[1, 1, 1])), None);
        assert_eq!(m.index_multiset(), vec![3, 1, 1]);
        assert_eq!(m.width(), 3);
    }
}
