use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::label::{render_labelled, Partition};
use super::SymError;
use crate::ring::{Family, Mono, VarId};
use crate::scalar::Rat;
use crate::QPoly;

/// `sum coeff * s_lambda`, optionally restricted to partitions with at most
/// `width_bound` parts.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rat>,
    width_bound: Option<usize>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rat)>>(terms: I) -> Self {
        let mut e = SchurExpansion::new();
        for (p, c) in terms {
            e.add(p, c);
        }
        e
    }

    pub fn with_width_bound(mut self, w: Option<usize>) -> Self {
        self.width_bound = w;
        self
    }

    pub fn width_bound(&self) -> Option<usize> {
        self.width_bound
    }

    pub fn add(&mut self, p: Partition, c: Rat) {
        let e = self.terms.entry(p.clone()).or_default();
        *e += c;
        if e == &Rat::default() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> Rat {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c >= &Rat::default())
    }

    pub fn to_latex(&self) -> String {
        render_labelled("s", self.terms.iter().map(|(p, c)| (p.entries(), c)), true)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_labelled("s", self.terms.iter().map(|(p, c)| (p.entries(), c)), false);
        f.write_str(&s)
    }
}

fn chern_entry(k: i32) -> QPoly {
    QPoly::chern(k)
}

// Laplace expansion along rows, memoized on the set of unused columns.
fn det(n: usize, entry: &dyn Fn(usize, usize) -> QPoly) -> QPoly {
    fn rec(
        row: usize,
        cols: u32,
        n: usize,
        entry: &dyn Fn(usize, usize) -> QPoly,
        memo: &mut HashMap<u32, QPoly>,
    ) -> QPoly {
        if row == n {
            return QPoly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = QPoly::zero();
        let mut position = 0;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = entry(row, j);
            if !a.is_zero() {
                let minor = rec(row + 1, cols & !(1 << j), n, entry, memo);
                let term = &a * &minor;
                if position % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    rec(0, (1u32 << n) - 1, n, entry, &mut memo)
}

fn jt_cache() -> &'static Mutex<HashMap<Vec<i32>, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<i32>, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `det(c_{lambda_i + j - i})` with `c_0 = 1` and `c_k = 0` for `k < 0`.
///
/// Any integer sequence is accepted.
pub fn jacobi_trudi(lambda: &[i32]) -> QPoly {
    let mut key = lambda.to_vec();
    while key.len() > 1 && key.last() == Some(&0) {
        key.pop();
    }
    if let Some(p) = jt_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let n = key.len();
    let p = if n == 0 {
        QPoly::one()
    } else {
        det(n, &|i, j| chern_entry(key[i] + j as i32 - i as i32))
    };
    jt_cache().lock().unwrap().insert(key, p.clone());
    p
}

/// The Giambelli–Thom–Porteous determinant: `s` of the `r x r` rectangle
/// with side `r + l`.
pub fn gtp(r: u32, l: u32) -> QPoly {
    jacobi_trudi(&vec![(r + l) as i32; r as usize])
}

/// Expand a polynomial in the `c` variables in the Schur basis.
///
/// The Jacobi–Trudi transition matrix is unitriangular: `s_lambda` is
/// `c_lambda` plus monomials lexicographically larger than `lambda`. The
/// elimination therefore runs from the lexicographically smallest
/// monomial upward, one degree at a time.
pub fn schur_expand(p: &QPoly, width: Option<usize>) -> Result<SchurExpansion, SymError> {
    let mut rest = p.clone();
    for (m, _) in p.terms() {
        if !m.only_family(Family::C) {
            return Err(SymError::NotChernPolynomial(m.to_string()));
        }
        if let Some(w) = width {
            if m.width() as usize > w {
                return Err(SymError::NotInSpan(m.to_string()));
            }
        }
    }
    let mut out = SchurExpansion::new().with_width_bound(width);
    while let Some(degree) = rest.min_degree() {
        let part = rest.homogeneous_part(degree);
        let (m, c) = part
            .terms()
            .min_by(|x, y| label_of(x.0).cmp(&label_of(y.0)))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let lambda = Partition::from_entries(&label_of(&m)).expect("chern monomial label");
        let s = jacobi_trudi(&lambda.entries());
        let lead = s.coeff(&m);
        if lead != Rat::from_integer(1.into()) {
            return Err(SymError::SingularTransition(degree));
        }
        rest -= &s.scale(&c);
        out.add(lambda, c);
    }
    Ok(out)
}

fn label_of(m: &Mono) -> Vec<i32> {
    m.index_multiset()
}

/// `sum coeff * jacobi_trudi(lambda)`.
pub fn schur_contract(e: &SchurExpansion) -> QPoly {
    let mut out = QPoly::zero();
    for (p, c) in e.terms() {
        out += &jacobi_trudi(&p.entries()).scale(c);
    }
    out
}

/// Chern monomial `c_lambda`.
pub fn chern_mono(p: &Partition) -> Mono {
    Mono::from_pairs(p.parts().iter().map(|&i| (VarId::c(i as i32), 1)))
}
