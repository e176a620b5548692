use std::collections::BTreeMap;
use std::fmt;

use super::label::{render_labelled, Partition};
use super::SymError;
use crate::scalar::Rat;

/// `sum coeff * g_lambda` over formal Grothendieck symbols.
///
/// Labels are kept normalized: trailing zeros trimmed, so `g_{4,0}` is
/// stored as `g_4`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct GrothExpansion {
    terms: BTreeMap<Partition, Rat>,
}

impl GrothExpansion {
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

    /// Labels with nonzero coefficient.
    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    fn add(&mut self, p: Partition, c: Rat) {
        let e = self.terms.entry(p.clone()).or_default();
        *e += c;
        if e == &Rat::default() {
            self.terms.remove(&p);
        }
    }

    pub fn to_latex(&self) -> String {
        render_labelled("g", self.terms.iter().map(|(p, c)| (p.entries(), c)), true)
    }
}

impl fmt::Display for GrothExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_labelled("g", self.terms.iter().map(|(p, c)| (p.entries(), c)), false);
        f.write_str(&s)
    }
}

/// Normalize raw labels and merge coefficients.
///
/// Labels of width at most 2 follow the collapse rule `g_{i,j} = g_{i,0}`
/// for `j < 0`. Wider labels must already be partitions.
pub fn groth_normalize<'a, I>(raw: I) -> Result<GrothExpansion, SymError>
where
    I: IntoIterator<Item = (&'a [i32], Rat)>,
{
    let mut out = GrothExpansion::default();
    for (label, c) in raw {
        if label.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::InvalidLabel(label.to_vec()));
        }
        let entries: Vec<i32> = if label.len() <= 2 {
            label.iter().map(|&e| e.max(0)).collect()
        } else if label.iter().any(|&e| e < 0) {
            return Err(SymError::UnsupportedWidth(label.to_vec()));
        } else {
            label.to_vec()
        };
        if entries.first().is_some_and(|&e| e < 0) {
            return Err(SymError::InvalidLabel(label.to_vec()));
        }
        out.add(Partition::from_entries(&entries)?, c);
    }
    Ok(out)
}

/// The lowering operator on width-2 labels: `g_{i,j} -> g_{i-1,j-1}`,
/// followed by collapse and cancellation.
pub fn groth_flat(e: &GrothExpansion) -> Result<GrothExpansion, SymError> {
    let mut lowered: Vec<(Vec<i32>, Rat)> = Vec::with_capacity(e.len());
    for (p, c) in e.terms() {
        let mut entries = p.entries();
        if entries.len() > 2 {
            return Err(SymError::UnsupportedWidth(entries));
        }
        entries.resize(2, 0);
        lowered.push((entries.iter().map(|x| x - 1).collect(), c.clone()));
    }
    groth_normalize(lowered.iter().map(|(l, c)| (l.as_slice(), c.clone())))
}
