use std::cmp::Ordering;
use std::fmt;

use super::SymError;
use crate::scalar::{Coeff, Rat};

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
///
/// Ordered by size, then lexicographically, which is the display order
/// `s11, s2, s111, s21, s3, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, SymError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::InvalidLabel(parts.iter().map(|&p| p as i32).collect()));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// From signed entries; negative entries are rejected.
    pub fn from_entries(entries: &[i32]) -> Result<Partition, SymError> {
        if entries.iter().any(|&e| e < 0) {
            return Err(SymError::InvalidLabel(entries.to_vec()));
        }
        Partition::new(entries.iter().map(|&e| e as u32).collect())
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn entries(&self) -> Vec<i32> {
        self.0.iter().map(|&p| p as i32).collect()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n` with at most `max_len` parts, in ascending
    /// order.
    pub fn all(n: u32, max_len: Option<usize>) -> Vec<Partition> {
        fn rec(n: u32, max_part: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if left == 0 {
                return;
            }
            for p in 1..=max_part.min(n) {
                cur.push(p);
                rec(n - p, p, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len.unwrap_or(n as usize), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label_text(&self.entries()))
    }
}

/// A weakly decreasing integer sequence of fixed width; entries may be
/// negative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZSeq(Vec<i32>);

impl ZSeq {
    pub fn new(entries: Vec<i32>) -> Result<ZSeq, SymError> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::InvalidLabel(entries));
        }
        Ok(ZSeq(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Every entry shifted by `k`.
    pub fn shift(&self, k: i32) -> ZSeq {
        ZSeq(self.0.iter().map(|e| e + k).collect())
    }
}

impl Ord for ZSeq {
    fn cmp(&self, other: &ZSeq) -> Ordering {
        self.sum()
            .cmp(&other.sum())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZSeq {
    fn partial_cmp(&self, other: &ZSeq) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label_text(&self.0))
    }
}

/// `21` for small nonnegative entries, `[3,-1]` otherwise.
pub(crate) fn label_text(entries: &[i32]) -> String {
    if entries.iter().all(|e| (0..=9).contains(e)) {
        entries.iter().map(|e| e.to_string()).collect()
    } else {
        let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

pub(crate) fn label_latex(entries: &[i32]) -> String {
    let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    if entries.iter().all(|e| (0..=9).contains(e)) {
        format!("{{{}}}", inner.concat())
    } else {
        format!("{{{}}}", inner.join(","))
    }
}

/// Render `sum coeff * prefix_label`. An empty label renders as a constant.
pub fn render_labelled<'a, I>(prefix: &str, terms: I, latex: bool) -> String
where
    I: IntoIterator<Item = (Vec<i32>, &'a Rat)>,
{
    let mut s = String::new();
    for (i, (label, c)) in terms.into_iter().enumerate() {
        if c.is_negative() {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        let mag = c.abs_string();
        if label.is_empty() {
            s.push_str(&mag);
            continue;
        }
        if mag != "1" {
            match (latex, mag.split_once('/')) {
                (true, Some((n, d))) => s.push_str(&format!("\\frac{{{n}}}{{{d}}}")),
                _ => s.push_str(&mag),
            }
        }
        s.push_str(prefix);
        if latex {
            s.push('_');
            s.push_str(&label_latex(&label));
        } else {
            s.push_str(&label_text(&label));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn partitions_of_five() {
        let ps: Vec<String> = Partition::all(5, None).iter().map(|p| p.to_string()).collect();
        assert_eq!(ps, ["11111", "2111", "221", "311", "32", "41", "5"]);
        assert_eq!(Partition::all(8, None).len(), 22);
        assert_eq!(Partition::all(6, Some(2)).len(), 4);
        assert_eq!(Partition::all(0, None), vec![Partition::empty()]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![4, 0]).unwrap().to_string(), "4");
        assert!(ZSeq::new(vec![3, -1]).is_ok());
        assert!(ZSeq::new(vec![-1, 3]).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(label_text(&[3, -1]), "[3,-1]");
        assert_eq!(label_text(&[10, 2]), "[10,2]");
        let one = int(1);
        let two = int(-2);
        let s = render_labelled("s", [(vec![1, 1], &one), (vec![2], &two)], false);
        assert_eq!(s, "s11-2s2");
        let s = render_labelled("r", [(vec![1, -1], &two)], true);
        assert_eq!(s, "-2r_{1,-1}");
    }
}
