//! Exact linear solving by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("system is underdetermined: null space has dimension {nullity}")]
    Underdetermined { nullity: usize },
    #[error("system is inconsistent")]
    Inconsistent,
    #[error("row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
}

/// Echelon form of an integer matrix, produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

// Clear denominators row by row.
fn integer_row(row: &[Rat], rhs: &Rat) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for q in row.iter().chain(std::iter::once(rhs)) {
        l = l.lcm(q.denom());
    }
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}

fn bareiss(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in col + 1..a[i].len() {
                let v = (&a[r][col] * &a[i][j] - &a[i][col] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    Echelon { rows: a, pivots }
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let n = first.len();
    let ints = rows.iter().map(|r| integer_row(r, &Rat::zero())).collect();
    bareiss(ints, n).pivots.len()
}

/// The unique solution of `rows * x = rhs`.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat], nvars: usize) -> Result<Vec<Rat>, LinalgError> {
    for r in rows {
        if r.len() != nvars {
            return Err(LinalgError::RowLength {
                expected: nvars,
                found: r.len(),
            });
        }
    }
    let ints = rows.iter().zip(rhs).map(|(r, b)| integer_row(r, b)).collect();
    let ech = bareiss(ints, nvars);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|r| !r[nvars].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    if rank < nvars {
        return Err(LinalgError::Underdetermined {
            nullity: nvars - rank,
        });
    }
    let mut x = vec![Rat::zero(); nvars];
    for i in (0..rank).rev() {
        let row = &ech.rows[i];
        let mut acc = Rat::from_integer(row[nvars].clone());
        for j in i + 1..nvars {
            acc -= Rat::from_integer(row[j].clone()) * &x[j];
        }
        x[i] = acc / Rat::from_integer(row[i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn two_by_two() {
        // A - B = 0, 4A - 2B = 2
        let x = solve(&[ints(&[1, -1]), ints(&[4, -2])], &ints(&[0, 2]), 2).unwrap();
        assert_eq!(x, ints(&[1, 1]));
    }

    #[test]
    fn three_by_three() {
        let rows = [ints(&[1, -1, 1]), ints(&[4, -2, 1]), ints(&[9, -3, 1])];
        let x = solve(&rows, &ints(&[0, 0, 2]), 3).unwrap();
        assert_eq!(x, ints(&[1, 3, 2]));
    }

    #[test]
    fn rational_entries() {
        let rows = [vec![rat(1, 2), int(0)], vec![int(0), rat(2, 3)]];
        let x = solve(&rows, &[int(1), int(1)], 2).unwrap();
        assert_eq!(x, vec![int(2), rat(3, 2)]);
    }

    #[test]
    fn underdetermined() {
        assert_eq!(
            solve(&[ints(&[1, 0])], &ints(&[0]), 2),
            Err(LinalgError::Underdetermined { nullity: 1 })
        );
    }

    #[test]
    fn inconsistent() {
        assert_eq!(
            solve(&[ints(&[1]), ints(&[1])], &ints(&[0, 1]), 1),
            Err(LinalgError::Inconsistent)
        );
    }

    #[test]
    fn redundant_rows_are_fine() {
        let rows = [ints(&[1, 1]), ints(&[2, 2]), ints(&[1, -1])];
        let x = solve(&rows, &ints(&[2, 4, 0]), 2).unwrap();
        assert_eq!(x, ints(&[1, 1]));
        assert_eq!(rank(&rows), 2);
    }
}
