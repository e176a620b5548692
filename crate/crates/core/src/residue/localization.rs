use super::ResidueError;
use crate::classes::to_elementary;
use crate::ring::{Family, LinForm, RatExpr, VarId};
use crate::scalar::{int, Rat};
use crate::QPoly;

fn t(i: u32) -> QPoly {
    QPoly::var(VarId::t(i as i32))
}

fn lin(pairs: &[(u32, i64)]) -> LinForm<Rat> {
    LinForm::new(pairs.iter().map(|&(i, c)| (VarId::t(i as i32), int(c)))).expect("nonzero form")
}

// prod over target roots (beta - x) = sum_k b_k (-x)^(n-k)
fn target_factor(x: &QPoly, n: u32) -> QPoly {
    let mut out = QPoly::zero();
    let minus_x = -x.clone();
    for k in 0..=n {
        let bk = if k == 0 { QPoly::one() } else { QPoly::var(VarId::b(k as i32)) };
        out += &(&bk * &minus_x.pow(n - k));
    }
    out
}

/// `Tp(A_2)` for maps from dimension `m` to `n`, as a polynomial in the
/// source classes `a_i` and target classes `b_j`, by summing fixed-point
/// contributions over the two monomial ideal types of length 3.
///
/// Source Chern roots are `t_1..t_m`. Terms:
///
/// - `(x^3)` at root `i`: weights `{t_i, 2t_i}`, Euler factor 1.
/// - `(x^2, xy, y^2)` at roots `i < j`: weights `{t_i, t_j}`, Euler factor
///   `(t_i - 2t_j)(t_j - 2t_i) / 3`.
///
/// Each contributes `prod_w P_B(w) / (e * prod_{w, a} (a - w))` over the
/// unused roots `a`.
pub fn localization_tp_a2(m: u32, n: u32) -> Result<QPoly, ResidueError> {
    if m == 0 || n < m {
        return Err(ResidueError::BadDimensions(m, n));
    }
    let mut sum: RatExpr<Rat> = RatExpr::zero();
    let mut contribution = |weights: &[(u32, i64)], used: &[u32], euler: Vec<LinForm<Rat>>, scale: i64| {
        let mut numer = QPoly::int(scale);
        for &(i, c) in weights {
            numer = &numer * &target_factor(&t(i).scale(&int(c)), n);
        }
        let mut factors = euler;
        for a in (1..=m).filter(|a| !used.contains(a)) {
            for &(i, c) in weights {
                factors.push(lin(&[(a, 1), (i, -c)]));
            }
        }
        sum = sum.add(&RatExpr::new(numer, &factors));
    };
    for i in 1..=m {
        contribution(&[(i, 1), (i, 2)], &[i], Vec::new(), 1);
    }
    for i in 1..=m {
        for j in i + 1..=m {
            let euler = vec![lin(&[(i, 1), (j, -2)]), lin(&[(j, 1), (i, -2)])];
            contribution(&[(i, 1), (j, 1)], &[i, j], euler, 3);
        }
    }
    let p = sum.to_poly().map_err(|_| ResidueError::NotPolynomial)?;
    let roots: Vec<VarId> = (1..=m as i32).map(VarId::t).collect();
    Ok(to_elementary(&p, &roots, Family::A)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::expand_in_ab;

    fn c(i: i32) -> QPoly {
        QPoly::var(VarId::c(i))
    }

    #[test]
    fn one_to_one() {
        assert_eq!(localization_tp_a2(1, 1).unwrap().to_string(), "2a1^2-3a1b1+b1^2");
    }

    #[test]
    fn two_to_two() {
        let tp = &c(1).pow(2) + &c(2);
        assert_eq!(localization_tp_a2(2, 2).unwrap(), expand_in_ab(&tp, 2, 2).unwrap());
    }

    #[test]
    fn two_to_three() {
        let tp = &(&c(2).pow(2) + &(&c(1) * &c(3))) + &c(4).scale(&int(2));
        assert_eq!(localization_tp_a2(2, 3).unwrap(), expand_in_ab(&tp, 2, 3).unwrap());
    }

    #[test]
    fn bad_dimensions() {
        assert_eq!(localization_tp_a2(3, 2), Err(ResidueError::BadDimensions(3, 2)));
        assert_eq!(localization_tp_a2(0, 2), Err(ResidueError::BadDimensions(0, 2)));
    }
}
