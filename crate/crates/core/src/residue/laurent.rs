use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use super::ResidueError;
use crate::ring::{Family, LinForm, VarId};
use crate::scalar::Rat;
use crate::thom_series::DSeries;
use crate::QPoly;

/// `numerator / prod denominators`, in the variables `z_1..z_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueTerm {
    pub numerator: QPoly,
    pub denominators: Vec<LinForm<Rat>>,
}

/// A sum of residue terms, optionally multiplied by the Vandermonde
/// product `prod_{i<j} (z_i - z_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueIntegrand {
    pub nvars: usize,
    pub terms: Vec<ResidueTerm>,
    pub include_vandermonde: bool,
}

/// Exponent window: every exponent must be at least `floor`. Homogeneity
/// then bounds the exponents from above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub floor: i32,
}

type TSeries = HashMap<Vec<i32>, Rat>;

fn mul_bounded(a: &TSeries, b: &TSeries, bound: &[i32]) -> TSeries {
    let mut out: TSeries = HashMap::new();
    for (ea, ca) in a {
        'inner: for (eb, cb) in b {
            let mut e = Vec::with_capacity(ea.len());
            for j in 0..ea.len() {
                let x = ea[j] + eb[j];
                if x > bound[j] {
                    continue 'inner;
                }
                e.push(x);
            }
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| c != &Rat::default());
    out
}

fn z_index(v: VarId, k: usize) -> Option<usize> {
    (v.family == Family::Z && v.index >= 1 && v.index as usize <= k).then(|| v.index as usize - 1)
}

/// Laurent expansion of the integrand in the region where `order[0]` is the
/// most dominant variable, then `order[1]`, and so on (indices are
/// 0-based: `0` is `z_1`).
///
/// With `t_j = z_{order[j+1]} / z_{order[j]}` every linear factor becomes a
/// monomial times a geometric series in the `t`'s. Returns exponent vectors
/// `(u_1, .., u_k)` of `z_1^u_1 ... z_k^u_k` with all `u_i >= floor`.
pub fn laurent_expand(
    ri: &ResidueIntegrand,
    order: &[usize],
    window: Window,
) -> Result<BTreeMap<Vec<i32>, Rat>, ResidueError> {
    let k = ri.nvars;
    let mut seen = vec![false; k];
    if order.len() != k || order.iter().any(|&v| v >= k || std::mem::replace(&mut seen[v], true)) {
        return Err(ResidueError::InvalidOrder(k));
    }
    let nt = k.saturating_sub(1);
    let mut pos = vec![0; k];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // z_v / z_{order[0]} as a t-monomial
    let zmono = |v: usize| -> Vec<i32> { (0..nt).map(|i| i32::from(i < pos[v])).collect() };

    // Vandermonde in t-coordinates; every term has z-degree k(k-1)/2.
    let mut vt: TSeries = HashMap::from([(vec![0; nt], Rat::from_integer(1.into()))]);
    let mut vdeg = 0;
    if ri.include_vandermonde {
        vdeg = (k * (k - 1) / 2) as i32;
        let mut v: HashMap<Vec<u32>, Rat> = HashMap::from([(vec![0; k], Rat::from_integer(1.into()))]);
        for i in 0..k {
            for j in i + 1..k {
                let mut next: HashMap<Vec<u32>, Rat> = HashMap::new();
                for (e, c) in &v {
                    let mut e1 = e.clone();
                    e1[i] += 1;
                    *next.entry(e1).or_default() += c;
                    let mut e2 = e.clone();
                    e2[j] += 1;
                    *next.entry(e2).or_default() -= c;
                }
                next.retain(|_, c| c != &Rat::default());
                v = next;
            }
        }
        vt = HashMap::new();
        for (e, c) in v {
            let mut te = vec![0; nt];
            for (var, &ex) in e.iter().enumerate() {
                for (slot, z) in te.iter_mut().zip(zmono(var)) {
                    *slot += z * ex as i32;
                }
            }
            *vt.entry(te).or_default() += c;
        }
    }

    let mut out: BTreeMap<Vec<i32>, Rat> = BTreeMap::new();
    for term in &ri.terms {
        // Each linear factor: (1/a) z_d^{-1} sum_n (-small)^n.
        let mut factors: Vec<(Rat, TSeries)> = Vec::new();
        let mut den_pre = vec![0; nt];
        for lin in &term.denominators {
            let mut idx = Vec::with_capacity(lin.coeffs().len());
            for (v, c) in lin.coeffs() {
                let i = z_index(*v, k).ok_or_else(|| ResidueError::NoDominantVariable(lin.to_string()))?;
                idx.push((i, c.clone()));
            }
            let (d, a) = idx.iter().min_by_key(|(i, _)| pos[*i]).cloned().unwrap();
            let zd = zmono(d);
            for (slot, x) in den_pre.iter_mut().zip(&zd) {
                *slot -= x;
            }
            let mut small: TSeries = HashMap::new();
            for (i, c) in &idx {
                if *i == d {
                    continue;
                }
                let e: Vec<i32> = zmono(*i).iter().zip(&zd).map(|(x, y)| x - y).collect();
                *small.entry(e).or_default() -= c / &a;
            }
            factors.push((Rat::from_integer(1.into()) / a, small));
        }
        for (m, coeff) in term.numerator.terms() {
            let mut pre = den_pre.clone();
            let mut num_deg = 0i32;
            for &(v, e) in m.exps() {
                let i = z_index(v, k).ok_or(ResidueError::InhomogeneousNumerator)?;
                num_deg += e as i32;
                for (slot, z) in pre.iter_mut().zip(zmono(i)) {
                    *slot += z * e as i32;
                }
            }
            let sigma = num_deg - term.denominators.len() as i32 + vdeg;
            let upper = sigma - (k as i32 - 1) * window.floor;
            let bound: Vec<i32> = (0..nt).map(|j| (k - 1 - j) as i32 * upper - pre[j]).collect();
            if bound.iter().any(|&b| b < 0) {
                continue;
            }
            let mut s: TSeries = HashMap::from([(vec![0; nt], coeff.clone())]);
            s = mul_bounded(&s, &vt, &bound);
            for (scale, small) in &factors {
                let mut inv: TSeries = HashMap::from([(vec![0; nt], scale.clone())]);
                let mut p: TSeries = HashMap::from([(vec![0; nt], scale.clone())]);
                loop {
                    p = mul_bounded(&p, small, &bound);
                    if p.is_empty() {
                        break;
                    }
                    for (e, c) in &p {
                        *inv.entry(e.clone()).or_default() += c;
                    }
                }
                s = mul_bounded(&s, &inv, &bound);
            }
            for (e, c) in s {
                let te: Vec<i32> = e.iter().zip(&pre).map(|(a, b)| a + b).collect();
                let mut u = vec![0; k];
                if nt == 0 {
                    u[order[0]] = sigma;
                } else {
                    u[order[0]] = sigma - te[0];
                    for j in 1..nt {
                        u[order[j]] = te[j - 1] - te[j];
                    }
                    u[order[k - 1]] = te[nt - 1];
                }
                if u.iter().all(|&x| x >= window.floor) {
                    *out.entry(u).or_default() += c;
                }
            }
        }
    }
    out.retain(|_, c| c != &Rat::default());
    Ok(out)
}

/// Collect exponent vectors into index multisets: `z^u -> d_{u_1} ... d_{u_k}`.
pub fn to_dseries(expansion: &BTreeMap<Vec<i32>, Rat>, width: usize) -> Result<DSeries, ResidueError> {
    let mut s = DSeries::new(width, None);
    for (u, c) in expansion {
        s.add(u, c.clone())?;
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    A3,
    A4,
}

impl FromStr for Preset {
    type Err = ResidueError;
    fn from_str(s: &str) -> Result<Preset, ResidueError> {
        match s {
            "A3" => Ok(Preset::A3),
            "A4" => Ok(Preset::A4),
            other => Err(ResidueError::UnknownPreset(other.to_string())),
        }
    }
}

fn lin(pairs: &[(i32, i64)]) -> LinForm<Rat> {
    LinForm::new(pairs.iter().map(|&(i, c)| (VarId::z(i), Rat::from_integer(c.into())))).unwrap()
}

impl Preset {
    pub fn integrand(self) -> ResidueIntegrand {
        let one = QPoly::one();
        match self {
            Preset::A3 => ResidueIntegrand {
                nvars: 3,
                terms: vec![ResidueTerm {
                    numerator: one,
                    denominators: vec![
                        lin(&[(1, 2), (2, -1)]),
                        lin(&[(1, 2), (3, -1)]),
                        lin(&[(1, 1), (2, 1), (3, -1)]),
                    ],
                }],
                include_vandermonde: true,
            },
            Preset::A4 => {
                let common = vec![
                    lin(&[(2, 1), (3, 1), (1, -1), (4, -1)]),
                    lin(&[(1, 1), (2, 1), (4, -1)]),
                    lin(&[(1, 2), (3, -1)]),
                    lin(&[(1, 2), (4, -1)]),
                ];
                let mut first = vec![lin(&[(1, 2), (2, -1)]), lin(&[(1, 1), (2, 1), (3, -1)])];
                first.extend(common.iter().cloned());
                let mut second = vec![lin(&[(1, 1), (3, 1), (4, -1)])];
                second.extend(common);
                ResidueIntegrand {
                    nvars: 4,
                    terms: vec![
                        ResidueTerm {
                            numerator: one.clone(),
                            denominators: first,
                        },
                        ResidueTerm {
                            numerator: -one,
                            denominators: second,
                        },
                    ],
                    include_vandermonde: true,
                }
            }
        }
    }

    /// Common index sum of the Thom series (`b(Q) - width`).
    pub fn index_sum(self) -> i32 {
        0
    }

    pub fn width(self) -> usize {
        match self {
            Preset::A3 => 3,
            Preset::A4 => 4,
        }
    }
}

/// Thom series from the residue formula, complete down to `index_floor`.
///
/// The expansion region has `z_k` most dominant. Only keys with the
/// series' index sum are kept: the second fraction of the `A4` integrand has
/// degree one higher than the first and contributes only off-sum keys.
pub fn ts_residue_preset(preset: Preset, index_floor: i32) -> Result<DSeries, ResidueError> {
    let ri = preset.integrand();
    let order: Vec<usize> = (0..ri.nvars).rev().collect();
    let exp = laurent_expand(&ri, &order, Window { floor: index_floor })?;
    let mut ts = to_dseries(&exp, ri.nvars)?.project_index_sum(preset.index_sum());
    ts.set_index_floor(Some(index_floor));
    Ok(ts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::thom_series::specialize_d;

    #[test]
    fn trivial_integrand() {
        let ri = ResidueIntegrand {
            nvars: 1,
            terms: vec![ResidueTerm {
                numerator: QPoly::one(),
                denominators: vec![],
            }],
            include_vandermonde: false,
        };
        let e = laurent_expand(&ri, &[0], Window { floor: -3 }).unwrap();
        assert_eq!(e, BTreeMap::from([(vec![0], int(1))]));
        let ts = to_dseries(&e, 1).unwrap();
        assert_eq!(specialize_d(&ts, 4).unwrap().to_string(), "c5");
    }

    #[test]
    fn geometric_series() {
        let ri = ResidueIntegrand {
            nvars: 2,
            terms: vec![ResidueTerm {
                numerator: QPoly::one(),
                denominators: vec![lin(&[(1, 2), (2, -1)])],
            }],
            include_vandermonde: false,
        };
        let e = laurent_expand(&ri, &[0, 1], Window { floor: -2 }).unwrap();
        assert_eq!(e.get(&vec![-1, 0]), Some(&rat(1, 2)));
        assert_eq!(e.get(&vec![-2, 1]), Some(&rat(1, 4)));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn a3_coefficients() {
        let ts = ts_residue_preset(Preset::A3, -3).unwrap();
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
            assert_eq!(ts.coeff(&k), int(v), "key {k:?}");
        }
    }

    #[test]
    fn a4_at_l0() {
        let ts = ts_residue_preset(Preset::A4, -1).unwrap();
        assert_eq!(specialize_d(&ts, 0).unwrap().to_string(), "c1^4+6c1^2c2+9c1c3+2c2^2+6c4");
    }

    #[test]
    fn bad_order() {
        let ri = Preset::A3.integrand();
        assert_eq!(
            laurent_expand(&ri, &[0, 0, 1], Window { floor: -1 }),
            Err(ResidueError::InvalidOrder(3))
        );
    }

    #[test]
    fn foreign_variable_in_denominator() {
        let ri = ResidueIntegrand {
            nvars: 1,
            terms: vec![ResidueTerm {
                numerator: QPoly::one(),
                denominators: vec![lin(&[(1, 1), (2, 1)])],
            }],
            include_vandermonde: false,
        };
        assert!(matches!(
            laurent_expand(&ri, &[0], Window { floor: -1 }),
            Err(ResidueError::NoDominantVariable(_))
        ));
    }
}
