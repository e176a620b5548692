//! Thom polynomials by interpolation: every prototype germ with torus
//! symmetry gives linear conditions on the unknown coefficients.

use thiserror::Error;

use crate::classes::{euler_class, evaluate_tp, quotient_vars, total_chern, ClassError, WeightList};
use crate::linalg::{self, LinalgError};
use crate::ring::Mono;
use crate::scalar::Rat;
use crate::symmetric::{chern_mono, Partition};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("no prototype data for l = {0}")]
    UnsupportedEll(i64),
    #[error("unknown singularity {0}")]
    UnknownSingularity(String),
    #[error("prototype {proto} has codimension {codim}, above the target's {target}")]
    PrototypeAboveTarget { proto: String, codim: u32, target: u32 },
    #[error("prototype list does not contain the target {0}")]
    MissingTarget(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Class(#[from] ClassError),
}

/// A stable germ with torus symmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct PrototypeGerm {
    pub name: String,
    pub algebra_label: String,
    pub torus_rank: usize,
    pub source: WeightList,
    pub target: WeightList,
    pub codim: u32,
    pub ell: i64,
}

/// Prototype germs for relative dimension `ell`. Only `ell = 0` is
/// populated.
///
/// Weights are over the torus characters `t1` (and `t2` for `I22`):
///
/// - `A1`: `x -> x^2`
/// - `A2`: `(x, u) -> (x^3 + ux, u)`
/// - `A3`: `(x, u, v) -> (x^4 + ux^2 + vx, u, v)`
/// - `A4`: `(x, u, v, w) -> (x^5 + ux^3 + vx^2 + wx, u, v, w)`
/// - `I22`: `(x, y, u, v) -> (x^2 + uy, y^2 + vx, u, v)`
pub fn catalog(ell: i64) -> Result<Vec<PrototypeGerm>, InterpError> {
    if ell != 0 {
        return Err(InterpError::UnsupportedEll(ell));
    }
    let germ = |name: &str, label: &str, rank: usize, src: &[&[i64]], tgt: &[&[i64]], codim: u32| PrototypeGerm {
        name: name.to_string(),
        algebra_label: label.to_string(),
        torus_rank: rank,
        source: WeightList::from_coeffs(src),
        target: WeightList::from_coeffs(tgt),
        codim,
        ell,
    };
    Ok(vec![
        germ("A1", "A_1", 1, &[&[1]], &[&[2]], 1),
        germ("A2", "A_2", 1, &[&[1], &[2]], &[&[3], &[2]], 2),
        germ("A3", "A_3", 1, &[&[1], &[3], &[2]], &[&[4], &[3], &[2]], 3),
        germ("A4", "A_4", 1, &[&[1], &[4], &[3], &[2]], &[&[5], &[4], &[3], &[2]], 4),
        germ(
            "I22",
            "I_22",
            2,
            &[&[1, 0], &[0, 1], &[2, -1], &[-1, 2]],
            &[&[2, 0], &[0, 2], &[2, -1], &[-1, 2]],
            4,
        ),
    ])
}

/// The unknowns: all Chern monomials of one degree, in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzBasis {
    pub degree: u32,
    pub monomials: Vec<Mono>,
}

impl AnsatzBasis {
    pub fn new(degree: u32, width: Option<usize>) -> AnsatzBasis {
        let mut monomials: Vec<Mono> = Partition::all(degree, width).iter().map(chern_mono).collect();
        monomials.sort();
        AnsatzBasis { degree, monomials }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// One linear condition, tagged with where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
    pub proto: String,
    pub t_mono: Mono,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    pub unknowns: Vec<Mono>,
    pub rows: Vec<Row>,
}

/// Rows obtained by restricting the ansatz to `proto`: one per monomial in
/// the torus characters.
pub fn restriction_constraints(
    proto: &PrototypeGerm,
    basis: &AnsatzBasis,
    is_target: bool,
) -> Result<Vec<Row>, InterpError> {
    let d = basis.degree;
    let cf = quotient_vars(&total_chern(&proto.source, d), &total_chern(&proto.target, d), d)?;
    let values: Vec<QPoly> = basis
        .monomials
        .iter()
        .map(|m| evaluate_tp(&QPoly::monomial(m.clone(), Rat::from_integer(1.into())), &cf))
        .collect::<Result<_, _>>()?;
    let rhs = if is_target { euler_class(&proto.source) } else { QPoly::zero() };
    let mut t_monos: Vec<Mono> = values
        .iter()
        .chain(std::iter::once(&rhs))
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    t_monos.sort();
    t_monos.dedup();
    Ok(t_monos
        .into_iter()
        .map(|t| Row {
            coeffs: values.iter().map(|v| v.coeff(&t)).collect(),
            rhs: rhs.coeff(&t),
            proto: proto.name.clone(),
            t_mono: t,
        })
        .collect())
}

/// Assemble the system for `target`, with rows sorted by prototype name and
/// then by torus monomial. Rows that coincide after scaling are kept once.
pub fn assemble(target: &str, protos: &[PrototypeGerm], basis: &AnsatzBasis) -> Result<LinearSystem, InterpError> {
    let mut sorted: Vec<&PrototypeGerm> = protos.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    let mut rows: Vec<Row> = Vec::new();
    let mut seen: Vec<Vec<Rat>> = Vec::new();
    for p in sorted {
        for row in restriction_constraints(p, basis, p.name == target)? {
            let key = normalized(&row);
            if !seen.contains(&key) {
                seen.push(key);
                rows.push(row);
            }
        }
    }
    Ok(LinearSystem {
        unknowns: basis.monomials.clone(),
        rows,
    })
}

fn normalized(row: &Row) -> Vec<Rat> {
    let all: Vec<Rat> = row.coeffs.iter().chain(std::iter::once(&row.rhs)).cloned().collect();
    match all.iter().find(|c| c != &&Rat::default()) {
        Some(p) => {
            let p = p.clone();
            all.iter().map(|c| c / &p).collect()
        }
        None => all,
    }
}

pub fn solve(system: &LinearSystem) -> Result<Vec<Rat>, InterpError> {
    let rows: Vec<Vec<Rat>> = system.rows.iter().map(|r| r.coeffs.clone()).collect();
    let rhs: Vec<Rat> = system.rows.iter().map(|r| r.rhs.clone()).collect();
    Ok(linalg::solve(&rows, &rhs, system.unknowns.len())?)
}

/// Thom polynomial of `target` at relative dimension `ell`.
///
/// `protos` selects prototypes by name; by default every catalog entry of
/// codimension at most that of the target is used.
pub fn tp_interpolate(target: &str, ell: i64, protos: Option<&[&str]>) -> Result<QPoly, InterpError> {
    let cat = catalog(ell)?;
    let tgt = cat
        .iter()
        .find(|p| p.name == target)
        .ok_or_else(|| InterpError::UnknownSingularity(target.to_string()))?;
    let chosen: Vec<PrototypeGerm> = match protos {
        None => cat.iter().filter(|p| p.codim <= tgt.codim).cloned().collect(),
        Some(names) => {
            let mut v = Vec::new();
            for n in names {
                let p = cat
                    .iter()
                    .find(|p| p.name == *n)
                    .ok_or_else(|| InterpError::UnknownSingularity(n.to_string()))?;
                if p.codim > tgt.codim {
                    return Err(InterpError::PrototypeAboveTarget {
                        proto: p.name.clone(),
                        codim: p.codim,
                        target: tgt.codim,
                    });
                }
                v.push(p.clone());
            }
            if !v.iter().any(|p| p.name == target) {
                return Err(InterpError::MissingTarget(target.to_string()));
            }
            v
        }
    };
    let basis = AnsatzBasis::new(tgt.codim, None);
    let system = assemble(target, &chosen, &basis)?;
    let x = solve(&system)?;
    Ok(QPoly::from_terms(basis.monomials.into_iter().zip(x)))
}
