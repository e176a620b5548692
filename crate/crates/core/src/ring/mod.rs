//! Sparse graded polynomials, truncated series and linear-form quotients.

mod linform;
mod mono;
mod poly;
mod ratexpr;
mod series;
mod var;

pub use linform::{divide_by_linform, LinForm};
pub use mono::Mono;
pub use poly::{Poly, Substitution};
pub use ratexpr::RatExpr;
pub use series::TruncSeries;
pub use var::{Family, VarId};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable {0} has no image and is not declared fixed")]
    UnmappedVariable(VarId),
    #[error("series constant term is not 1")]
    NonUnitConstantTerm,
    #[error("linear form does not divide the polynomial")]
    NotDivisible,
    #[error("not a nonzero linear form in degree-one variables")]
    NotLinear,
    #[error("expression is not a polynomial")]
    NotPolynomial,
}
