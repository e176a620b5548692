//! Partitions, Schur polynomials in the quotient Chern classes, and formal
//! Grothendieck expansions.

mod groth;
mod label;
mod schur;

pub use groth::{groth_flat, groth_normalize, GrothExpansion};
pub use label::{render_labelled, Partition, ZSeq};
pub use schur::{chern_mono, gtp, jacobi_trudi, schur_contract, schur_expand, SchurExpansion};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("invalid label {0:?}: entries must be weakly decreasing")]
    InvalidLabel(Vec<i32>),
    #[error("polynomial has a term outside the c variables: {0}")]
    NotChernPolynomial(String),
    #[error("monomial {0} has more factors than the width bound allows")]
    NotInSpan(String),
    #[error("transition matrix in degree {0} is singular")]
    SingularTransition(i64),
    #[error("Grothendieck label {0:?} is wider than 2")]
    UnsupportedWidth(Vec<i32>),
}
