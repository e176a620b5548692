//! Golden fixtures: every explicit polynomial and series the engine is
//! checked against, plus the checks that tie them to the computations.

mod checks;
mod codim;
mod hbar;
mod record;
mod verify;

pub use checks::{monomial_positive_check, schur_positive_check, ssm_sign_check};
pub use codim::{codim_contact, codim_tb, descriptor, descriptor_table, SingularityDescriptor};
pub use hbar::{hbar_substitute, hbar_to_s_report, HbarCoeff, SRow};
pub use record::{Basis, CoefficientDomain, Ell, FixtureRecord, FixtureStore, SeriesTag, Theory};
pub use verify::{registry, verify_all, verify_fixture, Check, CheckReport, VerifyReport};

use thiserror::Error;

use crate::classes::ClassError;
use crate::interpolation::InterpError;
use crate::residue::ResidueError;
use crate::ring::RingError;
use crate::symmetric::SymError;
use crate::thom_series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("fixture file: {0}")]
    Json(String),
    #[error("{0}")]
    Io(String),
    #[error("fixture {id}: invalid label {label:?}")]
    BadLabel { id: String, label: Vec<i32> },
    #[error("fixture {id}: cannot read coefficient {text:?}")]
    BadCoefficient { id: String, text: String },
    #[error("fixture {id}: expected {expected}")]
    WrongBasis { id: String, expected: String },
    #[error("coefficient has a pole at hbar = {0}")]
    PoleAtValue(String),
    #[error("{name} does not occur for l = {ell} (needs l >= {min})")]
    NotDefinedForEll { name: String, ell: i64, min: i64 },
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
