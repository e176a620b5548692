//! Iterated-residue and localization formulas for Thom series and Thom
//! polynomials, and the K-theory generating-function expansion.

mod kgf;
mod laurent;
mod localization;

pub use kgf::{
    kts_calibrate, kts_gf_expand, kts_gf_laurent, Calibration, KRegion, LabelConvention, Trial, KTS_TARGETS,
};
pub use laurent::{
    laurent_expand, to_dseries, ts_residue_preset, Preset, ResidueIntegrand, ResidueTerm, Window,
};
pub use localization::localization_tp_a2;

use thiserror::Error;

use crate::classes::ClassError;
use crate::ring::RingError;
use crate::thom_series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("denominator factor {0} has no unique dominant variable")]
    NoDominantVariable(String),
    #[error("dominance order must be a permutation of 0..{0}")]
    InvalidOrder(usize),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("numerator of a residue term must be homogeneous")]
    InhomogeneousNumerator,
    #[error("localization sum is not a polynomial")]
    NotPolynomial,
    #[error("need n >= m >= 1, got m = {0}, n = {1}")]
    BadDimensions(u32, u32),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
