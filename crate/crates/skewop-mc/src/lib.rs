//! Monte Carlo cross-validation for the symbolic skew orthogonal
//! polynomials.
//!
//! The symbolic engine in `skewop-core` claims exact values for
//! `< det(z - G) >` and `< det(z - G) Tr G >`.  This crate checks those
//! claims the blunt way: draw matrices, run Faddeev-LeVerrier on each,
//! average, and compare every coefficient against the exact target in units
//! of its standard error.
//!
//! Reproducibility contract: a run is determined by (ensemble, estimand,
//! samples, seed, chunk size) alone.  Samples are generated in fixed-size
//! chunks, each chunk from its own counter-based RNG stream, and chunk
//! statistics are merged in index order — so the report is bit-identical no
//! matter how many worker threads execute the chunks.

pub mod charpoly;
pub mod estimate;
pub mod sampler;

use skewop_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McError {
    #[error(transparent)]
    Domain(#[from] CoreError),

    #[error("sample produced non-finite matrix entries")]
    NonFiniteSample,

    #[error("invalid ensemble construction: {detail}")]
    InvalidEnsemble { detail: String },

    #[error("moment guard violated: {detail}")]
    MomentGuard { detail: String },

    #[error(
        "the quaternion spherical sampler dictionary is validated only at half-size 1; \
         opt in explicitly to use it"
    )]
    AdvisoryEnsemble,

    #[error("invalid run configuration: {detail}")]
    InvalidConfig { detail: String },
}

pub use charpoly::{charpoly_coeffs, CMat};
pub use estimate::{run_mc, Estimand, McConfig, McReport, Verdict};
pub use sampler::McEnsemble;
