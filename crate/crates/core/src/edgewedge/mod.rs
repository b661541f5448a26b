//! Analytic discs attached to the union of two half-strips, and numerical
//! checks of the Cauchy-formula identity behind continuous boundary values.

mod cauchy;
mod continuity;
mod cutoff;
mod disc;

pub use cauchy::{cauchy_formula_residual, CauchyResidual};
pub use continuity::{uniform_continuity_modulus, ContinuityModulus};
pub use cutoff::{smoothstep, CutoffSpec};
pub use disc::{attach_disc, boundary_in_union, default_bump, extend_at_center, AnalyticDisc, BumpProfile};

use thiserror::Error;

use crate::DomainError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EdgeWedgeError {
    #[error("disc grid must have at least 64 points, got {0}")]
    GridTooSmall(usize),
    #[error("bump index must be 1 or 2, got {0}")]
    BumpIndex(u8),
    #[error("bump profiles use different grids ({0} vs {1})")]
    GridMismatch(usize, usize),
    #[error("disc center misses x_o + i lambda by {0:.3e}; refine the boundary grid")]
    TransformResolution(f64),
    #[error("boundary data has {got} samples, the disc has {want}")]
    SampleCount { got: usize, want: usize },
    #[error("invalid cutoff: {0}")]
    BadCutoff(String),
    #[error("y_n = {y_n} must lie in (0, {max})")]
    HeightOutOfRange { y_n: f64, max: f64 },
    #[error("quadrature does not converge: residual {coarse:.3e} -> {fine:.3e} under refinement")]
    Instability { coarse: f64, fine: f64 },
    #[error("need at least {min} quadrature points, got {got}")]
    TooFewPoints { got: usize, min: usize },
    #[error(transparent)]
    Domain(#[from] DomainError),
}
