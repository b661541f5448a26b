//! The extension pipeline.
//!
//! 1. [`bounded_slab_scan`] finds intervals where the separate extensions
//!    are bounded.
//! 2. [`seed_quadrant`] fills small polydisc quadrants through attached
//!    analytic discs.
//! 3. [`two_sided_fill`] builds a single chart from a certified coefficient
//!    field, or [`march`] recenters charts along `Im z2 = delta`.
//! 4. [`assemble_wedge`] fits a cone under the union of several marches.
//!
//! Charts store `z2`-series at real `x1` nodes; the continuation in `z1`
//! is barycentric Chebyshev interpolation on short panels, which is exact
//! for the holomorphic extension of the coefficient field up to the
//! interpolation error of the panel.

mod atlas;
mod chart;
mod fill;
mod interp;
mod job;
mod march;
mod seed;
mod slab;
mod wedge;

pub use atlas::{
    evaluate_extension, write_evaluation_csv, Diagnostics, Evaluation, ExtensionAtlas, OverlapRecord, SeedCheck,
};
pub use chart::{Chart, Panel, SideCertificate};
pub use fill::two_sided_fill;
pub use interp::{barycentric_weights, chebyshev_nodes, panel_layout};
pub use job::{ContinuationJob, GridConfig, Mode, OracleRef, Tolerances};
pub use march::{march, run};
pub use seed::{seed_quadrant, SeedField, SeedParams, SeedPoint};
pub use slab::{bounded_slab_scan, geometric_schedule, BoundedSlab, ProbeGrid, SlabScan};
pub use wedge::{assemble_wedge, WedgeReport, WEDGE_LABEL};

use num_complex::Complex64;
use thiserror::Error;

use crate::edgewedge::EdgeWedgeError;
use crate::gallery::GalleryError;
use crate::geometry::GeometryError;
use crate::harmonic::HarmonicError;
use crate::taylor::TaylorError;

#[derive(Debug, Error)]
pub enum ContinuationError {
    #[error("invalid job: {0}")]
    Job(String),
    #[error("job mode is {got}, operation needs {want}")]
    Mode { got: &'static str, want: &'static str },
    #[error(transparent)]
    Gallery(#[from] GalleryError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Taylor(#[from] TaylorError),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
    #[error(transparent)]
    EdgeWedge(#[from] EdgeWedgeError),
    #[error("axis {axis}: every sampled sup exceeds the largest bound {largest_l} (smallest sup {best_sup})")]
    ScanFailure { axis: usize, best_sup: f64, largest_l: f64 },
    #[error("disc boundary at theta = {theta:.4} leaves the oracle domain at ({}, {}): {reason}", point[0], point[1])]
    SeedContainment {
        theta: f64,
        point: [Complex64; 2],
        reason: String,
    },
    #[error("disc boundary values reach {sup}, above the slab bound {l}")]
    SeedBound { sup: f64, l: f64 },
    #[error("slice radius collapses to {radius} at x1 = {x1} (need {needed}); not extendible across this point")]
    RadiusCollapse { x1: f64, radius: f64, needed: f64 },
    #[error("certificate failed at step {step} ({side}): {reason}")]
    Certificate {
        step: i32,
        side: &'static str,
        reason: String,
        partial: Option<Box<ExtensionAtlas>>,
    },
    #[error("charts {} and {} disagree by {rel:.3e} (relative) at ({}, {})", charts[0], charts[1], point[0], point[1])]
    Overlap {
        charts: [i32; 2],
        point: [Complex64; 2],
        rel: f64,
        partial: Box<ExtensionAtlas>,
    },
    #[error("({}, {}) lies outside every chart; the nearest z2 center is that of chart {nearest}, at distance {distance}", z[0], z[1])]
    Coverage {
        z: [Complex64; 2],
        nearest: i32,
        distance: f64,
    },
    #[error("wedge assembly needs at least two atlases at distinct delta, got {0}")]
    TooFewAtlases(usize),
    #[error("no positive aperture fits under the chart union: {0}")]
    DegenerateWedge(String),
}
