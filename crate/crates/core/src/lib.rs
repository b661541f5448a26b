//! Numerical holomorphic extension for functions of two complex variables
//! that are separately analytic in one variable and extendible in the other.
//!
//! The pipeline scans bounded slabs, seeds values through attached analytic
//! discs, extracts Taylor coefficient fields, certifies them with a
//! Hartogs-type subharmonic bound and marches recentered charts along the
//! edge. See the crate `examples/` for one runnable program per stage.

pub mod cli;
pub mod continuation;
pub mod edgewedge;
pub mod gallery;
pub mod geometry;
pub mod harmonic;
pub mod taylor;

use thiserror::Error;

pub use num_complex::Complex64;

/// A point (or input) at which an oracle or a model is not defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct DomainError(pub String);

impl DomainError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] geometry::GeometryError),
    #[error(transparent)]
    Taylor(#[from] taylor::TaylorError),
    #[error(transparent)]
    Harmonic(#[from] harmonic::HarmonicError),
    #[error(transparent)]
    EdgeWedge(#[from] edgewedge::EdgeWedgeError),
    #[error(transparent)]
    Continuation(#[from] continuation::ContinuationError),
    #[error(transparent)]
    Gallery(#[from] gallery::GalleryError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
