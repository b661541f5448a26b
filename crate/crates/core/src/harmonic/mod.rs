//! Harmonic-analysis toolkit: Poisson integrals on the disc and half-disc,
//! the normalized Hilbert transform, harmonic-measure constants and the
//! Hartogs-lemma verifier.

mod hartogs;
mod hilbert;
mod kappa;
mod montecarlo;
mod poisson;

pub use hartogs::{
    halfdisc_grid, strip_grid, verify_hartogs, verify_hartogs_with_kappa, Clause, GridDescriptor,
    HartogsCertificate, HartogsDomain, HartogsHypotheses,
};
pub use hilbert::{hilbert_transform, hilbert_values};
pub use kappa::{
    chi_halfdisc_exact, kappa_estimate, kappa_field, kappa_halfdisc_default, kappa_strip, strip_chi, KappaField,
    KAPPA_IM_RANGE, KAPPA_RE_MAX,
};
pub use montecarlo::{harmonic_measure_mc, McEstimate};
pub use poisson::{poisson_disc, poisson_halfdisc, HalfDiscPoisson, PoissonValue};

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarmonicError {
    #[error("boundary function needs at least 16 samples, got {0}")]
    TooFewSamples(usize),
    #[error("expected boundary data on the {expected}, got the {got}")]
    WrongDomain { expected: &'static str, got: &'static str },
    #[error("point {0} is outside the open unit disc")]
    OutsideDisc(Complex64),
    #[error("point {0} lies on (or below) the diameter")]
    OnDiameter(Complex64),
    #[error("Hilbert transform needs real data; sample {index} has imaginary part {im}")]
    NonReal { index: usize, im: f64 },
    #[error("hypothesis clause `{clause}` fails: worst value {worst} exceeds bound {bound}")]
    HypothesisViolation { clause: Clause, worst: f64, bound: f64 },
    #[error("sample grid has no {0} points")]
    MissingRole(&'static str),
    #[error("invalid hypotheses: {0}")]
    BadHypotheses(String),
    #[error("resolution {0} too small (need at least {1})")]
    Resolution(usize, usize),
}

/// Where the samples of a [`BoundaryFunction`] live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryDomain {
    /// Uniform angles `2 pi k / M`, `k = 0..M`.
    Circle,
    /// Arc `e^{i theta}`, `theta = pi k / n_arc` for `k = 0..=n_arc`, followed
    /// by the diameter `x = -1 + 2 j / n_diam`, `j = 0..=n_diam`, stored with
    /// parameter `pi + (x + 1)`.
    HalfDisc { n_arc: usize },
}

impl BoundaryDomain {
    fn name(self) -> &'static str {
        match self {
            BoundaryDomain::Circle => "circle",
            BoundaryDomain::HalfDisc { .. } => "half-disc boundary",
        }
    }
}

/// Samples `(parameter, value)` of a function on a boundary curve, sorted by parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFunction {
    pub domain: BoundaryDomain,
    pub samples: Vec<(f64, Complex64)>,
}

impl BoundaryFunction {
    pub fn circle(values: Vec<Complex64>) -> Result<Self, HarmonicError> {
        let m = values.len();
        if m < 16 {
            return Err(HarmonicError::TooFewSamples(m));
        }
        let samples = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| (2.0 * PI * k as f64 / m as f64, v))
            .collect();
        Ok(Self {
            domain: BoundaryDomain::Circle,
            samples,
        })
    }

    pub fn circle_real(values: &[f64]) -> Result<Self, HarmonicError> {
        Self::circle(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn circle_from_fn(m: usize, f: impl Fn(f64) -> f64) -> Result<Self, HarmonicError> {
        let vals: Vec<f64> = (0..m).map(|k| f(2.0 * PI * k as f64 / m as f64)).collect();
        Self::circle_real(&vals)
    }

    /// Samples `f` on the boundary of the upper unit half-disc.
    pub fn half_disc_from_fn(n_arc: usize, n_diam: usize, f: impl Fn(Complex64) -> f64) -> Result<Self, HarmonicError> {
        if n_arc + n_diam + 2 < 16 || n_arc < 2 || n_diam < 2 {
            return Err(HarmonicError::TooFewSamples(n_arc + n_diam + 2));
        }
        let arc = (0..=n_arc).map(|k| {
            let t = PI * k as f64 / n_arc as f64;
            (t, Complex64::new(f(Complex64::from_polar(1.0, t)), 0.0))
        });
        let diam = (0..=n_diam).map(|j| {
            let x = -1.0 + 2.0 * j as f64 / n_diam as f64;
            (PI + x + 1.0, Complex64::new(f(Complex64::new(x, 0.0)), 0.0))
        });
        Ok(Self {
            domain: BoundaryDomain::HalfDisc { n_arc },
            samples: arc.chain(diam).collect(),
        })
    }

    /// Data 0 on the diameter and 1 on the arc.
    pub fn chi_half_disc(n_arc: usize, n_diam: usize) -> Result<Self, HarmonicError> {
        let mut bf = Self::half_disc_from_fn(n_arc, n_diam, |_| 0.0)?;
        for s in &mut bf.samples[..=n_arc] {
            s.1 = Complex64::new(1.0, 0.0);
        }
        Ok(bf)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.samples.iter().map(|s| s.1).collect()
    }

    fn expect(&self, expected: BoundaryDomain) -> Result<(), HarmonicError> {
        let same = matches!(
            (self.domain, expected),
            (BoundaryDomain::Circle, BoundaryDomain::Circle) | (BoundaryDomain::HalfDisc { .. }, BoundaryDomain::HalfDisc { .. })
        );
        if same {
            Ok(())
        } else {
            Err(HarmonicError::WrongDomain {
                expected: expected.name(),
                got: self.domain.name(),
            })
        }
    }
}
