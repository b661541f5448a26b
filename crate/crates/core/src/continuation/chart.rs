use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::interp::{barycentric_weights, chebyshev_nodes, panel_layout};
use super::{ContinuationError, ContinuationJob};
use crate::gallery::SeparateOracle;
use crate::geometry::{Interval, Strip, StripSide};
use crate::harmonic::{strip_grid, verify_hartogs, HarmonicError, HartogsCertificate, HartogsDomain, HartogsHypotheses};
use crate::taylor::{circle_samples, coeffs_from_samples, CoeffLogSequence, TaylorError, TaylorSeries};

/// `z2`-series at the Chebyshev nodes of one `x1` panel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Panel {
    pub extent: Interval,
    pub nodes: Vec<f64>,
    pub series: Vec<TaylorSeries>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideCertificate {
    pub side: StripSide,
    pub strip_height: f64,
    pub certificate: HartogsCertificate,
}

/// `{x1 + i y1 : x1 in real_extent, |y1| < z1_height} x D(center, radius)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chart {
    pub id: i32,
    pub center: Complex64,
    pub radius: f64,
    pub quadrature_radius: f64,
    pub z1_height: f64,
    pub real_extent: Interval,
    /// Largest sample modulus over all quadrature circles.
    pub sample_max: f64,
    pub certificates: Vec<SideCertificate>,
    pub panels: Vec<Panel>,
}

impl Chart {
    /// Extracts `N + 1` coefficients about `center` on circles of radius
    /// `quadrature_radius` at every panel node.
    pub(crate) fn build(
        oracle: &SeparateOracle,
        job: &ContinuationJob,
        id: i32,
        center: Complex64,
        quadrature_radius: f64,
        radius: f64,
    ) -> Result<Self, ContinuationError> {
        let real_extent = oracle.meta.omega[0];
        let n = job.n_coeffs;
        let m = job.quadrature_nodes();
        let circle = circle_samples(center, quadrature_radius, n, m)?;
        let extents = panel_layout(real_extent, job.grid.panel_width);
        let nodes: Vec<Vec<f64>> = extents
            .iter()
            .map(|e| chebyshev_nodes(e.lo, e.hi, job.grid.panel_nodes))
            .collect();
        let flat: Vec<f64> = nodes.iter().flatten().copied().collect();
        let extracted: Vec<(TaylorSeries, f64)> = flat
            .par_iter()
            .map(|&x1| {
                let samples = circle
                    .iter()
                    .map(|&z| {
                        oracle
                            .eval_z2_slice(x1, z)
                            .map_err(|source| TaylorError::Extraction { point: z, source })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let peak = samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
                Ok((coeffs_from_samples(samples, center, quadrature_radius, n), peak))
            })
            .collect::<Result<_, TaylorError>>()?;
        let sample_max = extracted.iter().map(|e| e.1).fold(0.0, f64::max);
        let mut series = extracted.into_iter().map(|e| e.0);
        let panels = extents
            .into_iter()
            .zip(nodes)
            .map(|(extent, nodes)| Panel {
                extent,
                series: series.by_ref().take(nodes.len()).collect(),
                nodes,
            })
            .collect();
        Ok(Self {
            id,
            center,
            radius,
            quadrature_radius,
            z1_height: 0.0,
            real_extent,
            sample_max,
            certificates: vec![],
            panels,
        })
    }

    fn panel_for(&self, x: f64) -> &Panel {
        let p = self
            .panels
            .iter()
            .position(|p| x < p.extent.hi)
            .unwrap_or(self.panels.len() - 1);
        &self.panels[p]
    }

    /// Membership in the chart domain; real `z1` always belongs when `Re z1`
    /// is in the extent.
    pub fn contains(&self, z: [Complex64; 2]) -> bool {
        self.real_extent.contains_real(z[0].re)
            && (z[0].im == 0.0 || z[0].im.abs() < self.z1_height)
            && (z[1] - self.center).norm() < self.radius
    }

    /// Interpolated coefficients `a_nu(z1)`.
    pub fn coeffs_at(&self, z1: Complex64) -> Vec<Complex64> {
        let panel = self.panel_for(z1.re);
        let w = barycentric_weights(&panel.nodes, z1);
        let mut out = vec![Complex64::new(0.0, 0.0); panel.series[0].coeffs.len()];
        for (l, s) in w.iter().zip(&panel.series) {
            for (o, a) in out.iter_mut().zip(&s.coeffs) {
                *o += l * a;
            }
        }
        out
    }

    /// Value and propagated tail bound `sum_k |l_k(z1)| tail_k(z2)`.
    pub fn evaluate(&self, z: [Complex64; 2]) -> Result<(Complex64, f64), TaylorError> {
        let panel = self.panel_for(z[0].re);
        let w = barycentric_weights(&panel.nodes, z[0]);
        let mut value = Complex64::new(0.0, 0.0);
        let mut tail = 0.0;
        for (l, s) in w.iter().zip(&panel.series) {
            if *l == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (v, t) = s.evaluate(z[1])?;
            value += l * v;
            tail += l.norm() * t;
        }
        Ok((value, tail))
    }

    /// Normalized `phi_nu(z1) = (1/nu) log(|a_nu(z1)| / M) + log R` on `grid`,
    /// so that Cauchy's estimate makes it nonpositive on the real axis.
    fn phi_field(&self, grid: &[Complex64]) -> CoeffLogSequence {
        let n = self.panels[0].series[0].order();
        let coeffs: Vec<Vec<Complex64>> = grid.par_iter().map(|&z| self.coeffs_at(z)).collect();
        let (log_m, log_r) = (self.sample_max.max(f64::MIN_POSITIVE).ln(), self.quadrature_radius.ln());
        let values = (1..=n)
            .map(|nu| {
                coeffs
                    .iter()
                    .map(|a| {
                        let m = a[nu].norm();
                        if m == 0.0 {
                            f64::NEG_INFINITY
                        } else {
                            (m.ln() - log_m) / nu as f64 + log_r
                        }
                    })
                    .collect()
            })
            .collect();
        CoeffLogSequence {
            grid: grid.to_vec(),
            values,
            nu_range: [1, n],
        }
    }

    /// Certifies the coefficient field on both half-strips of `strip_height`
    /// with boundary bound `l` and returns the admissible `z1` height
    /// `(log(R / radius) - alpha/2) / (l kappa)`.
    pub(crate) fn certify(&mut self, job: &ContinuationJob, strip_height: f64, l: f64) -> Result<f64, ContinuationError> {
        let tol = &job.tolerances;
        let ny = job.grid.hartogs_ny;
        let mut hyp = HartogsHypotheses::new(l, tol.global_factor * l, 0.5 * job.alpha, strip_height / ny as f64)?;
        hyp.tail_fraction = tol.tail_fraction;
        hyp.tolerance = tol.hartogs;
        let mut kappa = 0.0;
        for (side, label) in [(StripSide::Upper, "upper"), (StripSide::Lower, "lower")] {
            let strip = Strip::new(self.real_extent, strip_height, side)?;
            let grid = strip_grid(&strip, job.grid.hartogs_nx, ny);
            let seq = self.phi_field(&grid);
            let fail = |reason: String| ContinuationError::Certificate {
                step: self.id,
                side: label,
                reason,
                partial: None,
            };
            let cert = match verify_hartogs(&seq, &HartogsDomain::Strip(strip), &hyp) {
                Ok(c) => c,
                Err(e @ HarmonicError::HypothesisViolation { .. }) => return Err(fail(e.to_string())),
                Err(e) => return Err(e.into()),
            };
            if !cert.pass {
                return Err(fail(format!(
                    "bound fails at the last index (worst slack {:.3e})",
                    cert.max_violation
                )));
            }
            kappa = cert.kappa;
            self.certificates.push(SideCertificate {
                side,
                strip_height,
                certificate: cert,
            });
        }
        let gain = (self.quadrature_radius / self.radius).ln() - 0.5 * job.alpha;
        if gain <= 0.0 {
            return Err(ContinuationError::Job(format!(
                "chart radius {} is too close to the quadrature radius {} for alpha = {}",
                self.radius, self.quadrature_radius, job.alpha
            )));
        }
        Ok(gain / (l * kappa))
    }
}
