//! Detectors for the two failure modes: non-tempered growth near the edge
//! and collapse of the per-slice radius of convergence.

use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::SeparateOracle;
use crate::taylor::{coeffs_from_oracle, Radius, DEFAULT_TAIL_FRACTION};

pub const DEFAULT_K_MAX: f64 = 8.0;
pub const DEFAULT_NU_MAX: usize = 40;
pub const DEFAULT_PROBE_COEFFS: usize = 256;
/// Circle radius as a fraction of the distance to the slice boundary.
const CIRCLE_FRACTION: f64 = 0.9;
/// Radius used when the slice domain is unbounded.
const UNBOUNDED_CIRCLE: f64 = 1.0;
/// Required drop from first to last radius for a collapse verdict.
const COLLAPSE_RATIO: f64 = 0.5;
/// Relative size below which a scaled coefficient is rounding noise.
const POLY_NOISE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TemperednessVerdict {
    Tempered,
    NotTempered,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TemperednessRow {
    pub nu: usize,
    pub x1: f64,
    pub y2: f64,
    pub abs_f: f64,
    /// `d log|f| / d log(1/y)` against the previous row.
    pub local_slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TemperednessReport {
    pub oracle: String,
    pub x2: f64,
    pub k_max: f64,
    /// Least-squares exponent of `|f| ~ y^-k` over the second half of the rows.
    pub fitted_k: f64,
    pub rows: Vec<TemperednessRow>,
    pub errors: Vec<(usize, String)>,
    pub verdict: TemperednessVerdict,
}

impl TemperednessReport {
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["nu", "x1", "y2", "abs_f", "local_slope"])?;
        for r in &self.rows {
            w.write_record([
                r.nu.to_string(),
                r.x1.to_string(),
                r.y2.to_string(),
                r.abs_f.to_string(),
                r.local_slope.map(|s| s.to_string()).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x / n, b + y / n));
    let (sxy, sxx) = pts
        .iter()
        .fold((0.0, 0.0), |(a, b), &(x, y)| (a + (x - mx) * (y - my), b + (x - mx) * (x - mx)));
    if sxx > 0.0 {
        sxy / sxx
    } else {
        0.0
    }
}

/// Samples `|f(1/nu^2, x2 + i/nu)|` for `nu = 2..=nu_max`.
///
/// The verdict is `not_tempered` when the last local exponent exceeds
/// `k_max` and the exponents grow along the tail, i.e. no fixed power of
/// `1/y` dominates.
pub fn temperedness_probe(oracle: &SeparateOracle, x2: f64, k_max: f64, nu_max: usize) -> TemperednessReport {
    let samples: Vec<(usize, Result<TemperednessRow, String>)> = (2..=nu_max.max(3))
        .into_par_iter()
        .map(|nu| {
            let n = nu as f64;
            let (x1, y2) = (1.0 / (n * n), 1.0 / n);
            let row = oracle
                .eval_z2_slice(x1, Complex64::new(x2, y2))
                .map(|v| TemperednessRow {
                    nu,
                    x1,
                    y2,
                    abs_f: v.norm(),
                    local_slope: None,
                })
                .map_err(|e| e.to_string());
            (nu, row)
        })
        .collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (nu, r) in samples {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => errors.push((nu, e)),
        }
    }
    let log_abs = |r: &TemperednessRow| r.abs_f.max(f64::MIN_POSITIVE).ln();
    for i in 1..rows.len() {
        let (a, b) = (&rows[i - 1], &rows[i]);
        let slope = (log_abs(b) - log_abs(a)) / ((a.y2 / b.y2).ln());
        rows[i].local_slope = Some(slope);
    }
    let tail: Vec<(f64, f64)> = rows[rows.len() / 2..]
        .iter()
        .map(|r| (-r.y2.ln(), log_abs(r)))
        .collect();
    let fitted_k = least_squares_slope(&tail).max(0.0);
    let slopes: Vec<f64> = rows[rows.len() / 2..].iter().filter_map(|r| r.local_slope).collect();
    let last = slopes.last().copied().unwrap_or(0.0);
    let growing = slopes.len() >= 2 && slopes.windows(2).all(|w| w[1] > w[0]);
    let verdict = if last > k_max && growing {
        TemperednessVerdict::NotTempered
    } else {
        TemperednessVerdict::Tempered
    };
    TemperednessReport {
        oracle: oracle.name.clone(),
        x2,
        k_max,
        fitted_k,
        rows,
        errors,
        verdict,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CollapseVerdict {
    /// Radii bounded below along the path.
    Bounded,
    NotCrExtendible,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusRow {
    pub point: [f64; 2],
    pub circle_radius: f64,
    /// `None` when extraction failed; see `error`.
    pub radius: Option<Radius>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusCollapseReport {
    pub oracle: String,
    /// Variable in which the series is taken (1 or 2).
    pub axis: usize,
    pub n_coeffs: usize,
    pub rows: Vec<RadiusRow>,
    pub verdict: CollapseVerdict,
}

impl RadiusCollapseReport {
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x1", "x2", "circle_radius", "radius"])?;
        for r in &self.rows {
            let radius = match r.radius {
                Some(Radius::Finite(v)) => v.to_string(),
                Some(Radius::Polynomial) => "inf".into(),
                None => String::new(),
            };
            w.write_record([
                r.point[0].to_string(),
                r.point[1].to_string(),
                r.circle_radius.to_string(),
                radius,
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Tail coefficients all at quadrature rounding level: the slice is a
/// polynomial as far as the samples can tell.
fn resolved_polynomial(coeffs: &[Complex64], r: f64) -> bool {
    let scaled: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(nu, a)| a.norm() * r.powi(nu as i32))
        .collect();
    let peak = scaled.iter().copied().fold(0.0, f64::max);
    let lo = coeffs.len() - (coeffs.len() as f64 * DEFAULT_TAIL_FRACTION).ceil() as usize;
    scaled[lo..].iter().all(|&c| c <= POLY_NOISE * peak)
}

/// Root-test radius of the slice series in variable `axis` at each real point of `path`.
///
/// The quadrature circle stays at `0.9` of the declared slice radius. Failed
/// extractions are recorded and skipped. The verdict is `not_cr_extendible`
/// when the finite radii strictly decrease and end at most half the first.
pub fn radius_collapse_probe(
    oracle: &SeparateOracle,
    axis: usize,
    path: &[[f64; 2]],
    n_coeffs: usize,
) -> RadiusCollapseReport {
    let m = (4 * (n_coeffs + 1)).next_power_of_two();
    let rows: Vec<RadiusRow> = path
        .par_iter()
        .map(|&[x1, x2]| {
            let declared = if axis == 1 {
                oracle.meta.eps1.at(x2)
            } else {
                oracle.meta.z2_domain.boundary_distance(x1, Complex64::new(x2, 0.0))
            };
            let circle_radius = if declared.is_finite() {
                CIRCLE_FRACTION * declared
            } else {
                UNBOUNDED_CIRCLE
            };
            let series = if axis == 1 {
                coeffs_from_oracle(
                    |z| oracle.eval_z1_slice(z, x2),
                    Complex64::new(x1, 0.0),
                    circle_radius,
                    n_coeffs,
                    m,
                )
            } else {
                coeffs_from_oracle(
                    |z| oracle.eval_z2_slice(x1, z),
                    Complex64::new(x2, 0.0),
                    circle_radius,
                    n_coeffs,
                    m,
                )
            };
            let radius = series.and_then(|s| {
                if resolved_polynomial(&s.coeffs, circle_radius) {
                    Ok(Radius::Polynomial)
                } else {
                    s.radius_root_test(DEFAULT_TAIL_FRACTION)
                }
            });
            match radius {
                Ok(r) => RadiusRow {
                    point: [x1, x2],
                    circle_radius,
                    radius: Some(r),
                    error: None,
                },
                Err(e) => RadiusRow {
                    point: [x1, x2],
                    circle_radius,
                    radius: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let finite: Vec<f64> = rows.iter().filter_map(|r| r.radius.map(Radius::value)).collect();
    let collapsing = finite.len() >= 2
        && finite.iter().all(|r| r.is_finite())
        && finite.windows(2).all(|w| w[1] < w[0])
        && finite[finite.len() - 1] <= COLLAPSE_RATIO * finite[0];
    RadiusCollapseReport {
        oracle: oracle.name.clone(),
        axis,
        n_coeffs,
        rows,
        verdict: if collapsing {
            CollapseVerdict::NotCrExtendible
        } else {
            CollapseVerdict::Bounded
        },
    }
}
