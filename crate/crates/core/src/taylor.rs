//! Truncated power series in one complex variable.
//!
//! Coefficients come from the trapezoid rule on a circle (an FFT of the
//! samples), radii from a trailing-window root test, and recentering from
//! repeated synthetic division.

use std::io::Write;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::DomainError;

/// Fraction of trailing indices used by default when estimating a radius.
pub const DEFAULT_TAIL_FRACTION: f64 = 0.25;
/// Minimum window length for the root test.
pub const MIN_TAIL_WINDOW: usize = 8;
/// Multiplier applied to the geometric tail estimate. The root test
/// overestimates the radius by a factor `exp(O(log N / N))`, which the bare
/// estimate does not absorb.
pub const TAIL_SAFETY: f64 = 2.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TaylorError {
    #[error("coefficient extraction failed at {point}: {source}")]
    Extraction { point: Complex64, source: DomainError },
    #[error("series needs at least one coefficient")]
    Empty,
    #[error("quadrature needs M >= 4(N+1) = {need}, got {got}")]
    TooFewNodes { need: usize, got: usize },
    #[error("circle radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("tail window has {got} coefficients, need at least {MIN_TAIL_WINDOW}")]
    ShortTail { got: usize },
    #[error("point at distance {dist} is outside the declared radius {radius}")]
    OutsideDeclared { dist: f64, radius: f64 },
    #[error("series diverges at ratio q = {q:.4} (estimated radius {r_est})")]
    Divergence { q: f64, r_est: f64 },
    #[error("shift {shift} reaches estimated radius {r_est}")]
    OutOfRadius { shift: f64, r_est: f64 },
    #[error("series have {got} coefficients, nu range needs {need}")]
    NuRange { got: usize, need: usize },
}

/// Outcome of the root test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Radius {
    Finite(f64),
    /// Every tail coefficient is zero.
    Polynomial,
}

impl Radius {
    pub fn value(self) -> f64 {
        match self {
            Radius::Finite(r) => r,
            Radius::Polynomial => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaylorSeries {
    pub center: Complex64,
    pub coeffs: Vec<Complex64>,
    pub declared_radius: Option<f64>,
}

/// Trapezoid-rule coefficients `a_0..a_N` of `oracle` about `center`.
///
/// Requires `m >= 4(N+1)`. The first failing sample aborts extraction.
pub fn coeffs_from_oracle<F>(
    oracle: F,
    center: Complex64,
    circle_radius: f64,
    n: usize,
    m: usize,
) -> Result<TaylorSeries, TaylorError>
where
    F: Fn(Complex64) -> Result<Complex64, DomainError>,
{
    let samples = circle_samples(center, circle_radius, n, m)?
        .into_iter()
        .map(|z| oracle(z).map_err(|source| TaylorError::Extraction { point: z, source }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(coeffs_from_samples(samples, center, circle_radius, n))
}

/// The `m` quadrature nodes `center + r e^{2 pi i k / m}`.
pub fn circle_samples(center: Complex64, r: f64, n: usize, m: usize) -> Result<Vec<Complex64>, TaylorError> {
    if !(r.is_finite() && r > 0.0) {
        return Err(TaylorError::BadRadius(r));
    }
    let need = 4 * (n + 1);
    if m < need {
        return Err(TaylorError::TooFewNodes { need, got: m });
    }
    Ok((0..m)
        .map(|k| center + Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / m as f64))
        .collect())
}

/// Coefficients from values already sampled at [`circle_samples`] nodes.
pub fn coeffs_from_samples(mut samples: Vec<Complex64>, center: Complex64, r: f64, n: usize) -> TaylorSeries {
    let m = samples.len();
    FftPlanner::new().plan_fft_forward(m).process(&mut samples);
    let scale = 1.0 / m as f64;
    let mut rpow = 1.0;
    let coeffs = samples
        .iter()
        .take(n + 1)
        .map(|&s| {
            let a = s * scale / rpow;
            rpow *= r;
            a
        })
        .collect();
    TaylorSeries {
        center,
        coeffs,
        declared_radius: None,
    }
}

impl TaylorSeries {
    pub fn new(center: Complex64, coeffs: Vec<Complex64>) -> Result<Self, TaylorError> {
        if coeffs.is_empty() {
            return Err(TaylorError::Empty);
        }
        Ok(Self {
            center,
            coeffs,
            declared_radius: None,
        })
    }

    pub fn with_declared_radius(mut self, r: f64) -> Self {
        self.declared_radius = Some(r);
        self
    }

    /// Highest retained index `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation of the truncated sum.
    pub fn horner(&self, z: Complex64) -> Complex64 {
        let w = z - self.center;
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * w + a)
    }

    /// Truncated sum plus a heuristic geometric tail bound.
    pub fn evaluate(&self, z: Complex64) -> Result<(Complex64, f64), TaylorError> {
        let dist = (z - self.center).norm();
        if let Some(radius) = self.declared_radius {
            if dist >= radius {
                return Err(TaylorError::OutsideDeclared { dist, radius });
            }
        }
        let value = self.horner(z);
        if dist == 0.0 {
            return Ok((value, 0.0));
        }
        let rounding = self.rounding_bound(dist);
        let Some(window) = self.default_window() else {
            return Ok((value, rounding));
        };
        let r_est = match root_test_window(&self.coeffs, window) {
            Radius::Polynomial => return Ok((value, rounding)),
            Radius::Finite(r) => r,
        };
        let q = dist / r_est;
        if q >= 1.0 {
            return Err(TaylorError::Divergence { q, r_est });
        }
        let n = self.order();
        let log_c = (n + 1 - window..=n)
            .filter_map(|nu| {
                let a = self.coeffs[nu].norm();
                (a > 0.0).then(|| a.ln() + nu as f64 * r_est.ln())
            })
            .fold(f64::NEG_INFINITY, f64::max);
        let tail = TAIL_SAFETY * (log_c + (n + 1) as f64 * q.ln()).exp() / (1.0 - q);
        Ok((value, tail + rounding))
    }

    /// Trailing window for the default tail fraction, or `None` when the
    /// series is too short for a radius estimate (it is then treated as an
    /// exact polynomial).
    fn default_window(&self) -> Option<usize> {
        let w = tail_window(self.order(), DEFAULT_TAIL_FRACTION);
        (w >= MIN_TAIL_WINDOW).then_some(w)
    }

    /// Forward error bound of Horner's rule, `2 N u sum |a_nu| |w|^nu`.
    fn rounding_bound(&self, dist: f64) -> f64 {
        let mut p = 1.0;
        let mut s = 0.0;
        for a in &self.coeffs {
            s += a.norm() * p;
            p *= dist;
        }
        2.0 * (self.coeffs.len() as f64) * f64::EPSILON * s
    }

    /// Radius estimate `exp(-max phi_nu)` over the trailing `tail_fraction` of indices.
    pub fn radius_root_test(&self, tail_fraction: f64) -> Result<Radius, TaylorError> {
        let window = tail_window(self.order(), tail_fraction);
        if window < MIN_TAIL_WINDOW {
            return Err(TaylorError::ShortTail { got: window });
        }
        Ok(root_test_window(&self.coeffs, window))
    }

    /// Re-expansion about `new_center`, truncated at the same order.
    ///
    /// Uses repeated synthetic division (the Horner form of
    /// `b_mu = sum a_nu binom(nu, mu) h^(nu-mu)`), which needs no explicit
    /// binomials.
    pub fn recenter(&self, new_center: Complex64) -> Result<TaylorSeries, TaylorError> {
        let h = new_center - self.center;
        let shift = h.norm();
        if let (true, Some(window)) = (shift > 0.0, self.default_window()) {
            if let Radius::Finite(r_est) = root_test_window(&self.coeffs, window) {
                if shift >= r_est {
                    return Err(TaylorError::OutOfRadius { shift, r_est });
                }
            }
        }
        Ok(TaylorSeries {
            center: new_center,
            coeffs: taylor_shift(&self.coeffs, h),
            declared_radius: self.declared_radius.map(|r| r - shift),
        })
    }
}

/// Coefficients of `p(w + h)` given those of `p(w)`.
pub fn taylor_shift(a: &[Complex64], h: Complex64) -> Vec<Complex64> {
    let mut b = a.to_vec();
    if h == Complex64::new(0.0, 0.0) {
        return b;
    }
    let n = b.len();
    for k in 0..n {
        for j in (k..n - 1).rev() {
            let next = b[j + 1];
            b[j] += h * next;
        }
    }
    b
}

fn tail_window(order: usize, fraction: f64) -> usize {
    ((order as f64) * fraction.clamp(0.0, 1.0)).ceil() as usize
}

fn root_test_window(coeffs: &[Complex64], window: usize) -> Radius {
    let n = coeffs.len() - 1;
    let lo = (n + 1 - window.min(n)).max(1);
    let phi_max = (lo..=n)
        .map(|nu| phi(coeffs[nu], nu))
        .fold(f64::NEG_INFINITY, f64::max);
    if phi_max == f64::NEG_INFINITY {
        Radius::Polynomial
    } else {
        Radius::Finite((-phi_max).exp())
    }
}

/// `(1/nu) log|a|`, with `-inf` for a zero coefficient.
pub fn phi(a: Complex64, nu: usize) -> f64 {
    let m = a.norm();
    if m == 0.0 {
        f64::NEG_INFINITY
    } else {
        m.ln() / nu as f64
    }
}

/// `phi_nu(z_1)` sampled on a grid; `values[nu - nu_range[0]][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffLogSequence {
    pub grid: Vec<Complex64>,
    pub values: Vec<Vec<f64>>,
    pub nu_range: [usize; 2],
}

impl CoeffLogSequence {
    pub fn nus(&self) -> std::ops::RangeInclusive<usize> {
        self.nu_range[0]..=self.nu_range[1]
    }

    pub fn row(&self, nu: usize) -> &[f64] {
        &self.values[nu - self.nu_range[0]]
    }

    /// CSV with columns `nu, z1_re, z1_im, phi`; zero coefficients print as `-inf`.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["nu", "z1_re", "z1_im", "phi"])?;
        for nu in self.nus() {
            for (z, v) in self.grid.iter().zip(self.row(nu)) {
                w.write_record(&[nu.to_string(), z.re.to_string(), z.im.to_string(), v.to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Builds `phi_nu(z_j) = (1/nu) log|a_nu(z_j)|` from per-point series.
pub fn phi_sequence(fields: &[(Complex64, TaylorSeries)], nu_range: [usize; 2]) -> Result<CoeffLogSequence, TaylorError> {
    let [lo, hi] = nu_range;
    let lo = lo.max(1);
    for (_, s) in fields {
        if s.order() < hi {
            return Err(TaylorError::NuRange {
                got: s.coeffs.len(),
                need: hi + 1,
            });
        }
    }
    let values = (lo..=hi)
        .map(|nu| fields.iter().map(|(_, s)| phi(s.coeffs[nu], nu)).collect())
        .collect();
    Ok(CoeffLogSequence {
        grid: fields.iter().map(|(z, _)| *z).collect(),
        values,
        nu_range: [lo, hi],
    })
}
