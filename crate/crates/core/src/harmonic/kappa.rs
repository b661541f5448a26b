//! Linear-decay constants for harmonic measure near a flat boundary piece.
//!
//! On the upper half-disc the harmonic measure `u` of the arc vanishes on the
//! diameter and grows like `kappa * Im z` away from the corners. The sup of
//! `u / Im z` over `|Re z| <= 0.9`, `Im z in [1e-3, 0.5]` is the constant the
//! Hartogs bound uses. The strip analogue has a series solution.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;

use super::{BoundaryFunction, HalfDiscPoisson, HarmonicError};

pub const KAPPA_RE_MAX: f64 = 0.9;
pub const KAPPA_IM_RANGE: (f64, f64) = (1e-3, 0.5);
const DEFAULT_RESOLUTION: usize = 128;
const MAX_ABS: f64 = 0.99;
/// Arc samples per grid line.
const ARC_PER_RES: usize = 16;

/// Closed form of the half-disc harmonic measure of the arc,
/// `(2/pi) arg((1+z)/(1-z))`.
pub fn chi_halfdisc_exact(z: Complex64) -> f64 {
    2.0 / PI * ((1.0 + z) / (1.0 - z)).arg()
}

/// `u` sampled on the kappa grid. Grid points outside `|z| < 0.99` are
/// skipped and stored as NaN.
#[derive(Debug, Clone)]
pub struct KappaField {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// `u[i][j]` at `xs[j] + i ys[i]`.
    pub u: Vec<Vec<f64>>,
    pub kappa: f64,
    pub arc_samples: usize,
}

impl KappaField {
    /// CSV rows `x, y, u, ratio` for plotting.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "y", "u", "ratio"])?;
        for (i, &y) in self.ys.iter().enumerate() {
            for (j, &x) in self.xs.iter().enumerate() {
                let u = self.u[i][j];
                w.write_record(&[x.to_string(), y.to_string(), u.to_string(), (u / y).to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
}

pub fn kappa_field(resolution: usize) -> Result<KappaField, HarmonicError> {
    if resolution < 64 {
        return Err(HarmonicError::Resolution(resolution, 64));
    }
    let n_arc = ARC_PER_RES * resolution;
    let solver = HalfDiscPoisson::new(&BoundaryFunction::chi_half_disc(n_arc, 16)?)?;
    let xs = linspace(-KAPPA_RE_MAX, KAPPA_RE_MAX, resolution);
    let ys = linspace(KAPPA_IM_RANGE.0, KAPPA_IM_RANGE.1, resolution);
    let u: Vec<Vec<f64>> = ys
        .par_iter()
        .map(|&y| {
            xs.iter()
                .map(|&x| {
                    let z = Complex64::new(x, y);
                    if z.norm() < MAX_ABS {
                        solver.eval(z).map(|v| v.value.re)
                    } else {
                        Ok(f64::NAN)
                    }
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let kappa = u
        .iter()
        .zip(&ys)
        .flat_map(|(row, &y)| row.iter().filter(|v| !v.is_nan()).map(move |v| v / y))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(KappaField {
        xs,
        ys,
        u,
        kappa,
        arc_samples: n_arc,
    })
}

/// Smallest admissible kappa on a `resolution x resolution` grid.
pub fn kappa_estimate(resolution: usize) -> Result<f64, HarmonicError> {
    Ok(kappa_field(resolution)?.kappa)
}

/// Kappa at the default resolution, computed once per process.
pub fn kappa_halfdisc_default() -> f64 {
    static K: OnceLock<f64> = OnceLock::new();
    *K.get_or_init(|| kappa_estimate(DEFAULT_RESOLUTION).expect("default resolution is valid"))
}

/// `cosh(n pi x / h) / cosh(n pi a / h)` without overflow, for `|x| <= a`.
fn cosh_ratio(k: f64, x: f64, a: f64) -> f64 {
    let x = x.abs();
    (k * (x - a)).exp() * (1.0 + (-2.0 * k * x).exp()) / (1.0 + (-2.0 * k * a).exp())
}

/// Harmonic measure of top and sides in the rectangle `[-a, a] x [0, h]`.
pub fn strip_chi(x: f64, y: f64, h: f64, a: f64) -> f64 {
    let s = y / h;
    let mut u = s;
    for n in 1..=20_000 {
        let k = n as f64 * PI / h;
        let r = cosh_ratio(k, x, a);
        let term = 2.0 / (n as f64 * PI) * (n as f64 * PI * s).sin() * r;
        u += term;
        if r < 1e-17 {
            break;
        }
    }
    u
}

/// `d u / d y` at `y = 0`.
fn strip_chi_slope(x: f64, h: f64, a: f64) -> f64 {
    let mut g = 1.0 / h;
    for n in 1..=20_000 {
        let r = cosh_ratio(n as f64 * PI / h, x, a);
        g += 2.0 / h * r;
        if r < 1e-17 {
            break;
        }
    }
    g
}

/// Strip constant: sup of `u / y` over `|x| <= 0.9 a`, `0 < y <= h`, for
/// the rectangle of half-width `a` and height `h`.
pub fn kappa_strip(h: f64, a: f64) -> f64 {
    let xs = linspace(-KAPPA_RE_MAX * a, KAPPA_RE_MAX * a, 65);
    let mut best: f64 = 0.0;
    for &x in &xs {
        best = best.max(strip_chi_slope(x, h, a));
        for k in 1..=64 {
            let y = h * k as f64 / 64.0;
            best = best.max(strip_chi(x, y, h, a) / y);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfdisc_reference_values() {
        let u = chi_halfdisc_exact(Complex64::new(0.0, 0.5));
        assert!((u - 4.0 / PI * 0.5f64.atan()).abs() < 1e-14);
        // y -> 0 slope at |x| = 0.9 is (4/pi)/(1 - x^2)
        let y = 1e-7;
        let slope = chi_halfdisc_exact(Complex64::new(0.9, y)) / y;
        assert!((slope - 4.0 / PI / 0.19).abs() < 1e-4);
    }

    #[test]
    fn kappa_close_to_closed_form() {
        let k = kappa_estimate(64).unwrap();
        let exact = chi_halfdisc_exact(Complex64::new(0.9, 1e-3)) / 1e-3;
        assert!((k - exact).abs() / exact < 1e-3, "{k} vs {exact}");
        assert!(kappa_estimate(32).is_err());
    }

    #[test]
    fn strip_boundary_values() {
        let (h, a) = (0.2, 1.0);
        assert!(strip_chi(0.3, 0.0, h, a).abs() < 1e-12);
        assert!((strip_chi(0.3, h, h, a) - 1.0).abs() < 1e-9);
        assert!((strip_chi(a, 0.05, h, a) - 1.0).abs() < 1e-3);
        let k = kappa_strip(h, a);
        let slope_edge = strip_chi_slope(0.9 * a, h, a);
        assert!(k >= slope_edge && slope_edge > 1.0 / h);
        assert!((k - slope_edge).abs() / k < 1e-6, "{k} {slope_edge}");
    }

    #[test]
    fn strip_chi_is_harmonic() {
        let (h, a) = (0.5, 1.0);
        let (x, y, d) = (0.2, 0.2, 1e-3);
        let lap = strip_chi(x + d, y, h, a) + strip_chi(x - d, y, h, a) + strip_chi(x, y + d, h, a)
            + strip_chi(x, y - d, h, a)
            - 4.0 * strip_chi(x, y, h, a);
        assert!((lap / (d * d)).abs() < 1e-3);
    }

    #[test]
    fn tiny_strip_heights_stay_finite() {
        let k = kappa_strip(1e-13, 1.0);
        assert!(k.is_finite() && (k * 1e-13 - 1.0).abs() < 1e-9);
    }
}
