//! Both sides of the half-plane Cauchy-Pompeiu identity
//!
//! `chi f(x_n + i y_n) = (1/pi) int chi f(x_n + xi y_n) / (xi^2 + 1) dxi
//!                       - (2i/pi) y_n iint dbar(chi f)(z) / ((z - x_n)^2 + y_n^2) dA(z)`
//!
//! for `f` holomorphic above the axis. The line integral is taken in the
//! angle `phi = atan(xi)`, which removes the kernel; the area integral runs
//! over the support of `dbar chi`. Both use composite two-point
//! Gauss-Legendre panels aligned with the breakpoints of `chi`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{CutoffSpec, EdgeWedgeError};

const GL2: [f64; 2] = [-0.577_350_269_189_625_8, 0.577_350_269_189_625_8];
const MIN_POINTS: usize = 24;
/// Below this level residual changes are rounding noise.
const NOISE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CauchyResidual {
    pub lhs: Complex64,
    pub boundary_term: Complex64,
    pub area_term: Complex64,
    /// `|lhs - boundary_term - area_term|` at `points` nodes per axis.
    pub residual: f64,
    /// The same at half the nodes.
    pub residual_coarse: f64,
    pub points: usize,
}

/// Nodes and weights for `panels` equal two-point panels on `[a, b]`.
fn panel_rule(a: f64, b: f64, panels: usize) -> impl Iterator<Item = (f64, f64)> {
    let h = (b - a) / panels as f64;
    (0..panels).flat_map(move |p| {
        let mid = a + h * (p as f64 + 0.5);
        GL2.iter().map(move |&g| (mid + 0.5 * h * g, 0.5 * h))
    })
}

/// `points` nodes split evenly over consecutive segments of `breaks`.
fn composite(breaks: &[f64], points: usize) -> Vec<(f64, f64)> {
    let segs = breaks.len() - 1;
    let panels = (points / (2 * segs)).max(1);
    breaks.windows(2).flat_map(|w| panel_rule(w[0], w[1], panels)).collect()
}

fn sides<F>(f: &F, chi: &CutoffSpec, x_prime: &[f64], x_n: f64, y_n: f64, points: usize) -> (Complex64, Complex64)
where
    F: Fn(&[f64], Complex64) -> Complex64 + Sync,
{
    let phi_of = |x: f64| ((x - x_n) / y_n).atan();
    let phis: Vec<f64> = chi.s_breaks().iter().map(|&x| phi_of(x)).collect();
    let boundary: Complex64 = composite(&phis, points)
        .into_iter()
        .map(|(phi, w)| {
            let x = Complex64::new(x_n + y_n * phi.tan(), 0.0);
            chi.chi(x) * f(x_prime, x) * w
        })
        .sum::<Complex64>()
        / PI;

    let [b0, a0, a1, b1] = chi.s_breaks();
    let [t0, t1, t2] = chi.t_breaks();
    let s_low = composite(&[b0, a0, a1, b1], points);
    let t_low = composite(&[t0, t1], points / 2);
    let t_high = composite(&[t1, t2], points / 2);
    let s_side: Vec<(f64, f64)> = s_low.iter().copied().filter(|&(s, _)| s < a0 || s > a1).collect();
    let cell = |s_nodes: &[(f64, f64)], t_nodes: &[(f64, f64)]| -> Complex64 {
        let rows: Vec<Complex64> = s_nodes
            .par_iter()
            .map(|&(s, ws)| {
                t_nodes
                    .iter()
                    .map(|&(t, wt)| {
                        let z = Complex64::new(s, t);
                        let d = z - x_n;
                        f(x_prime, z) * chi.dbar_chi(z) / (d * d + y_n * y_n) * (ws * wt)
                    })
                    .sum::<Complex64>()
            })
            .collect();
        rows.into_iter().sum()
    };
    let area_integral = cell(&s_side, &t_low) + cell(&s_low, &t_high);
    let area = Complex64::new(0.0, -2.0 / PI) * y_n * area_integral;
    (boundary, area)
}

/// Evaluates both sides at `points` and `points / 2` nodes per axis.
///
/// Requires `x_n` inside the inner interval of `chi` and
/// `0 < y_n < height / 2`, which keeps the kernel poles off the support of
/// `dbar chi`.
pub fn cauchy_formula_residual<F>(
    f: F,
    chi: &CutoffSpec,
    x_prime: &[f64],
    x_n: f64,
    y_n: f64,
    points: usize,
) -> Result<CauchyResidual, EdgeWedgeError>
where
    F: Fn(&[f64], Complex64) -> Complex64 + Sync,
{
    let y_max = 0.5 * chi.height;
    if !(y_n > 0.0 && y_n < y_max) {
        return Err(EdgeWedgeError::HeightOutOfRange { y_n, max: y_max });
    }
    if !chi.inner.contains_real(x_n) {
        return Err(EdgeWedgeError::BadCutoff(format!("x_n = {x_n} is outside the inner interval")));
    }
    if points < MIN_POINTS {
        return Err(EdgeWedgeError::TooFewPoints {
            got: points,
            min: MIN_POINTS,
        });
    }
    let z = Complex64::new(x_n, y_n);
    let lhs = chi.chi(z) * f(x_prime, z);
    let residual_at = |n: usize| {
        let (b, a) = sides(&f, chi, x_prime, x_n, y_n, n);
        ((lhs - b - a).norm(), b, a)
    };
    let (residual_coarse, _, _) = residual_at(points / 2);
    let (residual, boundary_term, area_term) = residual_at(points);
    if residual > NOISE_FLOOR && residual > 2.0 * residual_coarse {
        return Err(EdgeWedgeError::Instability {
            coarse: residual_coarse,
            fine: residual,
        });
    }
    Ok(CauchyResidual {
        lhs,
        boundary_term,
        area_term,
        residual,
        residual_coarse,
        points,
    })
}
