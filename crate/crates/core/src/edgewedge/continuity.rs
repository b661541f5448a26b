use num_complex::Complex64;
use serde::Serialize;

use crate::geometry::{Strip, StripSide};

/// Sup gaps `|f(x + i y) - f(x)|` over a real grid, one row per height.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContinuityModulus {
    pub rows: Vec<(f64, f64)>,
    /// Gaps strictly decrease along the sequence.
    pub decreasing: bool,
}

const X_POINTS: usize = 201;

/// Samples the gap on `X_POINTS` points of the closed real extent of
/// `region`, for each `y` (taken on the strip's side).
pub fn uniform_continuity_modulus<F>(f: F, region: &Strip, ys: &[f64]) -> ContinuityModulus
where
    F: Fn(Complex64) -> Complex64,
{
    let sign = if region.side == StripSide::Lower { -1.0 } else { 1.0 };
    let (lo, hi) = (region.real_extent.lo, region.real_extent.hi);
    let xs: Vec<f64> = (0..X_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (X_POINTS - 1) as f64)
        .collect();
    let base: Vec<Complex64> = xs.iter().map(|&x| f(Complex64::new(x, 0.0))).collect();
    let rows: Vec<(f64, f64)> = ys
        .iter()
        .map(|&y| {
            let gap = xs
                .iter()
                .zip(&base)
                .map(|(&x, b)| (f(Complex64::new(x, sign * y)) - b).norm())
                .fold(0.0, f64::max);
            (y, gap)
        })
        .collect();
    let decreasing = rows.windows(2).all(|w| w[1].1 < w[0].1);
    ContinuityModulus { rows, decreasing }
}
