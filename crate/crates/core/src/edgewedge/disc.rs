use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::EdgeWedgeError;
use crate::harmonic::hilbert_values;

const CENTER_TOL: f64 = 1e-8;

/// Nonnegative profile on the uniform circle grid, with its conjugate
/// function cached.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BumpProfile {
    pub support: (f64, f64),
    pub samples: Vec<f64>,
    /// `T_0` of `samples`.
    pub conjugate: Vec<f64>,
}

impl BumpProfile {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.len() as f64
    }

    pub fn max_abs_conjugate(&self) -> f64 {
        self.conjugate.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Raised cosine `1 - cos 2 theta` on `[0, pi]` (`j = 1`) or `[pi, 2 pi]`
/// (`j = 2`), scaled to unit mean over the circle.
pub fn default_bump(j: u8, grid_size: usize) -> Result<BumpProfile, EdgeWedgeError> {
    if grid_size < 64 {
        return Err(EdgeWedgeError::GridTooSmall(grid_size));
    }
    let support = match j {
        1 => (0.0, PI),
        2 => (PI, TAU),
        _ => return Err(EdgeWedgeError::BumpIndex(j)),
    };
    let mut samples: Vec<f64> = (0..grid_size)
        .map(|k| {
            let t = TAU * k as f64 / grid_size as f64;
            if t >= support.0 && t <= support.1 {
                1.0 - (2.0 * t).cos()
            } else {
                0.0
            }
        })
        .collect();
    let mean = samples.iter().sum::<f64>() / grid_size as f64;
    samples.iter_mut().for_each(|v| *v /= mean);
    let conjugate = hilbert_values(&samples);
    Ok(BumpProfile {
        support,
        samples,
        conjugate,
    })
}

/// The disc `theta -> (x_o - T_0 y_lambda)(theta) + i y_lambda(theta)` with
/// `y_lambda = (lambda_1 y_1, lambda_2 y_2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticDisc {
    pub base_point: [f64; 2],
    pub lambda: [f64; 2],
    pub theta: Vec<f64>,
    pub boundary: Vec<[Complex64; 2]>,
    pub center: [Complex64; 2],
}

/// Builds the disc and checks that its boundary mean is `x_o + i lambda`.
///
/// Negative `lambda_j` give the mirrored discs used for the other sign
/// quadrants.
pub fn attach_disc(
    x_o: [f64; 2],
    lambda: [f64; 2],
    bumps: (&BumpProfile, &BumpProfile),
) -> Result<AnalyticDisc, EdgeWedgeError> {
    let m = bumps.0.len();
    if bumps.1.len() != m {
        return Err(EdgeWedgeError::GridMismatch(m, bumps.1.len()));
    }
    let b = [bumps.0, bumps.1];
    let boundary: Vec<[Complex64; 2]> = (0..m)
        .map(|k| {
            std::array::from_fn(|j| {
                Complex64::new(x_o[j] - lambda[j] * b[j].conjugate[k], lambda[j] * b[j].samples[k])
            })
        })
        .collect();
    let mut center = [Complex64::new(0.0, 0.0); 2];
    for p in &boundary {
        center[0] += p[0];
        center[1] += p[1];
    }
    center.iter_mut().for_each(|c| *c /= m as f64);
    let miss = (0..2)
        .map(|j| (center[j] - Complex64::new(x_o[j], lambda[j])).norm())
        .fold(0.0, f64::max);
    if miss >= CENTER_TOL {
        return Err(EdgeWedgeError::TransformResolution(miss));
    }
    Ok(AnalyticDisc {
        base_point: x_o,
        lambda,
        theta: (0..m).map(|k| TAU * k as f64 / m as f64).collect(),
        boundary,
        center,
    })
}

/// Every boundary point lies in `(D x I_delta) u (I_delta x D)`, where `D` is
/// the closed-on-the-axis half of the unit disc on the side of `lambda_j`.
pub fn boundary_in_union(d: &AnalyticDisc, delta: f64) -> bool {
    let in_half = |z: Complex64, s: f64| z.norm() < 1.0 && s * z.im >= 0.0;
    let in_interval = |z: Complex64| z.im == 0.0 && z.re.abs() < delta;
    let side = |l: f64| if l < 0.0 { -1.0 } else { 1.0 };
    let s = [side(d.lambda[0]), side(d.lambda[1])];
    d.boundary
        .iter()
        .all(|z| (in_half(z[0], s[0]) && in_interval(z[1])) || (in_interval(z[0]) && in_half(z[1], s[1])))
}

/// Value at the disc center: the boundary mean of `f` along the disc.
pub fn extend_at_center(d: &AnalyticDisc, f_boundary: &[Complex64]) -> Result<Complex64, EdgeWedgeError> {
    if f_boundary.len() != d.boundary.len() {
        return Err(EdgeWedgeError::SampleCount {
            got: f_boundary.len(),
            want: d.boundary.len(),
        });
    }
    Ok(f_boundary.iter().sum::<Complex64>() / f_boundary.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bumps(m: usize) -> (BumpProfile, BumpProfile) {
        (default_bump(1, m).unwrap(), default_bump(2, m).unwrap())
    }

    #[test]
    fn bump_properties() {
        let (y1, y2) = bumps(256);
        assert!((y1.mean() - 1.0).abs() < 1e-10 && (y2.mean() - 1.0).abs() < 1e-10);
        assert!(y1.samples.iter().all(|&v| v >= 0.0));
        for k in 0..256 {
            let t = TAU * k as f64 / 256.0;
            if t > PI {
                assert_eq!(y1.samples[k], 0.0);
            }
            if t < PI {
                assert_eq!(y2.samples[k], 0.0);
            }
        }
        assert!((y1.max_abs_conjugate() - 2.49).abs() < 0.05);
        assert!(default_bump(3, 256).is_err() && default_bump(1, 32).is_err());
    }

    #[test]
    fn zero_lambda_is_constant() {
        let (y1, y2) = bumps(128);
        let d = attach_disc([0.3, -0.2], [0.0, 0.0], (&y1, &y2)).unwrap();
        assert!(d.boundary.iter().all(|p| p[0] == Complex64::new(0.3, 0.0) && p[1] == Complex64::new(-0.2, 0.0)));
        assert!(boundary_in_union(&d, 0.5));
    }

    #[test]
    fn centers_match() {
        let (y1, y2) = bumps(1024);
        let d = attach_disc([0.1, 0.05], [0.03, 0.07], (&y1, &y2)).unwrap();
        assert!((d.center[0] - Complex64::new(0.1, 0.03)).norm() < 1e-8);
        assert!((d.center[1] - Complex64::new(0.05, 0.07)).norm() < 1e-8);
    }

    #[test]
    fn single_direction_leaves_second_real() {
        let (y1, y2) = bumps(256);
        let d = attach_disc([0.0, 0.1], [0.05, 0.0], (&y1, &y2)).unwrap();
        assert!(d.boundary.iter().all(|p| p[1] == Complex64::new(0.1, 0.0)));
    }

    #[test]
    fn containment() {
        let (y1, y2) = bumps(256);
        let delta = 0.2;
        let d = attach_disc([0.0, 0.0], [0.02, 0.03], (&y1, &y2)).unwrap();
        assert!(boundary_in_union(&d, delta));
        let mut big = d.clone();
        big.boundary.iter_mut().for_each(|p| p[0].re *= 50.0);
        assert!(!boundary_in_union(&big, delta));
    }

    #[test]
    fn center_value_of_linear_function() {
        let (y1, y2) = bumps(512);
        let d = attach_disc([0.2, -0.1], [0.04, 0.06], (&y1, &y2)).unwrap();
        let vals: Vec<Complex64> = d.boundary.iter().map(|p| p[0] + p[1]).collect();
        let v = extend_at_center(&d, &vals).unwrap();
        assert!((v - (d.center[0] + d.center[1])).norm() < 1e-9);
        assert!(extend_at_center(&d, &vals[1..]).is_err());
    }
}
