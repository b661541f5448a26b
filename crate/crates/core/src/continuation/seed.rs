use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BoundedSlab, ContinuationError};
use crate::edgewedge::{attach_disc, default_bump, extend_at_center};
use crate::gallery::SeparateOracle;
use crate::geometry::interior_axis;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SeedParams {
    /// Circle samples per disc boundary.
    pub boundary_grid: usize,
    /// Base points per edge axis, spread over `(-delta/2, delta/2)`.
    pub n_x: usize,
    /// Lifts per axis and quadrant: `lambda_j = +-delta k / n_lambda`.
    pub n_lambda: usize,
    /// Sign pairs of the quadrants to fill.
    pub quadrants: Vec<[i8; 2]>,
}

impl Default for SeedParams {
    fn default() -> Self {
        Self {
            boundary_grid: 1024,
            n_x: 5,
            n_lambda: 3,
            quadrants: vec![[1, 1], [-1, 1], [1, -1], [-1, -1]],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeedPoint {
    /// `x_o + i lambda`.
    pub center: [Complex64; 2],
    pub value: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedField {
    pub delta: f64,
    pub points: Vec<SeedPoint>,
    /// Largest `|f|` met on any disc boundary.
    pub boundary_sup: f64,
}

/// Fills `x_o + i lambda` through attached discs: the value at each center
/// is the boundary mean of `f`, sampled on the separate slices.
///
/// Base points are centered on the first slab of each axis, when given;
/// the largest slab bound caps the boundary values.
pub fn seed_quadrant(
    oracle: &SeparateOracle,
    slabs: &[BoundedSlab],
    delta: f64,
    params: &SeedParams,
) -> Result<SeedField, ContinuationError> {
    if !(delta > 0.0) || params.n_x == 0 || params.n_lambda == 0 {
        return Err(ContinuationError::Job("seed needs delta > 0 and non-empty grids".into()));
    }
    let b1 = default_bump(1, params.boundary_grid)?;
    let b2 = default_bump(2, params.boundary_grid)?;
    let mid = |axis: usize| {
        slabs
            .iter()
            .find(|s| s.axis == axis)
            .map_or(oracle.meta.omega[axis - 1].mid(), |s| s.interval.mid())
    };
    let x1s = interior_axis(mid(1) - 0.5 * delta, mid(1) + 0.5 * delta, params.n_x);
    let x2s = interior_axis(mid(2) - 0.5 * delta, mid(2) + 0.5 * delta, params.n_x);
    let mut lambdas: Vec<[f64; 2]> = Vec::new();
    for q in &params.quadrants {
        for k1 in 0..params.n_lambda {
            for k2 in 0..params.n_lambda {
                let step = delta / params.n_lambda as f64;
                let lam = [q[0] as f64 * step * k1 as f64, q[1] as f64 * step * k2 as f64];
                let lam = lam.map(|v| if v == 0.0 { 0.0 } else { v });
                if !lambdas.contains(&lam) {
                    lambdas.push(lam);
                }
            }
        }
    }
    let jobs: Vec<([f64; 2], [f64; 2])> = x1s
        .iter()
        .flat_map(|&a| x2s.iter().map(move |&b| [a, b]))
        .flat_map(|x| lambdas.iter().map(move |&l| (x, l)))
        .collect();
    let results: Vec<(SeedPoint, f64)> = jobs
        .par_iter()
        .map(|&(x_o, lambda)| {
            let disc = attach_disc(x_o, lambda, (&b1, &b2))?;
            let values = disc
                .boundary
                .iter()
                .zip(&disc.theta)
                .map(|(z, &theta)| {
                    oracle.eval(z[0], z[1]).map_err(|e| ContinuationError::SeedContainment {
                        theta,
                        point: *z,
                        reason: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let sup = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
            let value = extend_at_center(&disc, &values)?;
            Ok((
                SeedPoint {
                    center: disc.center,
                    value,
                },
                sup,
            ))
        })
        .collect::<Result<_, ContinuationError>>()?;
    let boundary_sup = results.iter().map(|r| r.1).fold(0.0, f64::max);
    if let Some(l) = slabs.iter().map(|s| s.l).reduce(f64::max) {
        if boundary_sup > l {
            return Err(ContinuationError::SeedBound { sup: boundary_sup, l });
        }
    }
    Ok(SeedField {
        delta,
        points: results.into_iter().map(|r| r.0).collect(),
        boundary_sup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{oracle, Eps1, Expected, OracleMeta, SliceDomain};
    use crate::geometry::Interval;

    fn product_oracle() -> SeparateOracle {
        let meta = OracleMeta {
            omega: [Interval::unit(), Interval::unit()],
            eps1: Eps1::Constant { value: 2.0 },
            z2_domain: SliceDomain::Plane,
            continuity: true,
        };
        SeparateOracle::new("product", vec![], Expected::TwoSided, meta, |a, b| a * b)
    }

    #[test]
    fn product_seed_is_exact() {
        let seed = seed_quadrant(&product_oracle(), &[], 0.2, &SeedParams::default()).unwrap();
        for p in &seed.points {
            assert!((p.value - p.center[0] * p.center[1]).norm() < 1e-8, "{p:?}");
        }
    }

    #[test]
    fn zero_lift_reproduces_edge_values() {
        let params = SeedParams {
            n_lambda: 1,
            ..SeedParams::default()
        };
        let o = oracle("good2s").unwrap();
        let seed = seed_quadrant(&o, &[], 0.2, &params).unwrap();
        assert_eq!(seed.points.len(), 25);
        for p in &seed.points {
            let exact = o.closed_form(p.center[0], p.center[1]);
            assert!((p.value - exact).norm() <= 1e-13 * exact.norm());
        }
    }

    #[test]
    fn good2s_seed_matches_closed_form() {
        let o = oracle("good2s").unwrap();
        let seed = seed_quadrant(&o, &[], 0.2, &SeedParams::default()).unwrap();
        let worst = seed
            .points
            .iter()
            .map(|p| (p.value - o.closed_form(p.center[0], p.center[1])).norm())
            .fold(0.0, f64::max);
        assert!(worst < 1e-7, "{worst}");
    }

    #[test]
    fn containment_failure_names_theta() {
        let o = oracle("onesided").unwrap();
        let params = SeedParams {
            quadrants: vec![[1, -1]],
            ..SeedParams::default()
        };
        match seed_quadrant(&o, &[], 0.1, &params) {
            Err(ContinuationError::SeedContainment { theta, .. }) => assert!(theta > std::f64::consts::PI),
            other => panic!("{other:?}"),
        }
    }
}
