use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ContinuationError;
use crate::gallery::SeparateOracle;
use crate::geometry::{interior_axis, Interval};

/// Sampling density of the slab sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ProbeGrid {
    /// Points along the swept edge coordinate.
    pub n_edge: usize,
    /// Radii and angles of the `z2` probe disc (axis 1).
    pub n_radial: usize,
    pub n_angle: usize,
    /// Heights of the `z1` probe strip (axis 2), per side.
    pub n_height: usize,
}

impl Default for ProbeGrid {
    fn default() -> Self {
        Self {
            n_edge: 33,
            n_radial: 6,
            n_angle: 16,
            n_height: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundedSlab {
    pub axis: usize,
    pub interval: Interval,
    pub l: f64,
    /// `1 / l`, the height of the `z1` extension required on axis 2.
    pub extension_height: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlabScan {
    pub axis: usize,
    pub schedule: Vec<f64>,
    /// Sampled sups at the largest bound, one per edge point.
    pub sups: Vec<(f64, f64)>,
    pub slabs: Vec<BoundedSlab>,
}

/// `l_0 2^m` for `m = 0..count`.
pub fn geometric_schedule(l0: f64, count: usize) -> Vec<f64> {
    (0..count).map(|m| l0 * 2f64.powi(m as i32)).collect()
}

/// Sup of `|f(x1, z2)|` over the slice domain within radius 0.9 of the axis point.
fn sup_axis1(oracle: &SeparateOracle, x1: f64, probe: &ProbeGrid) -> f64 {
    let mut sup: f64 = 0.0;
    for i in 0..=probe.n_radial {
        let r = 0.9 * i as f64 / probe.n_radial as f64;
        let angles = if i == 0 { 1 } else { probe.n_angle };
        for k in 0..angles {
            let z2 = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / angles as f64);
            if z2.im != 0.0 && !oracle.meta.z2_domain.contains(x1, z2) {
                continue;
            }
            match oracle.eval_z2_slice(x1, z2) {
                Ok(v) => sup = sup.max(v.norm()),
                Err(_) if z2.im != 0.0 => {}
                Err(_) => return f64::INFINITY,
            }
        }
    }
    sup
}

/// Sup of `|f(z1, x2)|` for `|Im z1| < 1/l`, or infinity when the slice
/// does not extend that far.
fn sup_axis2(oracle: &SeparateOracle, x2: f64, l: f64, xs: &[f64], probe: &ProbeGrid) -> f64 {
    let h = 1.0 / l;
    if oracle.meta.eps1.at(x2) < h {
        return f64::INFINITY;
    }
    let mut sup: f64 = 0.0;
    for &x1 in xs {
        for k in -(probe.n_height as i64)..=probe.n_height as i64 {
            let y = 0.9 * h * k as f64 / probe.n_height as f64;
            match oracle.eval_z1_slice(Complex64::new(x1, y), x2) {
                Ok(v) => sup = sup.max(v.norm()),
                Err(_) => return f64::INFINITY,
            }
        }
    }
    sup
}

/// Maximal runs of passing grid points, widened to the midpoints with
/// their failing neighbours (or the ends of `extent`).
fn runs(extent: Interval, xs: &[f64], pass: &[bool]) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut start = None;
    for i in 0..=xs.len() {
        let ok = i < xs.len() && pass[i];
        match (ok, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                let lo = if s == 0 { extent.lo } else { 0.5 * (xs[s - 1] + xs[s]) };
                let hi = if i == xs.len() { extent.hi } else { 0.5 * (xs[i - 1] + xs[i]) };
                out.push(Interval { lo, hi });
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Sweeps the edge coordinate `axis` and returns, for each bound in the
/// increasing `l_schedule`, the maximal intervals on which the sampled sup
/// stays within it.
pub fn bounded_slab_scan(
    oracle: &SeparateOracle,
    axis: usize,
    l_schedule: &[f64],
    probe: &ProbeGrid,
) -> Result<SlabScan, ContinuationError> {
    if !(axis == 1 || axis == 2) {
        return Err(ContinuationError::Job(format!("axis must be 1 or 2, got {axis}")));
    }
    if l_schedule.is_empty() || l_schedule.windows(2).any(|w| w[1] <= w[0]) || l_schedule[0] <= 0.0 {
        return Err(ContinuationError::Job("l schedule must be positive and increasing".into()));
    }
    let extent = oracle.meta.omega[axis - 1];
    let xs = interior_axis(extent.lo, extent.hi, probe.n_edge.max(2));
    let other = interior_axis(oracle.meta.omega[0].lo, oracle.meta.omega[0].hi, probe.n_edge.max(2));
    let sups_for = |l: f64| -> Vec<f64> {
        xs.par_iter()
            .map(|&x| {
                if axis == 1 {
                    sup_axis1(oracle, x, probe)
                } else {
                    sup_axis2(oracle, x, l, &other, probe)
                }
            })
            .collect()
    };
    let fixed = (axis == 1).then(|| sups_for(0.0));
    let mut slabs = Vec::new();
    let mut last = Vec::new();
    for &l in l_schedule {
        let sups = fixed.clone().unwrap_or_else(|| sups_for(l));
        let pass: Vec<bool> = sups.iter().map(|&s| s <= l).collect();
        slabs.extend(runs(extent, &xs, &pass).into_iter().map(|interval| BoundedSlab {
            axis,
            interval,
            l,
            extension_height: 1.0 / l,
        }));
        last = sups;
    }
    let largest_l = *l_schedule.last().expect("non-empty");
    if !slabs.iter().any(|s| s.l == largest_l) {
        return Err(ContinuationError::ScanFailure {
            axis,
            best_sup: last.iter().copied().fold(f64::INFINITY, f64::min),
            largest_l,
        });
    }
    Ok(SlabScan {
        axis,
        schedule: l_schedule.to_vec(),
        sups: xs.into_iter().zip(last).collect(),
        slabs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{oracle, Eps1, Expected, OracleMeta, SliceDomain};

    #[test]
    fn good2s_single_slab_at_sampled_sup() {
        let o = oracle("good2s").unwrap();
        let scan = bounded_slab_scan(&o, 1, &geometric_schedule(1.0, 4), &ProbeGrid::default()).unwrap();
        let max_sup = scan.sups.iter().map(|s| s.1).fold(0.0, f64::max);
        // 1 / (3 - x1 - 0.9) at the largest sampled x1
        assert!(max_sup < 1.0 / 1.1 && max_sup > 0.8);
        let at_1: Vec<_> = scan.slabs.iter().filter(|s| s.l == 1.0).collect();
        assert_eq!(at_1.len(), 1);
        assert_eq!(at_1[0].interval, Interval::unit());
    }

    #[test]
    fn flat_axis2_slabs_avoid_origin() {
        let o = oracle("flat").unwrap();
        let sched = geometric_schedule(2.0, 4);
        let scan = bounded_slab_scan(&o, 2, &sched, &ProbeGrid::default()).unwrap();
        let gap = |l: f64| {
            scan.slabs
                .iter()
                .filter(|s| s.l == l)
                .map(|s| if s.interval.lo >= 0.0 { s.interval.lo } else { -s.interval.hi })
                .fold(f64::INFINITY, f64::min)
        };
        for &l in &sched {
            assert!(gap(l) > 0.0, "l = {l}");
            assert!(!scan.slabs.iter().any(|s| s.l == l && s.interval.contains_real(0.0)));
        }
        assert!(gap(16.0) < gap(2.0));
    }

    #[test]
    fn constant_oracle_and_failure() {
        let meta = OracleMeta {
            omega: [Interval::unit(), Interval::unit()],
            eps1: Eps1::Constant { value: 1.0 },
            z2_domain: SliceDomain::Plane,
            continuity: true,
        };
        let c = SeparateOracle::new("c", vec![], Expected::TwoSided, meta, |_, _| Complex64::new(3.0, 0.0));
        let scan = bounded_slab_scan(&c, 1, &[3.0], &ProbeGrid::default()).unwrap();
        assert_eq!(scan.slabs.len(), 1);
        assert_eq!(scan.slabs[0].interval, Interval::unit());
        assert!(matches!(
            bounded_slab_scan(&c, 1, &[1.0, 2.0], &ProbeGrid::default()),
            Err(ContinuationError::ScanFailure { .. })
        ));
    }
}
