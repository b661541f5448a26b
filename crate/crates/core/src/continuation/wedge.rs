use num_complex::Complex64;
use serde::Serialize;

use super::{ContinuationError, ExtensionAtlas};
use crate::geometry::{interior_axis, Cone, Interval, Wedge};

pub const WEDGE_LABEL: &str = "pre-Kashiwara fitted cone";

const EDGE_SHRINK: f64 = 0.9;
const EDGE_POINTS: usize = 7;
const HEIGHT_SCAN: usize = 200;
const HEIGHT_SAMPLES: usize = 12;
const MIN_APERTURE: f64 = 1e-300;
const MAX_APERTURE: f64 = 1.5;
const BISECTIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WedgeReport {
    pub label: &'static str,
    pub wedge: Wedge,
    pub aperture: f64,
    /// Upper truncation `|y| < epsilon`.
    pub epsilon: f64,
    /// Heights below this are not covered by any atlas in the schedule.
    pub lower_cutoff: f64,
    pub deltas: Vec<f64>,
    pub samples_checked: usize,
}

/// Fits the widest cone around the `y2` axis whose truncated wedge, sampled
/// over `lower_cutoff <= |y| <= epsilon`, lies in the union of the atlases.
pub fn assemble_wedge(atlases: &[ExtensionAtlas]) -> Result<WedgeReport, ContinuationError> {
    let mut deltas: Vec<f64> = atlases.iter().map(|a| a.job.delta).collect();
    deltas.sort_by(|a, b| b.total_cmp(a));
    deltas.dedup();
    if deltas.len() < 2 {
        return Err(ContinuationError::TooFewAtlases(deltas.len()));
    }
    let omega = atlases[0].charts[0].real_extent;
    let edge = [omega.shrink(EDGE_SHRINK), Interval::unit().shrink(EDGE_SHRINK)];
    let x1s = interior_axis(edge[0].lo, edge[0].hi, EDGE_POINTS);
    let x2s = interior_axis(edge[1].lo, edge[1].hi, EDGE_POINTS);
    let covered = |z: [Complex64; 2]| atlases.iter().any(|a| a.contains(z));
    let column = |t: f64, angle: f64| {
        let (s, c) = angle.sin_cos();
        x1s.iter().all(|&x1| {
            x2s.iter()
                .all(|&x2| covered([Complex64::new(x1, t * s), Complex64::new(x2, t * c)]))
        })
    };

    // Longest run of covered heights along the axis, on a geometric scan.
    let (t_min, t_max) = (1e-4_f64, 1.0_f64);
    let ts: Vec<f64> = (0..HEIGHT_SCAN)
        .map(|k| t_min * (t_max / t_min).powf(k as f64 / (HEIGHT_SCAN - 1) as f64))
        .collect();
    let ok: Vec<bool> = ts.iter().map(|&t| column(t, 0.0)).collect();
    let mut best: Option<(usize, usize)> = None;
    let mut start = None;
    for i in 0..=ts.len() {
        match (i < ts.len() && ok[i], start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                if best.map_or(true, |(a, b)| i - s > b - a + 1) {
                    best = Some((s, i - 1));
                }
                start = None;
            }
            _ => {}
        }
    }
    let Some((a, b)) = best else {
        return Err(ContinuationError::DegenerateWedge(
            "no height along the y2 axis is covered over the whole edge grid".into(),
        ));
    };
    let (lower_cutoff, epsilon) = (ts[a], ts[b]);
    let heights: Vec<f64> = (0..HEIGHT_SAMPLES)
        .map(|k| ts[a + (b - a) * k / (HEIGHT_SAMPLES - 1)])
        .collect();
    let mut samples = 0usize;
    let mut fits = |ap: f64| {
        let angles = [ap, -ap, 0.5 * ap, -0.5 * ap];
        samples += heights.len() * angles.len() * x1s.len() * x2s.len();
        heights.iter().all(|&t| angles.iter().all(|&g| column(t, g)))
    };
    if !fits(MIN_APERTURE) {
        return Err(ContinuationError::DegenerateWedge(format!(
            "even aperture {MIN_APERTURE:e} leaves the chart union"
        )));
    }
    let aperture = if fits(MAX_APERTURE) {
        MAX_APERTURE
    } else {
        let (mut lo, mut hi) = (MIN_APERTURE.ln(), MAX_APERTURE.ln());
        for _ in 0..BISECTIONS {
            let m = 0.5 * (lo + hi);
            if fits(m.exp()) {
                lo = m;
            } else {
                hi = m;
            }
        }
        lo.exp()
    };
    let wedge = Wedge::new(edge, Cone::upward(aperture)?, epsilon)?;
    Ok(WedgeReport {
        label: WEDGE_LABEL,
        wedge,
        aperture,
        epsilon,
        lower_cutoff,
        deltas,
        samples_checked: samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuation::{march, ContinuationJob, Mode};

    #[test]
    fn entire_wedge_has_positive_aperture() {
        let atlases: Vec<_> = [0.2, 0.1]
            .iter()
            .map(|&d| march(&ContinuationJob::new("entire", Mode::OneSidedUp, d, 0.25, 48)).unwrap())
            .collect();
        let report = assemble_wedge(&atlases).unwrap();
        assert_eq!(report.label, WEDGE_LABEL);
        assert!(report.aperture > 0.0);
        assert!(report.lower_cutoff < report.epsilon);
        assert_eq!(report.deltas, vec![0.2, 0.1]);
        assert!(matches!(assemble_wedge(&atlases[..1]), Err(ContinuationError::TooFewAtlases(1))));
    }
}
