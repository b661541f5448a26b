use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Chart, ContinuationError, ContinuationJob};
use crate::geometry::Interval;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapRecord {
    pub charts: [i32; 2],
    pub samples: usize,
    /// Largest `|F1 - F2| / (1 + |F1|)` over the samples.
    pub worst: f64,
    pub worst_point: Option<[Complex64; 2]>,
}

/// Seed values compared against the finished atlas where they overlap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedCheck {
    pub seed_points: usize,
    pub inside_atlas: usize,
    pub max_abs_diff: f64,
    /// Set when the seed could not be built for this oracle and delta.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub overlaps: Vec<OverlapRecord>,
    pub worst_overlap: f64,
    pub steps_forward: usize,
    pub steps_backward: usize,
    /// `z1` height per chart id, compounded along the march.
    pub heights: Vec<(i32, f64)>,
    /// Real span of `Im z2 = delta` covered by the chart discs.
    pub z2_span: Interval,
    pub seed: Option<SeedCheck>,
}

/// Immutable result of a fill or a march, with the job embedded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtensionAtlas {
    pub job: ContinuationJob,
    pub charts: Vec<Chart>,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: Complex64,
    pub chart_id: i32,
    pub tail_bound: f64,
}

impl ExtensionAtlas {
    pub fn contains(&self, z: [Complex64; 2]) -> bool {
        self.charts.iter().any(|c| c.contains(z))
    }

    pub fn chart(&self, id: i32) -> Option<&Chart> {
        self.charts.iter().find(|c| c.id == id)
    }

    /// Smallest `z1` height over all charts.
    pub fn min_height(&self) -> f64 {
        self.charts.iter().map(|c| c.z1_height).fold(f64::INFINITY, f64::min)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }
}

/// Evaluates in the chart with the nearest `z2` center among those containing `z`.
pub fn evaluate_extension(atlas: &ExtensionAtlas, z: [Complex64; 2]) -> Result<Evaluation, ContinuationError> {
    let dist = |c: &Chart| (z[1] - c.center).norm();
    let chart = atlas
        .charts
        .iter()
        .filter(|c| c.contains(z))
        .min_by(|a, b| dist(a).total_cmp(&dist(b)));
    let Some(chart) = chart else {
        let nearest = atlas
            .charts
            .iter()
            .min_by(|a, b| dist(a).total_cmp(&dist(b)))
            .expect("atlas has charts");
        return Err(ContinuationError::Coverage {
            z,
            nearest: nearest.id,
            distance: dist(nearest),
        });
    };
    let (value, tail_bound) = chart.evaluate(z)?;
    Ok(Evaluation {
        value,
        chart_id: chart.id,
        tail_bound,
    })
}

/// CSV with columns `z1_re, z1_im, z2_re, z2_im, F_re, F_im, chart_id, tail_bound`.
pub fn write_evaluation_csv<W: Write>(rows: &[([Complex64; 2], Evaluation)], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["z1_re", "z1_im", "z2_re", "z2_im", "F_re", "F_im", "chart_id", "tail_bound"])?;
    for (z, e) in rows {
        w.write_record([
            z[0].re.to_string(),
            z[0].im.to_string(),
            z[1].re.to_string(),
            z[1].im.to_string(),
            e.value.re.to_string(),
            e.value.im.to_string(),
            e.chart_id.to_string(),
            e.tail_bound.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Compares neighbouring charts on a sample of their common domain.
pub(crate) fn check_overlap(a: &Chart, b: &Chart, x_points: usize) -> Result<OverlapRecord, ContinuationError> {
    let d = b.center - a.center;
    let gap = d.norm();
    let r = a.radius.min(b.radius);
    let mut record = OverlapRecord {
        charts: [a.id, b.id],
        samples: 0,
        worst: 0.0,
        worst_point: None,
    };
    if gap >= a.radius + b.radius {
        return Ok(record);
    }
    let mid = a.center + 0.5 * d;
    let half_chord = (r * r - 0.25 * gap * gap).max(0.0).sqrt();
    let unit = if gap > 0.0 { d / gap } else { Complex64::new(1.0, 0.0) };
    let normal = unit * Complex64::new(0.0, 1.0);
    let h = 0.5 * a.z1_height.min(b.z1_height);
    let ext = a.real_extent;
    let xs: Vec<f64> = (0..x_points)
        .map(|i| ext.lo + ext.len() * (i as f64 + 0.5) / x_points as f64)
        .collect();
    for &u in &[-0.4, 0.0, 0.4] {
        for &v in &[-0.8, 0.0, 0.8] {
            let z2 = mid + unit * (u * (r - 0.5 * gap).max(0.0)) + normal * (v * half_chord);
            for &x in &xs {
                for y in [0.0, h, -h] {
                    let z = [Complex64::new(x, y), z2];
                    if !(a.contains(z) && b.contains(z)) {
                        continue;
                    }
                    let (fa, _) = a.evaluate(z)?;
                    let (fb, _) = b.evaluate(z)?;
                    let rel = (fa - fb).norm() / (1.0 + fa.norm());
                    record.samples += 1;
                    if record.worst_point.is_none() || rel > record.worst {
                        record.worst = rel;
                        record.worst_point = Some(z);
                    }
                }
            }
        }
    }
    Ok(record)
}
