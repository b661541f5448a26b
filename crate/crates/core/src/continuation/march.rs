use num_complex::Complex64;

use super::atlas::{check_overlap, Diagnostics};
use super::fill::{require_mode, seed_check};
use super::{two_sided_fill, Chart, ContinuationError, ContinuationJob, ExtensionAtlas, Mode, SeedParams};
use crate::geometry::Interval;

/// Runs the pipeline selected by the job mode.
pub fn run(job: &ContinuationJob) -> Result<ExtensionAtlas, ContinuationError> {
    match job.mode {
        Mode::TwoSided => two_sided_fill(job),
        Mode::OneSidedUp => march(job),
    }
}

fn assemble(job: &ContinuationJob, mut charts: Vec<Chart>, forward: usize, backward: usize) -> ExtensionAtlas {
    charts.sort_by_key(|c| c.id);
    let lo = charts.first().map_or(0.0, |c| c.center.re - c.radius);
    let hi = charts.last().map_or(0.0, |c| c.center.re + c.radius);
    ExtensionAtlas {
        job: job.clone(),
        diagnostics: Diagnostics {
            overlaps: vec![],
            worst_overlap: 0.0,
            steps_forward: forward,
            steps_backward: backward,
            heights: charts.iter().map(|c| (c.id, c.z1_height)).collect(),
            z2_span: Interval { lo, hi },
            seed: None,
        },
        charts,
    }
}

/// Recentering march along `Im z2 = delta`.
///
/// Chart `j` is centered at `j (delta' - sigma) + i delta` with radius
/// `delta' = (1 - alpha) delta`. Chart 0 is the seed chart, of `z1` height
/// `seed_height_fraction * delta`. Each further chart is certified on the
/// half-strips of its predecessor's height with `l = -log sigma`, and its
/// own height is the resulting epsilon, so heights compound. Both
/// directions stop once `|j| (delta' - sigma) > 1`.
pub fn march(job: &ContinuationJob) -> Result<ExtensionAtlas, ContinuationError> {
    job.validate()?;
    require_mode(job, Mode::OneSidedUp)?;
    let oracle = job.oracle()?;
    let (delta, sigma) = (job.delta, job.sigma);
    let radius = job.delta_prime();
    let quad = (1.0 - job.shrink()) * delta;
    let step = radius - sigma;
    let l = -sigma.ln();
    let mut seed = Chart::build(&oracle, job, 0, Complex64::new(0.0, delta), quad, radius)?;
    seed.z1_height = job.grid.seed_height_fraction * delta;
    let mut charts = vec![seed.clone()];
    let mut counts = [0usize; 2];
    for (dir, count) in [1i32, -1].into_iter().zip(counts.iter_mut()) {
        let mut prev_height = seed.z1_height;
        let mut j = 1i32;
        loop {
            let center = Complex64::new(dir as f64 * j as f64 * step, delta);
            let mut chart = Chart::build(&oracle, job, dir * j, center, quad, radius)?;
            match chart.certify(job, prev_height, l) {
                Ok(eps) => chart.z1_height = eps,
                Err(ContinuationError::Certificate {
                    step, side, reason, ..
                }) => {
                    return Err(ContinuationError::Certificate {
                        step,
                        side,
                        reason,
                        partial: Some(Box::new(assemble(job, charts, counts[0], counts[1]))),
                    })
                }
                Err(e) => return Err(e),
            }
            prev_height = chart.z1_height;
            charts.push(chart);
            *count += 1;
            if j as f64 * step > 1.0 {
                break;
            }
            j += 1;
        }
    }
    let mut atlas = assemble(job, charts, counts[0], counts[1]);
    let mut overlaps = Vec::new();
    for pair in atlas.charts.windows(2) {
        overlaps.push(check_overlap(&pair[0], &pair[1], job.grid.overlap_points)?);
    }
    let worst = overlaps.iter().map(|o| o.worst).fold(0.0, f64::max);
    atlas.diagnostics.overlaps = overlaps;
    atlas.diagnostics.worst_overlap = worst;
    if worst > job.tolerances.overlap {
        let rec = atlas
            .diagnostics
            .overlaps
            .iter()
            .find(|o| o.worst == worst)
            .expect("worst overlap present")
            .clone();
        return Err(ContinuationError::Overlap {
            charts: rec.charts,
            point: rec.worst_point.expect("sampled"),
            rel: worst,
            partial: Box::new(atlas),
        });
    }
    let params = SeedParams {
        quadrants: vec![[1, 1], [-1, 1]],
        ..SeedParams::default()
    };
    let check = seed_check(&atlas, &oracle, 0.5 * delta, &params);
    atlas.diagnostics.seed = Some(check);
    Ok(atlas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuation::evaluate_extension;

    #[test]
    fn entire_march_heights_compound() {
        let job = ContinuationJob::new("entire", Mode::OneSidedUp, 0.2, 0.25, 48);
        let atlas = march(&job).unwrap();
        let d = &atlas.diagnostics;
        assert_eq!(d.steps_forward, 8);
        assert_eq!(d.steps_backward, 8);
        assert!(d.z2_span.lo < -1.0 && d.z2_span.hi > 1.0);
        for w in atlas.charts.windows(2) {
            if w[0].id >= 0 {
                assert!(w[1].z1_height < w[0].z1_height);
            }
        }
        let o = job.oracle().unwrap();
        let h = atlas.min_height();
        let z = [Complex64::new(0.4, 0.5 * h), Complex64::new(0.7, 0.25)];
        let e = evaluate_extension(&atlas, z).unwrap();
        assert!((e.value - o.closed_form(z[0], z[1])).norm() < 1e-7);
    }

    #[test]
    fn sigma_precondition() {
        let mut job = ContinuationJob::new("entire", Mode::OneSidedUp, 0.2, 0.25, 48);
        job.sigma = 0.03;
        assert!(matches!(march(&job), Err(ContinuationError::Job(_))));
    }
}
