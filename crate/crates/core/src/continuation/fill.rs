use num_complex::Complex64;

use super::atlas::{Diagnostics, SeedCheck};
use super::interp::{chebyshev_nodes, panel_layout};
use super::{evaluate_extension, seed_quadrant, Chart, ContinuationError, ContinuationJob, ExtensionAtlas, Mode, SeedParams};
use crate::gallery::SeparateOracle;
use crate::geometry::Interval;

pub(crate) fn require_mode(job: &ContinuationJob, want: Mode) -> Result<(), ContinuationError> {
    if job.mode != want {
        return Err(ContinuationError::Mode {
            got: job.mode.as_str(),
            want: want.as_str(),
        });
    }
    Ok(())
}

/// Compares a seed field against the atlas at the seed centers it contains.
pub(crate) fn seed_check(atlas: &ExtensionAtlas, oracle: &SeparateOracle, delta: f64, params: &SeedParams) -> SeedCheck {
    match seed_quadrant(oracle, &[], delta, params) {
        Ok(seed) => {
            let mut inside = 0;
            let mut worst: f64 = 0.0;
            for p in &seed.points {
                if let Ok(e) = evaluate_extension(atlas, p.center) {
                    inside += 1;
                    worst = worst.max((e.value - p.value).norm());
                }
            }
            SeedCheck {
                seed_points: seed.points.len(),
                inside_atlas: inside,
                max_abs_diff: worst,
                error: None,
            }
        }
        Err(e) => SeedCheck {
            seed_points: 0,
            inside_atlas: 0,
            max_abs_diff: 0.0,
            error: Some(e.to_string()),
        },
    }
}

/// Single chart about `z2 = 0` for an oracle extending to full `z2` discs.
///
/// The coefficient field is certified on the two half-strips of height
/// `delta` with boundary bound `l = -log delta`; the chart radius is
/// `(1 - alpha)` times the common slice radius (capped at 1) and its `z1`
/// height is the admissible epsilon. A slice radius below `delta` at any
/// node is reported as a collapse.
pub fn two_sided_fill(job: &ContinuationJob) -> Result<ExtensionAtlas, ContinuationError> {
    job.validate()?;
    require_mode(job, Mode::TwoSided)?;
    let oracle = job.oracle()?;
    let origin = Complex64::new(0.0, 0.0);
    let mut slice_radius: f64 = 1.0;
    for extent in panel_layout(oracle.meta.omega[0], job.grid.panel_width) {
        for x1 in chebyshev_nodes(extent.lo, extent.hi, job.grid.panel_nodes) {
            let r = oracle.meta.z2_domain.boundary_distance(x1, origin);
            if r < job.delta {
                return Err(ContinuationError::RadiusCollapse {
                    x1,
                    radius: r,
                    needed: job.delta,
                });
            }
            slice_radius = slice_radius.min(r);
        }
    }
    let quad = (1.0 - job.shrink()) * slice_radius;
    let radius = (1.0 - job.alpha) * slice_radius;
    let mut chart = Chart::build(&oracle, job, 0, origin, quad, radius)?;
    chart.z1_height = chart.certify(job, job.delta, -job.delta.ln())?;
    let span = Interval::new(-radius, radius)?;
    let mut atlas = ExtensionAtlas {
        job: job.clone(),
        diagnostics: Diagnostics {
            overlaps: vec![],
            worst_overlap: 0.0,
            steps_forward: 0,
            steps_backward: 0,
            heights: vec![(0, chart.z1_height)],
            z2_span: span,
            seed: None,
        },
        charts: vec![chart],
    };
    let check = seed_check(&atlas, &oracle, job.delta, &SeedParams::default());
    atlas.diagnostics.seed = Some(check);
    Ok(atlas)
}
