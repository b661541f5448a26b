//! Marches `entire` at several heights, fits a cone under the union of the
//! atlases and measures how the extension approaches the edge values.
//!
//! cargo run --release --example wedge_assembly

use crwedge::continuation::{assemble_wedge, evaluate_extension, march, ContinuationJob, Mode};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let deltas = [0.2, 0.1, 0.05, 0.025];
    let mut atlases = Vec::new();
    for &d in &deltas {
        let job = ContinuationJob::new("entire", Mode::OneSidedUp, d, 0.25, 48);
        let t = std::time::Instant::now();
        let atlas = march(&job)?;
        println!(
            "delta {d:<6} charts {:>3}  min z1 height {:.3e}  worst overlap {:.2e}  ({:.1?})",
            atlas.charts.len(),
            atlas.min_height(),
            atlas.diagnostics.worst_overlap,
            t.elapsed()
        );
        atlases.push(atlas);
    }
    let report = assemble_wedge(&atlases)?;
    println!(
        "{}: aperture {:.3e}, heights [{:.4}, {:.4}], {} samples",
        report.label, report.aperture, report.lower_cutoff, report.epsilon, report.samples_checked
    );

    let oracle = atlases[0].job.oracle()?;
    let xs: Vec<f64> = (0..9).map(|k| -0.8 + 0.2 * k as f64).collect();
    println!("{:>6}  {:>12}", "y", "sup gap");
    for y in [0.05, 0.02, 0.01] {
        let mut gap: f64 = 0.0;
        for &x1 in &xs {
            for &x2 in &xs {
                let z = [Complex64::new(x1, 0.0), Complex64::new(x2, y)];
                let value = atlases
                    .iter()
                    .find_map(|a| evaluate_extension(a, z).ok())
                    .ok_or("point outside every atlas")?
                    .value;
                let edge = oracle.eval(Complex64::new(x1, 0.0), Complex64::new(x2, 0.0))?;
                gap = gap.max((value - edge).norm());
            }
        }
        println!("{y:>6}  {gap:>12.4e}");
    }
    Ok(())
}
