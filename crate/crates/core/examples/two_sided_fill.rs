//! Builds the single certified chart for an oracle that extends across the
//! edge in both directions and writes an evaluation trace.
//!
//! cargo run --release --example two_sided_fill [-- trace.csv]

use crwedge::continuation::{evaluate_extension, two_sided_fill, write_evaluation_csv, ContinuationJob, Mode};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let job = ContinuationJob::new("good2s", Mode::TwoSided, 0.2, 0.25, 64);
    let atlas = two_sided_fill(&job)?;
    let chart = &atlas.charts[0];
    println!("chart radius {:.3}, z1 height {:.4e}", chart.radius, chart.z1_height);
    for side in &chart.certificates {
        let c = &side.certificate;
        println!(
            "  {:?} strip {:.2}: pass {} nu_threshold {} kappa {:.3}",
            side.side, side.strip_height, c.pass, c.nu_threshold, c.kappa
        );
    }
    if let Some(seed) = &atlas.diagnostics.seed {
        println!("seed discs inside the chart: {} of {}, max difference {:.2e}", seed.inside_atlas, seed.seed_points, seed.max_abs_diff);
    }

    let oracle = job.oracle()?;
    let h = chart.z1_height;
    let rows: Vec<_> = (0..9)
        .map(|k| {
            let z = [Complex64::new(-0.8 + 0.2 * k as f64, 0.5 * h), Complex64::new(0.1, 0.4 - 0.1 * k as f64)];
            evaluate_extension(&atlas, z).map(|e| (z, e))
        })
        .collect::<Result<_, _>>()?;
    let worst = rows
        .iter()
        .map(|(z, e)| (e.value - oracle.closed_form(z[0], z[1])).norm())
        .fold(0.0, f64::max);
    println!("worst error on the trace: {worst:.2e}");
    match std::env::args().nth(1) {
        Some(path) => write_evaluation_csv(&rows, std::fs::File::create(path)?)?,
        None => write_evaluation_csv(&rows, std::io::stdout())?,
    }
    Ok(())
}
