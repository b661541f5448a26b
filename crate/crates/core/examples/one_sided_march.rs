//! Recentering march along Im z2 = delta for an oracle that only extends
//! upward in z2, with the per-step certificates and chart overlaps.
//!
//! cargo run --release --example one_sided_march [-- atlas.json]

use crwedge::cli::summarize;
use crwedge::continuation::{march, ContinuationError, ContinuationJob, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut job = ContinuationJob::new("onesided", Mode::OneSidedUp, 0.2, 0.25, 48);
    job.oracle.params = vec![0.5];
    let atlas = match march(&job) {
        Ok(a) => a,
        Err(ContinuationError::Certificate { step, side, reason, .. }) => {
            return Err(format!("step {step} ({side}) failed: {reason}").into());
        }
        Err(e) => return Err(e.into()),
    };
    println!("{:>5} {:>8} {:>5} {:>12} {:>12}", "step", "Re c_j", "pass", "strip", "z1 height");
    for row in summarize(&atlas) {
        println!(
            "{:>5} {:>8.3} {:>5} {:>12.4e} {:>12.4e}",
            row.step, row.center.re, row.pass, row.strip_height, row.z1_height
        );
    }
    let d = &atlas.diagnostics;
    let step = job.delta_prime() - job.sigma;
    println!(
        "N = {} forward, N (delta' - sigma) = {:.3}; worst overlap {:.2e}",
        d.steps_forward,
        d.steps_forward as f64 * step,
        d.worst_overlap
    );
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, atlas.to_json()?)?;
        println!("atlas written to {path}");
    }
    Ok(())
}
