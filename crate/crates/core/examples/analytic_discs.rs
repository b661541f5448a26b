//! Attaches analytic discs to the union of the two slice families and fills
//! a quadrant of values from boundary means.
//!
//! cargo run --release --example analytic_discs

use crwedge::continuation::{seed_quadrant, SeedParams};
use crwedge::edgewedge::{attach_disc, boundary_in_union, default_bump, extend_at_center};
use crwedge::gallery::oracle;
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (b1, b2) = (default_bump(1, 1024)?, default_bump(2, 1024)?);
    println!("bump means {:.12} {:.12}", b1.mean(), b2.mean());
    let disc = attach_disc([0.1, -0.05], [0.05, 0.04], (&b1, &b2))?;
    println!("center {:?}", disc.center);
    println!("boundary in the slice union (delta = 0.3): {}", boundary_in_union(&disc, 0.3));
    let values: Vec<Complex64> = disc.boundary.iter().map(|z| (z[0] * z[1]).exp()).collect();
    let v = extend_at_center(&disc, &values)?;
    println!("exp(z1 z2) at center: {v}, direct {}", (disc.center[0] * disc.center[1]).exp());

    let good = oracle("good2s")?;
    let seed = seed_quadrant(&good, &[], 0.2, &SeedParams::default())?;
    let worst = seed
        .points
        .iter()
        .map(|p| (p.value - good.closed_form(p.center[0], p.center[1])).norm())
        .fold(0.0, f64::max);
    println!("good2s seed: {} points, boundary sup {:.4}, worst error {worst:.2e}", seed.points.len(), seed.boundary_sup);

    // onesided only extends upward in z2; a lower disc leaves its domain
    match seed_quadrant(&oracle("onesided")?, &[], 0.1, &SeedParams { quadrants: vec![[1, -1]], ..Default::default() }) {
        Err(e) => println!("onesided lower quadrant: {e}"),
        Ok(_) => println!("onesided lower quadrant unexpectedly filled"),
    }
    Ok(())
}
