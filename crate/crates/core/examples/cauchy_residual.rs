//! Both sides of the half-plane Cauchy-Pompeiu identity with a cutoff, and
//! the decay of the edge gap of a bounded holomorphic function.
//!
//! cargo run --release --example cauchy_residual

use crwedge::edgewedge::{cauchy_formula_residual, uniform_continuity_modulus, CutoffSpec};
use crwedge::geometry::{Interval, Strip, StripSide};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let chi = CutoffSpec::new(Interval::new(-0.5, 0.5)?, Interval::new(-0.9, 0.9)?, 2, 0.4)?;
    let f = |_: &[f64], z: Complex64| 1.0 / (z + Complex64::new(0.0, 2.0));
    for points in [250, 500, 1000, 2000] {
        let r = cauchy_formula_residual(f, &chi, &[], 0.1, 0.05, points)?;
        println!(
            "{points:>5} points: residual {:.2e}  boundary {:.6}  area {:.3e}",
            r.residual, r.boundary_term, r.area_term
        );
    }
    for y in [0.08, 0.04, 0.02] {
        let r = cauchy_formula_residual(f, &chi, &[], 0.1, y, 1000)?;
        println!("y = {y}: |area term| = {:.4e}", r.area_term.norm());
    }

    let strip = Strip::new(Interval::unit(), 0.5, StripSide::Upper)?;
    let m = uniform_continuity_modulus(|z| (2.0 * z).sin(), &strip, &[0.1, 0.05, 0.01, 0.001]);
    println!("sup |f(x + iy) - f(x)|: {:?} decreasing {}", m.rows, m.decreasing);
    Ok(())
}
