//! Coefficients by circle quadrature, root-test radius and recentering
//! toward the boundary of the disc of convergence.
//!
//! cargo run --example taylor_recentering

use crwedge::taylor::{coeffs_from_oracle, Radius};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 1 / (1 - z) has radius 1 about 0
    let f = |z: Complex64| Ok(1.0 / (1.0 - z));
    let series = coeffs_from_oracle(f, Complex64::new(0.0, 0.0), 0.8, 64, 512)?.with_declared_radius(1.0);
    let r = series.radius_root_test(0.25)?;
    println!("root-test radius about 0: {:.4}", r.value());

    // each shift starts from the original series and heads for the pole at 1;
    // the truncated shift loses the tail, so the root test drifts high near it
    for step in 1..=4 {
        let c = Complex64::new(0.15 * step as f64, 0.0);
        let s = series.recenter(c)?;
        let probe = c + Complex64::new(0.0, 0.1);
        let (v, tail) = s.evaluate(probe)?;
        let err = (v - 1.0 / (1.0 - probe)).norm();
        let radius = match s.radius_root_test(0.25)? {
            Radius::Finite(r) => format!("{r:.4}"),
            Radius::Polynomial => "inf".into(),
        };
        println!("center {c}: radius {radius} (exact {:.4}), error {err:.2e}, tail bound {tail:.2e}", (1.0 - c).norm());
    }
    Ok(())
}
