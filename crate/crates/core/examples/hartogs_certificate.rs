//! Certifies the coefficient field of an oracle on a half-strip and prints
//! the smallest index from which the subharmonic bound holds.
//!
//! cargo run --release --example hartogs_certificate

use crwedge::geometry::{Interval, Strip, StripSide};
use crwedge::harmonic::{kappa_estimate, strip_grid, verify_hartogs, HartogsDomain, HartogsHypotheses};
use crwedge::taylor::{coeffs_from_oracle, phi_sequence};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("half-disc kappa at resolution 128: {:.5}", kappa_estimate(128)?);

    // phi_nu(z1) = (1/nu) log |a_nu(z1)| for f = 1 / (3 - z1 - z2), expanded in z2 about 0
    let strip = Strip::new(Interval::new(-0.8, 0.8)?, 0.2, StripSide::Upper)?;
    let grid = strip_grid(&strip, 24, 6);
    let fields = grid
        .iter()
        .map(|&z1| {
            let s = coeffs_from_oracle(|z2| Ok(1.0 / (3.0 - z1 - z2)), Complex64::new(0.0, 0.0), 1.5, 40, 256)?;
            Ok((z1, s))
        })
        .collect::<Result<Vec<_>, crwedge::taylor::TaylorError>>()?;
    let seq = phi_sequence(&fields, [1, 40])?;

    // |a_nu| = |3 - z1|^-(nu+1), so phi_nu -> -log|3 - z1| < -log 2.2
    let l = -(2.2f64).ln() + 0.1;
    for alpha in [0.05, 0.1, 0.2] {
        let hyp = HartogsHypotheses::new(l, 0.0, alpha, 0.02)?;
        let cert = verify_hartogs(&seq, &HartogsDomain::Strip(strip), &hyp)?;
        println!(
            "alpha {alpha:<5} pass {} nu_threshold {:>2} kappa {:.3} worst slack {:.3e}",
            cert.pass, cert.nu_threshold, cert.kappa, cert.max_violation
        );
    }
    Ok(())
}
