//! The two gallery counterexamples: exponential growth toward the edge and
//! a slice radius that shrinks to zero.
//!
//! cargo run --example counterexample_probes

use crwedge::gallery::{oracle, radius_collapse_probe, temperedness_probe, DEFAULT_K_MAX, DEFAULT_NU_MAX, DEFAULT_PROBE_COEFFS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cordaro = temperedness_probe(&oracle("cordaro")?, 0.0, DEFAULT_K_MAX, DEFAULT_NU_MAX);
    println!("cordaro: {:?}, fitted exponent {:.2}", cordaro.verdict, cordaro.fitted_k);
    cordaro.write_csv(std::io::stdout())?;

    // closer to the edge the coefficients drop below the rounding floor
    let path = [[0.5, 0.0], [0.25, 0.0], [0.125, 0.0]];
    let flat = radius_collapse_probe(&oracle("flat")?, 2, &path, DEFAULT_PROBE_COEFFS);
    println!("flat: {:?}", flat.verdict);
    flat.write_csv(std::io::stdout())?;
    Ok(())
}
