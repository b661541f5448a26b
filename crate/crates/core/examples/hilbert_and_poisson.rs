//! Harmonic conjugates on the circle and harmonic extension into the
//! disc and the upper half-disc.
//!
//! cargo run --example hilbert_and_poisson

use std::f64::consts::PI;

use crwedge::harmonic::{hilbert_values, poisson_disc, poisson_halfdisc, BoundaryFunction};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = 256;
    let theta: Vec<f64> = (0..m).map(|j| 2.0 * PI * j as f64 / m as f64).collect();
    let data: Vec<f64> = theta.iter().map(|t| (3.0 * t).cos() + 0.5).collect();
    let conj = hilbert_values(&data);
    let err = theta
        .iter()
        .zip(&conj)
        .map(|(t, v)| (v - (3.0 * t).sin()).abs())
        .fold(0.0, f64::max);
    println!("T0(cos 3t + 1/2) vs sin 3t: {err:.2e}");

    let bf = BoundaryFunction::circle_real(&data)?;
    for z in [Complex64::new(0.3, 0.2), Complex64::new(-0.5, 0.6)] {
        let u = poisson_disc(&bf, z)?;
        println!("disc  u({z}) = {:.12}  Re z^3 + 1/2 = {:.12}", u.value.re, z.powu(3).re + 0.5);
    }

    // Im z is harmonic with the same values on the arc and the diameter
    let hd = BoundaryFunction::half_disc_from_fn(2048, 64, |z| z.im)?;
    for z in [Complex64::new(0.1, 0.4), Complex64::new(-0.6, 0.05)] {
        let u = poisson_halfdisc(&hd, z)?;
        println!("half  u({z}) = {:.9}  Im z = {}", u.value.re, z.im);
    }
    Ok(())
}
