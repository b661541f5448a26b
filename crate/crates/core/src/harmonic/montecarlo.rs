use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub walks: usize,
}

const CHUNK: usize = 10_000;

/// Walk-on-spheres estimate of the harmonic measure of the arc of the upper
/// unit half-disc, seen from `z`.
///
/// Walks stop within `shell` of the boundary and score 1 if the arc is the
/// nearer piece. Each chunk of walks has its own generator seeded from
/// `seed`, so the result does not depend on the thread count.
pub fn harmonic_measure_mc(z: Complex64, walks: usize, seed: u64, shell: f64) -> McEstimate {
    let chunks = walks.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(c as u64));
            let n = CHUNK.min(walks - c * CHUNK);
            (0..n).filter(|_| walk(z, shell, &mut rng)).count() as u64
        })
        .sum();
    let p = hits as f64 / walks as f64;
    McEstimate {
        mean: p,
        std_err: (p * (1.0 - p) / walks as f64).sqrt(),
        walks,
    }
}

fn walk(mut z: Complex64, shell: f64, rng: &mut StdRng) -> bool {
    loop {
        let to_arc = 1.0 - z.norm();
        let to_diam = z.im;
        let d = to_arc.min(to_diam);
        if d < shell {
            return to_arc <= to_diam;
        }
        let t = rng.gen::<f64>() * std::f64::consts::TAU;
        z += Complex64::from_polar(d, t);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_reasonable() {
        let z = Complex64::new(0.0, 0.5);
        let a = harmonic_measure_mc(z, 20_000, 7, 1e-5);
        let b = harmonic_measure_mc(z, 20_000, 7, 1e-5);
        assert_eq!(a, b);
        let exact = super::super::chi_halfdisc_exact(z);
        assert!((a.mean - exact).abs() < 5.0 * a.std_err);
    }
}
