use std::f64::consts::PI;

use num_complex::Complex64;

use super::{BoundaryDomain, BoundaryFunction, HarmonicError};

/// Result of a Poisson integral, with a flag when the kernel is poorly
/// resolved by the boundary sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonValue {
    pub value: Complex64,
    pub ill_conditioned: bool,
}

const MAX_ABS: f64 = 0.999;

/// Harmonic extension of circle data into the unit disc (trapezoid rule).
pub fn poisson_disc(bf: &BoundaryFunction, z: Complex64) -> Result<PoissonValue, HarmonicError> {
    bf.expect(BoundaryDomain::Circle)?;
    let r2 = z.norm_sqr();
    if r2 >= 1.0 {
        return Err(HarmonicError::OutsideDisc(z));
    }
    let m = bf.len();
    let num = 1.0 - r2;
    let sum: Complex64 = bf
        .samples
        .iter()
        .map(|&(t, v)| v * (num / (Complex64::from_polar(1.0, t) - z).norm_sqr()))
        .sum();
    let dist = 1.0 - r2.sqrt();
    Ok(PoissonValue {
        value: sum / m as f64,
        ill_conditioned: r2.sqrt() > MAX_ABS || dist * (m as f64) < 4.0 * PI,
    })
}

/// Half-plane Poisson integral of the piecewise-linear interpolant of
/// `(x_j, d_j)`, zero outside `[x_0, x_last]`.
fn halfplane_linear(xs: &[f64], ds: &[f64], z: Complex64) -> f64 {
    let (x, y) = (z.re, z.im);
    let mut acc = 0.0;
    for k in 0..xs.len() - 1 {
        let (ta, tb) = (xs[k], xs[k + 1]);
        let slope = (ds[k + 1] - ds[k]) / (tb - ta);
        let p = ds[k] - slope * ta;
        let (sa, sb) = (ta - x, tb - x);
        let angle = (sb / y).atan() - (sa / y).atan();
        let log = 0.5 * ((sb * sb + y * y) / (sa * sa + y * y)).ln();
        acc += (p + slope * x) * angle + slope * y * log;
    }
    acc / PI
}

/// Harmonic extension of data on the boundary of the upper unit half-disc,
/// prepared once for many evaluation points.
///
/// The diameter data enter through the half-plane Poisson integral `u_d` of
/// their piecewise-linear interpolant. The arc remainder `g - u_d` vanishes
/// on the diameter, so it is odd-reflected to the whole circle and handed
/// to the disc Poisson integral. Reflected values at `theta = 0, pi` are set to 0.
#[derive(Debug, Clone)]
pub struct HalfDiscPoisson {
    xs: Vec<f64>,
    dre: Vec<f64>,
    dim: Vec<f64>,
    /// Reflected circle data as `(e^{i theta}, value)`.
    reflected: Vec<(Complex64, Complex64)>,
    m: usize,
}

impl HalfDiscPoisson {
    pub fn new(bf: &BoundaryFunction) -> Result<Self, HarmonicError> {
        let n_arc = match bf.domain {
            BoundaryDomain::HalfDisc { n_arc } => n_arc,
            _ => {
                return Err(HarmonicError::WrongDomain {
                    expected: "half-disc boundary",
                    got: "circle",
                })
            }
        };
        let (arc, diam) = bf.samples.split_at(n_arc + 1);
        let xs: Vec<f64> = diam.iter().map(|s| s.0 - PI - 1.0).collect();
        let dre: Vec<f64> = diam.iter().map(|s| s.1.re).collect();
        let dim: Vec<f64> = diam.iter().map(|s| s.1.im).collect();
        let diameter_zero = dre.iter().chain(&dim).all(|&v| v == 0.0);
        let mut solver = Self {
            xs,
            dre,
            dim,
            reflected: Vec::new(),
            m: 2 * n_arc,
        };
        let m = 2 * n_arc;
        let mut full = vec![Complex64::new(0.0, 0.0); m];
        for k in 1..n_arc {
            let (t, g) = arc[k];
            let rem = if diameter_zero { g } else { g - solver.diameter_part(Complex64::from_polar(1.0, t)) };
            full[k] = rem;
            full[m - k] = -rem;
        }
        solver.reflected = BoundaryFunction::circle(full)?
            .samples
            .into_iter()
            .map(|(t, v)| (Complex64::from_polar(1.0, t), v))
            .collect();
        Ok(solver)
    }

    fn diameter_part(&self, w: Complex64) -> Complex64 {
        Complex64::new(halfplane_linear(&self.xs, &self.dre, w), halfplane_linear(&self.xs, &self.dim, w))
    }

    pub fn eval(&self, z: Complex64) -> Result<PoissonValue, HarmonicError> {
        if z.im <= 0.0 {
            return Err(HarmonicError::OnDiameter(z));
        }
        if z.norm() >= 1.0 {
            return Err(HarmonicError::OutsideDisc(z));
        }
        let r2 = z.norm_sqr();
        let num = 1.0 - r2;
        let sum: Complex64 = self.reflected.iter().map(|&(e, v)| v * (num / (e - z).norm_sqr())).sum();
        let dist = 1.0 - r2.sqrt();
        Ok(PoissonValue {
            value: sum / self.m as f64 + self.diameter_part(z),
            ill_conditioned: r2.sqrt() > MAX_ABS || dist * (self.m as f64) < 4.0 * PI || z.im < 1e-4,
        })
    }
}

/// Harmonic extension of data on the boundary of the upper unit half-disc.
/// See [`HalfDiscPoisson`] for the method.
pub fn poisson_halfdisc(bf: &BoundaryFunction, z: Complex64) -> Result<PoissonValue, HarmonicError> {
    HalfDiscPoisson::new(bf)?.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_data() {
        let bf = BoundaryFunction::circle_from_fn(256, |_| 1.0).unwrap();
        let u = poisson_disc(&bf, c(0.3, 0.2)).unwrap();
        assert!((u.value - 1.0).norm() < 1e-12);
        assert!(!u.ill_conditioned);
    }

    #[test]
    fn harmonic_polynomials() {
        let bf = BoundaryFunction::circle_from_fn(256, f64::cos).unwrap();
        let z = Complex64::from_polar(0.7, 1.1);
        assert!((poisson_disc(&bf, z).unwrap().value.re - z.re).abs() < 1e-10);
        let bf2 = BoundaryFunction::circle_from_fn(256, |t| (2.0 * t).cos()).unwrap();
        assert!((poisson_disc(&bf2, c(0.5, 0.0)).unwrap().value.re - 0.25).abs() < 1e-10);
    }

    #[test]
    fn reproduces_powers() {
        let m = 512;
        for k in 1..=m / 4 {
            let re = BoundaryFunction::circle_from_fn(m, |t| (k as f64 * t).cos()).unwrap();
            let im = BoundaryFunction::circle_from_fn(m, |t| (k as f64 * t).sin()).unwrap();
            let z = c(0.3, -0.4);
            let zk = z.powu(k as u32);
            assert!((poisson_disc(&re, z).unwrap().value.re - zk.re).abs() < 1e-9);
            assert!((poisson_disc(&im, z).unwrap().value.re - zk.im).abs() < 1e-9);
        }
    }

    #[test]
    fn outside_and_edge() {
        let bf = BoundaryFunction::circle_from_fn(64, |_| 1.0).unwrap();
        assert!(poisson_disc(&bf, c(1.0, 0.0)).is_err());
        assert!(poisson_disc(&bf, c(0.9995, 0.0)).unwrap().ill_conditioned);
    }

    #[test]
    fn halfdisc_zero_and_im() {
        let zero = BoundaryFunction::half_disc_from_fn(256, 128, |_| 0.0).unwrap();
        assert_eq!(poisson_halfdisc(&zero, c(0.2, 0.3)).unwrap().value, c(0.0, 0.0));
        let im = BoundaryFunction::half_disc_from_fn(1024, 256, |z| z.im).unwrap();
        for z in [c(0.0, 0.5), c(0.5, 0.1), c(-0.7, 0.6), c(0.1, 1e-3)] {
            assert!((poisson_halfdisc(&im, z).unwrap().value.re - z.im).abs() < 1e-8, "{z}");
        }
        assert!(matches!(poisson_halfdisc(&im, c(0.2, 0.0)), Err(HarmonicError::OnDiameter(_))));
    }

    #[test]
    fn halfdisc_with_diameter_data() {
        // Re(z^2) = x^2 - y^2 is harmonic with nonzero diameter data
        let bf = BoundaryFunction::half_disc_from_fn(2048, 4096, |z| (z * z).re).unwrap();
        for z in [c(0.0, 0.5), c(0.4, 0.2), c(-0.3, 0.7)] {
            let u = poisson_halfdisc(&bf, z).unwrap().value.re;
            assert!((u - (z * z).re).abs() < 1e-5, "{z}: {u}");
        }
    }

    #[test]
    fn chi_matches_harmonic_measure() {
        let bf = BoundaryFunction::chi_half_disc(4096, 64).unwrap();
        for z in [c(0.0, 0.5), c(0.8, 0.05), c(-0.5, 0.3)] {
            let exact = super::super::chi_halfdisc_exact(z);
            let u = poisson_halfdisc(&bf, z).unwrap().value.re;
            assert!((u - exact).abs() < 1e-6, "{z}: {u} vs {exact}");
        }
    }
}
