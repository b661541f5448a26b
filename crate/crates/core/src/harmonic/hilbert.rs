use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{BoundaryDomain, BoundaryFunction, HarmonicError};

/// Conjugate-function values for uniformly spaced real samples on the circle.
///
/// Fourier multiplier `-i sign(n)`; the mean and (for even lengths) the
/// Nyquist mode are sent to zero. Any length is accepted.
pub fn hilbert_values(values: &[f64]) -> Vec<f64> {
    let m = values.len();
    if m == 0 {
        return Vec::new();
    }
    let mut planner = FftPlanner::new();
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    planner.plan_fft_forward(m).process(&mut buf);
    let minus_i = Complex64::new(0.0, -1.0);
    for (n, x) in buf.iter_mut().enumerate() {
        if n == 0 || 2 * n == m {
            *x = Complex64::new(0.0, 0.0);
        } else if 2 * n < m {
            *x *= minus_i;
        } else {
            *x *= -minus_i;
        }
    }
    planner.plan_fft_inverse(m).process(&mut buf);
    let scale = 1.0 / m as f64;
    buf.iter().map(|x| x.re * scale).collect()
}

/// Normalized Hilbert transform `T_0` of real circle data.
pub fn hilbert_transform(bf: &BoundaryFunction) -> Result<BoundaryFunction, HarmonicError> {
    bf.expect(BoundaryDomain::Circle)?;
    if let Some((index, s)) = bf.samples.iter().enumerate().find(|(_, s)| s.1.im != 0.0) {
        return Err(HarmonicError::NonReal { index, im: s.1.im });
    }
    let re: Vec<f64> = bf.samples.iter().map(|s| s.1.re).collect();
    let out = hilbert_values(&re);
    Ok(BoundaryFunction {
        domain: BoundaryDomain::Circle,
        samples: bf
            .samples
            .iter()
            .zip(out)
            .map(|(s, v)| (s.0, Complex64::new(v, 0.0)))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_err(a: &[f64], b: impl Fn(usize) -> f64) -> f64 {
        a.iter().enumerate().map(|(k, v)| (v - b(k)).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn cos_sin_pairs() {
        let m = 256;
        let th = |k: usize| std::f64::consts::TAU * k as f64 / m as f64;
        let cos: Vec<f64> = (0..m).map(|k| th(k).cos()).collect();
        let sin: Vec<f64> = (0..m).map(|k| th(k).sin()).collect();
        assert!(max_err(&hilbert_values(&cos), |k| th(k).sin()) < 1e-12);
        assert!(max_err(&hilbert_values(&sin), |k| -th(k).cos()) < 1e-12);
        assert!(max_err(&hilbert_values(&vec![3.5; m]), |_| 0.0) < 1e-12);
    }

    #[test]
    fn non_power_of_two_length() {
        let m = 300;
        let th = |k: usize| std::f64::consts::TAU * k as f64 / m as f64;
        let v: Vec<f64> = (0..m).map(|k| (3.0 * th(k)).cos()).collect();
        assert!(max_err(&hilbert_values(&v), |k| (3.0 * th(k)).sin()) < 1e-12);
    }

    #[test]
    fn rejects_complex_and_wrong_domain() {
        let mut bf = BoundaryFunction::circle_from_fn(32, f64::cos).unwrap();
        bf.samples[3].1.im = 0.5;
        assert!(matches!(hilbert_transform(&bf), Err(HarmonicError::NonReal { index: 3, .. })));
        let hd = BoundaryFunction::half_disc_from_fn(16, 16, |_| 0.0).unwrap();
        assert!(matches!(hilbert_transform(&hd), Err(HarmonicError::WrongDomain { .. })));
    }
}
