use std::f64::consts::PI;

use num_complex::Complex64;

use crate::geometry::Interval;

/// Chebyshev points of the first kind on `[lo, hi]`, in increasing order.
pub fn chebyshev_nodes(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    (0..n)
        .rev()
        .map(|k| mid + half * ((2 * k + 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// Equal panels covering `extent` with width at most `width`.
pub fn panel_layout(extent: Interval, width: f64) -> Vec<Interval> {
    let count = (extent.len() / width).ceil().max(1.0) as usize;
    let w = extent.len() / count as f64;
    (0..count)
        .map(|p| Interval {
            lo: extent.lo + w * p as f64,
            hi: extent.lo + w * (p + 1) as f64,
        })
        .collect()
}

/// Lagrange weights `l_k(z)` of the barycentric formula for first-kind
/// Chebyshev `nodes` (as produced by [`chebyshev_nodes`]).
pub fn barycentric_weights(nodes: &[f64], z: Complex64) -> Vec<Complex64> {
    let n = nodes.len();
    if let Some(k) = nodes.iter().position(|&x| z.im == 0.0 && z.re == x) {
        let mut w = vec![Complex64::new(0.0, 0.0); n];
        w[k] = Complex64::new(1.0, 0.0);
        return w;
    }
    // Nodes are stored in increasing order, i.e. reversed angle index.
    let terms: Vec<Complex64> = nodes
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let k = n - 1 - i;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let w = sign * ((2 * k + 1) as f64 * PI / (2 * n) as f64).sin();
            w / (z - x)
        })
        .collect();
    let total: Complex64 = terms.iter().sum();
    terms.into_iter().map(|t| t / total).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_polynomials_and_analytic_functions() {
        let nodes = chebyshev_nodes(-0.05, 0.05, 24);
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let z = Complex64::new(0.01, 0.03);
        let w = barycentric_weights(&nodes, z);
        let cubic: Complex64 = nodes.iter().zip(&w).map(|(&x, l)| l * (x * x * x - x)).sum();
        assert!((cubic - (z * z * z - z)).norm() < 1e-12);
        // pole at distance 0.15 below the panel
        let f = |z: Complex64| 1.0 / (z + Complex64::new(0.0, 0.15));
        let approx: Complex64 = nodes.iter().zip(&w).map(|(&x, l)| l * f(Complex64::new(x, 0.0))).sum();
        assert!((approx - f(z)).norm() / f(z).norm() < 1e-9);
    }

    #[test]
    fn exact_at_nodes() {
        let nodes = chebyshev_nodes(0.0, 1.0, 8);
        let w = barycentric_weights(&nodes, Complex64::new(nodes[3], 0.0));
        assert_eq!(w[3], Complex64::new(1.0, 0.0));
        assert!(w.iter().enumerate().all(|(k, v)| k == 3 || *v == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn panels_cover_extent() {
        let p = panel_layout(Interval::unit(), 0.3);
        assert_eq!(p.len(), 7);
        assert_eq!(p[0].lo, -1.0);
        assert!((p[6].hi - 1.0).abs() < 1e-15);
    }
}
