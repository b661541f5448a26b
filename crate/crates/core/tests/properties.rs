use std::f64::consts::TAU;

use crwedge::cli::{Coord, SliceAxis, SliceSpec};
use crwedge::continuation::{barycentric_weights, chebyshev_nodes, ContinuationJob, Mode};
use crwedge::edgewedge::{attach_disc, default_bump, extend_at_center};
use crwedge::geometry::{Cone, Interval, Wedge};
use crwedge::harmonic::{hilbert_values, poisson_disc, BoundaryFunction};
use crwedge::taylor::{taylor_shift, TaylorSeries};
use crwedge::Complex64;
use proptest::prelude::*;

fn trig(coeffs: &[(f64, f64)], m: usize) -> Vec<f64> {
    (0..m)
        .map(|j| {
            let t = TAU * j as f64 / m as f64;
            coeffs
                .iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    let k = (k + 1) as f64;
                    a * (k * t).cos() + b * (k * t).sin()
                })
                .sum()
        })
        .collect()
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hilbert_twice_negates_zero_mean_data(coeffs in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..12)) {
        let f = trig(&coeffs, 256);
        let tt = hilbert_values(&hilbert_values(&f));
        for (a, b) in tt.iter().zip(&f) {
            prop_assert!((a + b).abs() < 1e-10);
        }
    }

    #[test]
    fn poisson_reproduces_re_z_k(k in 1usize..16, r in 0.0..0.9f64, phi in 0.0..TAU) {
        let bf = BoundaryFunction::circle_from_fn(256, |t| (k as f64 * t).cos()).unwrap();
        let z = Complex64::from_polar(r, phi);
        let u = poisson_disc(&bf, z).unwrap().value.re;
        prop_assert!((u - z.powu(k as u32).re).abs() < 1e-9);
    }

    #[test]
    fn taylor_shift_preserves_polynomial_values(
        coeffs in prop::collection::vec(complex(), 1..10),
        h in complex(),
        w in complex(),
    ) {
        let p = TaylorSeries::new(Complex64::new(0.0, 0.0), coeffs.clone()).unwrap();
        let shifted = TaylorSeries::new(h, taylor_shift(&coeffs, h)).unwrap();
        let (a, b) = (p.horner(w), shifted.horner(w));
        prop_assert!((a - b).norm() < 1e-10 * (1.0 + a.norm()));
    }

    #[test]
    fn barycentric_weights_form_a_partition_of_unity(
        lo in -1.0..0.9f64,
        width in 0.01..0.5f64,
        n in 4usize..32,
        z in complex(),
    ) {
        let nodes = chebyshev_nodes(lo, lo + width, n);
        // points over the panel, at most a quarter width off the real axis
        let at = Complex64::new(lo + 0.5 * width * (1.0 + z.re), 0.25 * width * z.im);
        let w = barycentric_weights(&nodes, at);
        let sum: Complex64 = w.iter().sum();
        // rounding grows with the spread of the weights off the real axis
        let spread: f64 = w.iter().map(|v| v.norm()).sum();
        prop_assert!((sum - 1.0).norm() < 1e-14 * n as f64 * spread);
    }

    #[test]
    fn disc_center_is_lifted_base_point(
        x in (-0.8..0.8f64, -0.8..0.8f64),
        l in (-0.4..0.4f64, -0.4..0.4f64),
    ) {
        let (b1, b2) = (default_bump(1, 512).unwrap(), default_bump(2, 512).unwrap());
        let d = attach_disc([x.0, x.1], [l.0, l.1], (&b1, &b2)).unwrap();
        let vals: Vec<Complex64> = d.boundary.iter().map(|p| p[0] * p[1] + p[0]).collect();
        let v = extend_at_center(&d, &vals).unwrap();
        let (z1, z2) = (Complex64::new(x.0, l.0), Complex64::new(x.1, l.1));
        // z1 z2 + z1 is holomorphic, so the disc mean is its center value
        prop_assert!((v - (z1 * z2 + z1)).norm() < 1e-9);
    }

    #[test]
    fn wedge_points_lie_in_their_cone(ap in 0.05..1.4f64, t in 0.0..1.0f64, s in -1.0..1.0f64, eps in 0.01..1.0f64) {
        let cone = Cone::upward(ap).unwrap();
        let w = Wedge::new([Interval::unit(), Interval::unit()], cone, eps).unwrap();
        let dir = cone.direction(0.999 * s * ap);
        let y = [dir[0] * t * eps * 0.99, dir[1] * t * eps * 0.99];
        let z = [Complex64::new(0.1, y[0]), Complex64::new(-0.2, y[1])];
        prop_assert_eq!(w.contains(z), t > 0.0);
    }

    #[test]
    fn slice_grid_size_is_product(n1 in 1usize..20, n2 in 1usize..20) {
        let axis = |coord, n| SliceAxis { coord, from: -0.5, to: 0.5, n };
        let spec = SliceSpec {
            base: [Complex64::new(0.0, 0.0); 2],
            axes: vec![axis(Coord::Z1Re, n1), axis(Coord::Z2Im, n2)],
        };
        prop_assert_eq!(spec.points().unwrap().len(), n1 * n2);
    }

    #[test]
    fn job_json_round_trips(delta in 0.01..0.9f64, alpha in 0.01..0.5f64, n in 32usize..128) {
        let job = ContinuationJob::new("entire", Mode::OneSidedUp, delta, alpha, n);
        let back: ContinuationJob = serde_json::from_str(&serde_json::to_string(&job).unwrap()).unwrap();
        prop_assert_eq!(back, job);
    }
}
