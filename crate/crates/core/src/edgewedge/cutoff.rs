//! Almost-analytic cutoffs near the real axis.
//!
//! With a real profile `psi` (1 on `A`, 0 off `B`) the extension
//! `chi(s + i t) = rho(t) * sum_{j <= k} psi^(j)(s) (i t)^j / j!`
//! satisfies `dbar chi = rho(t) psi^(k+1)(s) (i t)^k / (2 k!)` wherever
//! `rho = 1`, so `dbar chi = O(t^k)` and vanishes over `A`. The profile uses
//! the degree-9 smoothstep, which is C^4 at its breakpoints; `k <= 3`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::EdgeWedgeError;
use crate::geometry::Interval;

/// Coefficients of `S(u) = 126u^5 - 420u^6 + 540u^7 - 315u^8 + 70u^9`.
const SMOOTHSTEP: [f64; 10] = [0.0, 0.0, 0.0, 0.0, 0.0, 126.0, -420.0, 540.0, -315.0, 70.0];

/// Largest supported decay order.
pub const MAX_ORDER: usize = 3;
/// `rho` equals 1 below `RHO_LO * height` and 0 above `RHO_HI * height`.
pub const RHO_LO: f64 = 0.6;
pub const RHO_HI: f64 = 0.9;

/// `d`-th derivative of the smoothstep, clamped outside `[0, 1]`.
pub fn smoothstep(u: f64, d: usize) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u >= 1.0 {
        return if d == 0 { 1.0 } else { 0.0 };
    }
    let mut acc = 0.0;
    for p in (d..SMOOTHSTEP.len()).rev() {
        let falling: f64 = (0..d).map(|i| (p - i) as f64).product();
        acc = acc * u + SMOOTHSTEP[p] * falling;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutoffSpec {
    pub inner: Interval,
    pub outer: Interval,
    /// Decay order `k` of `dbar chi` in `t`.
    pub k: usize,
    /// Vertical extent of the support of `chi`.
    pub height: f64,
}

impl CutoffSpec {
    pub fn new(inner: Interval, outer: Interval, k: usize, height: f64) -> Result<Self, EdgeWedgeError> {
        if !(outer.lo < inner.lo && inner.hi < outer.hi) {
            return Err(EdgeWedgeError::BadCutoff("need inner interval compactly inside outer".into()));
        }
        if k > MAX_ORDER {
            return Err(EdgeWedgeError::BadCutoff(format!("decay order {k} exceeds {MAX_ORDER}")));
        }
        if !(height > 0.0 && height.is_finite()) {
            return Err(EdgeWedgeError::BadCutoff("height must be positive".into()));
        }
        Ok(Self { inner, outer, k, height })
    }

    /// `j`-th derivative of the real profile.
    pub fn psi(&self, s: f64, j: usize) -> f64 {
        let (a, b) = (self.inner, self.outer);
        if s <= b.lo || s >= b.hi {
            return 0.0;
        }
        if s < a.lo {
            let w = a.lo - b.lo;
            smoothstep((s - b.lo) / w, j) / w.powi(j as i32)
        } else if s > a.hi {
            let w = b.hi - a.hi;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * smoothstep((b.hi - s) / w, j) / w.powi(j as i32)
        } else if j == 0 {
            1.0
        } else {
            0.0
        }
    }

    fn rho(&self, t: f64, d: usize) -> f64 {
        let (lo, hi) = (RHO_LO * self.height, RHO_HI * self.height);
        let w = hi - lo;
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        sign * smoothstep((hi - t) / w, d) / w.powi(d as i32)
    }

    fn jet(&self, s: f64, t: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut it_pow = Complex64::new(1.0, 0.0);
        let mut fact = 1.0;
        for j in 0..=self.k {
            acc += self.psi(s, j) * it_pow / fact;
            it_pow *= Complex64::new(0.0, t);
            fact *= (j + 1) as f64;
        }
        acc
    }

    /// `chi(s + i t)` for `t >= 0`.
    pub fn chi(&self, z: Complex64) -> Complex64 {
        self.jet(z.re, z.im) * self.rho(z.im, 0)
    }

    /// `dbar chi = (d_s + i d_t) chi / 2`.
    pub fn dbar_chi(&self, z: Complex64) -> Complex64 {
        let (s, t) = (z.re, z.im);
        let k = self.k;
        let kfact: f64 = (1..=k).map(|i| i as f64).product();
        let jet_dbar = 0.5 * self.psi(s, k + 1) * Complex64::new(0.0, t).powu(k as u32) / kfact;
        jet_dbar * self.rho(t, 0) + self.jet(s, t) * Complex64::new(0.0, 0.5) * self.rho(t, 1)
    }

    /// Breakpoints of the `s` profile.
    pub fn s_breaks(&self) -> [f64; 4] {
        [self.outer.lo, self.inner.lo, self.inner.hi, self.outer.hi]
    }

    /// Breakpoints of the `t` profile.
    pub fn t_breaks(&self) -> [f64; 3] {
        [0.0, RHO_LO * self.height, RHO_HI * self.height]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: usize) -> CutoffSpec {
        CutoffSpec::new(Interval::new(-0.5, 0.5).unwrap(), Interval::new(-0.9, 0.9).unwrap(), k, 0.4).unwrap()
    }

    #[test]
    fn smoothstep_values_and_derivatives() {
        assert_eq!(smoothstep(0.0, 0), 0.0);
        assert_eq!(smoothstep(1.0, 0), 1.0);
        assert!((smoothstep(0.5, 0) - 0.5).abs() < 1e-14);
        let h = 1e-5;
        for d in 0..4 {
            for u in [0.1, 0.37, 0.8] {
                let fd = (smoothstep(u + h, d) - smoothstep(u - h, d)) / (2.0 * h);
                assert!((fd - smoothstep(u, d + 1)).abs() < 1e-4 * (1.0 + fd.abs()), "d={d} u={u}");
            }
        }
        // C^4 at the endpoints
        for d in 1..=4 {
            assert!(smoothstep(1e-9, d).abs() < 1e-4);
            assert!(smoothstep(1.0 - 1e-9, d).abs() < 1e-4);
        }
    }

    #[test]
    fn chi_is_one_on_inner_and_zero_outside() {
        let c = spec(2);
        assert_eq!(c.chi(Complex64::new(0.1, 0.0)), Complex64::new(1.0, 0.0));
        assert_eq!(c.chi(Complex64::new(0.1, 0.2)), Complex64::new(1.0, 0.0));
        assert_eq!(c.chi(Complex64::new(0.95, 0.1)), Complex64::new(0.0, 0.0));
        assert_eq!(c.chi(Complex64::new(0.1, 0.39)), Complex64::new(0.0, 0.0));
        assert_eq!(c.dbar_chi(Complex64::new(0.2, 0.1)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn dbar_matches_finite_differences() {
        let c = spec(2);
        let h = 1e-6;
        for z in [Complex64::new(0.7, 0.05), Complex64::new(-0.6, 0.3), Complex64::new(0.0, 0.3)] {
            let ds = (c.chi(z + h) - c.chi(z - h)) / (2.0 * h);
            let dt = (c.chi(z + Complex64::new(0.0, h)) - c.chi(z - Complex64::new(0.0, h))) / (2.0 * h);
            let fd = 0.5 * (ds + Complex64::new(0.0, 1.0) * dt);
            assert!((fd - c.dbar_chi(z)).norm() < 1e-5, "{z}: {fd} vs {}", c.dbar_chi(z));
        }
    }

    #[test]
    fn dbar_decays_like_t_to_the_k() {
        for k in 0..=3 {
            let c = spec(k);
            let worst = (1..50)
                .map(|i| {
                    let s = -0.9 + 0.036 * i as f64;
                    (1..20)
                        .map(|m| {
                            let t = 1e-3 * m as f64;
                            c.dbar_chi(Complex64::new(s, t)).norm() / t.powi(k as i32)
                        })
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            assert!(worst.is_finite() && worst < 1e4, "k={k}: {worst}");
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let a = Interval::new(-0.5, 0.5).unwrap();
        assert!(CutoffSpec::new(a, a, 2, 0.4).is_err());
        assert!(CutoffSpec::new(a, Interval::unit(), 4, 0.4).is_err());
    }
}
