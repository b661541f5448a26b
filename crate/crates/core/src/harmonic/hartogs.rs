//! Verifier for the Hartogs-type bound `phi_nu(tau) <= alpha + l kappa Im tau`.
//!
//! Grid points are sorted into roles by position: the flat piece (`Im tau = 0`),
//! the curved or far boundary, and the interior. Limsups over `nu` are read as
//! maxima over a trailing window of indices.

use std::fmt;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{kappa_halfdisc_default, kappa_strip, HarmonicError, KAPPA_RE_MAX};
use crate::geometry::{Geometry, HalfDisc, Strip, StripSide};
use crate::taylor::CoeffLogSequence;

const ROLE_EPS: f64 = 1e-9;

fn default_tail_fraction() -> f64 {
    0.25
}

fn default_tolerance() -> f64 {
    1e-6
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HartogsHypotheses {
    /// Asymptotic bound on the boundary.
    pub l: f64,
    /// Uniform bound for every `nu`.
    #[serde(rename = "L")]
    pub big_l: f64,
    pub alpha: f64,
    pub eta: f64,
    #[serde(default = "default_tail_fraction")]
    pub tail_fraction: f64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}

impl HartogsHypotheses {
    pub fn new(l: f64, big_l: f64, alpha: f64, eta: f64) -> Result<Self, HarmonicError> {
        let h = Self {
            l,
            big_l,
            alpha,
            eta,
            tail_fraction: default_tail_fraction(),
            tolerance: default_tolerance(),
        };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<(), HarmonicError> {
        let bad = |m: &str| Err(HarmonicError::BadHypotheses(m.into()));
        if !(self.big_l >= self.l) {
            return bad("need L >= l");
        }
        if !(self.alpha > 0.0) {
            return bad("need alpha > 0");
        }
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return bad("need 0 < eta < 1");
        }
        if !(self.tail_fraction > 0.0 && self.tail_fraction <= 1.0) {
            return bad("need tail_fraction in (0, 1]");
        }
        if !(self.tolerance >= 0.0) {
            return bad("need a nonnegative tolerance");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// `limsup phi_nu <= l` on the boundary away from the flat piece.
    Boundary,
    /// `limsup phi_nu <= 0` on the flat piece.
    Diameter,
    /// `sup phi_nu <= L` for every `nu`.
    Global,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Boundary => "boundary limsup <= l",
            Clause::Diameter => "diameter limsup <= 0",
            Clause::Global => "global sup <= L",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HartogsDomain {
    HalfDisc(HalfDisc),
    Strip(Strip),
}

impl HartogsDomain {
    fn geometry(&self) -> Geometry {
        match *self {
            HartogsDomain::HalfDisc(h) => Geometry::HalfDisc(h),
            HartogsDomain::Strip(s) => Geometry::Strip(s),
        }
    }

    /// Height of a point above the flat piece (positive inside).
    fn height(&self, z: Complex64) -> f64 {
        match self {
            HartogsDomain::HalfDisc(h) => h.side.sign() * z.im,
            HartogsDomain::Strip(s) => match s.side {
                StripSide::Lower => -z.im,
                _ => z.im,
            },
        }
    }

    /// Kappa in the units of `Im tau`.
    pub fn kappa(&self) -> f64 {
        match self {
            HartogsDomain::HalfDisc(h) => kappa_halfdisc_default() / h.radius,
            HartogsDomain::Strip(s) => kappa_strip(s.height, 0.5 * s.real_extent.len()),
        }
    }

    fn role(&self, z: Complex64) -> Role {
        let y = self.height(z);
        match self {
            HartogsDomain::HalfDisc(h) => {
                let rho = (z - Complex64::new(h.center, 0.0)).norm() / h.radius;
                if y.abs() <= ROLE_EPS * h.radius {
                    Role::Diameter
                } else if rho >= 1.0 - ROLE_EPS {
                    Role::Boundary
                } else if ((z.re - h.center) / h.radius).abs() <= KAPPA_RE_MAX {
                    Role::Interior { y, in_kappa_region: true }
                } else {
                    Role::Interior { y, in_kappa_region: false }
                }
            }
            HartogsDomain::Strip(s) => {
                let a = 0.5 * s.real_extent.len();
                let dx = (z.re - s.real_extent.mid()).abs();
                if y.abs() <= ROLE_EPS * s.height {
                    Role::Diameter
                } else if y >= s.height * (1.0 - ROLE_EPS) || dx >= a * (1.0 - ROLE_EPS) {
                    Role::Boundary
                } else {
                    Role::Interior {
                        y,
                        in_kappa_region: dx <= KAPPA_RE_MAX * a,
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Role {
    Diameter,
    Boundary,
    Interior { y: f64, in_kappa_region: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridDescriptor {
    pub domain: Geometry,
    pub points: usize,
    pub diameter_points: usize,
    pub boundary_points: usize,
    pub conclusion_points: usize,
    pub nu_range: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HartogsCertificate {
    pub nu_threshold: usize,
    pub kappa: f64,
    pub l: f64,
    #[serde(rename = "L")]
    pub big_l: f64,
    pub alpha: f64,
    pub eta: f64,
    pub max_violation: f64,
    pub pass: bool,
    pub grid: GridDescriptor,
    /// Worst slack `phi - alpha - l kappa Im tau` per `nu`.
    pub slack: Vec<f64>,
}

/// Checks the hypotheses, then finds the smallest index from which the
/// bound holds on the sampled region `Im tau >= eta`.
pub fn verify_hartogs(
    seq: &CoeffLogSequence,
    domain: &HartogsDomain,
    hyp: &HartogsHypotheses,
) -> Result<HartogsCertificate, HarmonicError> {
    verify_hartogs_with_kappa(seq, domain, hyp, domain.kappa())
}

/// [`verify_hartogs`] with a precomputed kappa.
pub fn verify_hartogs_with_kappa(
    seq: &CoeffLogSequence,
    domain: &HartogsDomain,
    hyp: &HartogsHypotheses,
    kappa: f64,
) -> Result<HartogsCertificate, HarmonicError> {
    hyp.validate()?;
    let roles: Vec<Role> = seq.grid.iter().map(|&z| domain.role(z)).collect();
    let diameter: Vec<usize> = indices(&roles, |r| matches!(r, Role::Diameter));
    let boundary: Vec<usize> = indices(&roles, |r| matches!(r, Role::Boundary));
    let conclusion: Vec<(usize, f64)> = roles
        .iter()
        .enumerate()
        .filter_map(|(j, r)| match *r {
            Role::Interior { y, in_kappa_region: true } if y >= hyp.eta => Some((j, y)),
            _ => None,
        })
        .collect();
    if diameter.is_empty() {
        return Err(HarmonicError::MissingRole("diameter"));
    }
    if boundary.is_empty() {
        return Err(HarmonicError::MissingRole("boundary"));
    }
    if conclusion.is_empty() {
        return Err(HarmonicError::MissingRole("interior (Im >= eta)"));
    }

    let [lo, hi] = seq.nu_range;
    let count = hi + 1 - lo;
    let window = ((count as f64 * hyp.tail_fraction).ceil() as usize).clamp(1, count);
    let tail = hi + 1 - window..=hi;
    let max_on = |nus: std::ops::RangeInclusive<usize>, idx: &[usize]| {
        nus.flat_map(|nu| idx.iter().map(move |&j| seq.row(nu)[j]))
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let tol = hyp.tolerance;
    let checks = [
        (Clause::Diameter, max_on(tail.clone(), &diameter), 0.0),
        (Clause::Boundary, max_on(tail, &boundary), hyp.l),
        (Clause::Global, max_on(seq.nus(), &(0..seq.grid.len()).collect::<Vec<_>>()), hyp.big_l),
    ];
    for (clause, worst, bound) in checks {
        if worst > bound + tol {
            return Err(HarmonicError::HypothesisViolation { clause, worst, bound });
        }
    }

    let slack: Vec<f64> = seq
        .nus()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&nu| {
            let row = seq.row(nu);
            conclusion
                .iter()
                .map(|&(j, y)| row[j] - hyp.alpha - hyp.l * kappa * y)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let first_good_suffix = slack.iter().rposition(|&s| s > tol).map_or(0, |k| k + 1);
    let pass = first_good_suffix < slack.len();
    let max_violation = if pass {
        slack[first_good_suffix..].iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        slack.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    };
    Ok(HartogsCertificate {
        nu_threshold: lo + first_good_suffix,
        kappa,
        l: hyp.l,
        big_l: hyp.big_l,
        alpha: hyp.alpha,
        eta: hyp.eta,
        max_violation,
        pass,
        grid: GridDescriptor {
            domain: domain.geometry(),
            points: seq.grid.len(),
            diameter_points: diameter.len(),
            boundary_points: boundary.len(),
            conclusion_points: conclusion.len(),
            nu_range: seq.nu_range,
        },
        slack,
    })
}

fn indices(roles: &[Role], pred: impl Fn(&Role) -> bool) -> Vec<usize> {
    roles.iter().enumerate().filter(|(_, r)| pred(r)).map(|(j, _)| j).collect()
}

/// Polar grid on a half-disc including the arc, the diameter and the center.
pub fn halfdisc_grid(h: &HalfDisc, n_r: usize, n_theta: usize) -> Vec<Complex64> {
    let c = Complex64::new(h.center, 0.0);
    let s = h.side.sign();
    let mut pts = vec![c];
    for i in 1..=n_r {
        let rho = h.radius * i as f64 / n_r as f64;
        for j in 0..=n_theta {
            let t = PI * j as f64 / n_theta as f64;
            let p = Complex64::from_polar(rho, t);
            pts.push(c + Complex64::new(p.re, s * p.im.max(0.0)));
        }
    }
    pts
}

/// Rectangular grid on an upper or lower strip, edges included.
pub fn strip_grid(s: &Strip, nx: usize, ny: usize) -> Vec<Complex64> {
    let sign = if s.side == StripSide::Lower { -1.0 } else { 1.0 };
    let (lo, hi) = (s.real_extent.lo, s.real_extent.hi);
    let mut pts = Vec::with_capacity((nx + 1) * (ny + 1));
    for k in 0..=ny {
        let y = sign * s.height * k as f64 / ny as f64;
        for i in 0..=nx {
            pts.push(Complex64::new(lo + (hi - lo) * i as f64 / nx as f64, y));
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Interval, Side};

    fn log_family(grid: &[Complex64], nus: [usize; 2]) -> CoeffLogSequence {
        CoeffLogSequence {
            grid: grid.to_vec(),
            values: (nus[0]..=nus[1]).map(|_| grid.iter().map(|z| z.norm().ln()).collect()).collect(),
            nu_range: nus,
        }
    }

    #[test]
    fn log_modulus_family_passes_immediately() {
        let hd = HalfDisc::unit_upper();
        let grid = halfdisc_grid(&hd, 24, 48);
        let seq = log_family(&grid, [1, 40]);
        for alpha in [1e-3, 0.1, 1.0] {
            let hyp = HartogsHypotheses::new(0.0, 0.0, alpha, 0.05).unwrap();
            let cert = verify_hartogs(&seq, &HartogsDomain::HalfDisc(hd), &hyp).unwrap();
            assert!(cert.pass);
            assert_eq!(cert.nu_threshold, 1);
            assert!(cert.max_violation <= 0.0);
        }
    }

    #[test]
    fn positive_constant_fails_diameter_clause() {
        let hd = HalfDisc::unit_upper();
        let grid = halfdisc_grid(&hd, 8, 16);
        let seq = CoeffLogSequence {
            values: vec![vec![0.3; grid.len()]; 20],
            grid,
            nu_range: [1, 20],
        };
        let hyp = HartogsHypotheses::new(0.0, 1.0, 0.1, 0.1).unwrap();
        match verify_hartogs(&seq, &HartogsDomain::HalfDisc(hd), &hyp) {
            Err(HarmonicError::HypothesisViolation { clause, .. }) => assert_eq!(clause, Clause::Diameter),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn threshold_found_for_decaying_violation() {
        // phi_nu = y * l * kappa + 1/nu exceeds the bound until 1/nu <= alpha
        let s = Strip::new(Interval::unit(), 0.5, StripSide::Upper).unwrap();
        let dom = HartogsDomain::Strip(s);
        let kappa = dom.kappa();
        let grid = strip_grid(&s, 20, 10);
        let l = 0.2;
        let values = (1..=50)
            .map(|nu| {
                grid.iter()
                    .map(|z| {
                        let interior = z.im > 0.0 && z.im < 0.5 && z.re.abs() < 1.0;
                        if interior {
                            l * kappa * z.im + 1.0 / nu as f64
                        } else if z.im == 0.0 {
                            -1.0
                        } else {
                            l
                        }
                    })
                    .collect()
            })
            .collect();
        let seq = CoeffLogSequence {
            grid,
            values,
            nu_range: [1, 50],
        };
        let thresholds: Vec<usize> = [0.05, 0.1, 0.2, 0.5]
            .iter()
            .map(|&alpha| {
                let hyp = HartogsHypotheses::new(l, 10.0, alpha, 0.05).unwrap();
                let cert = verify_hartogs_with_kappa(&seq, &dom, &hyp, kappa).unwrap();
                assert!(cert.pass);
                cert.nu_threshold
            })
            .collect();
        assert_eq!(thresholds, vec![20, 10, 5, 2]);
    }

    #[test]
    fn missing_roles_are_reported() {
        let hd = HalfDisc::new(0.0, 1.0, Side::Upper).unwrap();
        let seq = log_family(&[Complex64::new(0.0, 0.5)], [1, 4]);
        let hyp = HartogsHypotheses::new(0.0, 0.0, 0.1, 0.1).unwrap();
        assert!(matches!(
            verify_hartogs(&seq, &HartogsDomain::HalfDisc(hd), &hyp),
            Err(HarmonicError::MissingRole(_))
        ));
    }

    #[test]
    fn hypotheses_validation_and_json() {
        assert!(HartogsHypotheses::new(1.0, 0.5, 0.1, 0.1).is_err());
        assert!(HartogsHypotheses::new(0.0, 0.0, 0.0, 0.1).is_err());
        assert!(HartogsHypotheses::new(0.0, 0.0, 0.1, 1.0).is_err());
        let h: HartogsHypotheses = serde_json::from_str(r#"{"l":0,"L":1,"alpha":0.1,"eta":0.2}"#).unwrap();
        assert_eq!(h.tail_fraction, 0.25);
        assert!(serde_json::from_str::<HartogsHypotheses>(r#"{"l":0,"L":1,"alpha":0.1,"eta":0.2,"x":1}"#).is_err());
    }
}
