//! Built-in oracles with known structure, and detectors for the two ways
//! separate analyticity can fail to produce an extension.
//!
//! | name       | formula                          | expected          |
//! |------------|----------------------------------|-------------------|
//! | `good2s`   | `1/(3 - z1 - z2)`                | two-sided         |
//! | `entire`   | `exp(z1 z2)`                     | two-sided         |
//! | `onesided` | `1/(z2 - z1 - i h)`, `h = 1/2`   | one-sided up      |
//! | `cordaro`  | `x1 sin(x2 / x1)`, 0 at `x1 = 0` | not tempered      |
//! | `flat`     | `x1 x2 exp(-1/(x1^2 + x2^2))`    | not CR extendible |

mod oracle;
mod probes;

pub use oracle::{Eps1, Expected, OracleMeta, SeparateOracle, SliceDomain};
pub use probes::{
    radius_collapse_probe, temperedness_probe, CollapseVerdict, RadiusCollapseReport, RadiusRow, TemperednessReport,
    TemperednessVerdict, DEFAULT_K_MAX, DEFAULT_NU_MAX, DEFAULT_PROBE_COEFFS,
};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::{Disc, Interval};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GalleryError {
    #[error("unknown oracle `{0}` (registered: good2s, entire, onesided, cordaro, flat)")]
    Unknown(String),
    #[error("oracle `{name}` takes {expected} parameter(s), got {got}")]
    Params { name: String, expected: usize, got: usize },
    #[error("invalid parameter for `{name}`: {reason}")]
    BadParam { name: String, reason: String },
}

/// Registry entry as shown by a listing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpec {
    pub name: &'static str,
    pub formula: &'static str,
    pub params: Vec<f64>,
    pub expected: Expected,
    pub meta: OracleMeta,
}

pub const NAMES: [&str; 5] = ["good2s", "entire", "onesided", "cordaro", "flat"];

fn unit_square() -> [Interval; 2] {
    [Interval::unit(), Interval::unit()]
}

fn formula(name: &str) -> &'static str {
    match name {
        "good2s" => "1/(3 - z1 - z2)",
        "entire" => "exp(z1 z2)",
        "onesided" => "1/(z2 - z1 - i h)",
        "cordaro" => "x1 sin(x2/x1), 0 at x1 = 0",
        _ => "x1 x2 exp(-1/(x1^2 + x2^2)), 0 at the origin",
    }
}

/// Registered oracle with default parameters.
pub fn oracle(name: &str) -> Result<SeparateOracle, GalleryError> {
    oracle_with_params(name, &[])
}

/// Registered oracle; `onesided` accepts the pole height `h` as its only parameter.
pub fn oracle_with_params(name: &str, params: &[f64]) -> Result<SeparateOracle, GalleryError> {
    let no_params = |n: &str| {
        if params.is_empty() {
            Ok(())
        } else {
            Err(GalleryError::Params {
                name: n.into(),
                expected: 0,
                got: params.len(),
            })
        }
    };
    let c0 = Complex64::new(0.0, 0.0);
    Ok(match name {
        "good2s" => {
            no_params(name)?;
            let meta = OracleMeta {
                omega: unit_square(),
                eps1: Eps1::Constant { value: 1.0 },
                z2_domain: SliceDomain::Disc {
                    disc: Disc::new(c0, 1.5).expect("valid disc"),
                },
                continuity: true,
            };
            SeparateOracle::new(name, vec![], Expected::TwoSided, meta, |z1, z2| 1.0 / (3.0 - z1 - z2))
        }
        "entire" => {
            no_params(name)?;
            let meta = OracleMeta {
                omega: unit_square(),
                eps1: Eps1::Constant { value: 4.0 },
                z2_domain: SliceDomain::Plane,
                continuity: true,
            };
            SeparateOracle::new(name, vec![], Expected::TwoSided, meta, |z1, z2| (z1 * z2).exp())
        }
        "onesided" => {
            let h = match params {
                [] => 0.5,
                [h] => *h,
                _ => {
                    return Err(GalleryError::Params {
                        name: name.into(),
                        expected: 1,
                        got: params.len(),
                    })
                }
            };
            if !(h > 0.0 && h.is_finite()) {
                return Err(GalleryError::BadParam {
                    name: name.into(),
                    reason: format!("pole height must be positive, got {h}"),
                });
            }
            let meta = OracleMeta {
                omega: unit_square(),
                eps1: Eps1::Constant { value: h },
                z2_domain: SliceDomain::UpperStrip {
                    half_width: 1.5,
                    height: h,
                },
                continuity: true,
            };
            let shift = Complex64::new(0.0, h);
            SeparateOracle::new(name, vec![h], Expected::OneSidedUp, meta, move |z1, z2| 1.0 / (z2 - z1 - shift))
        }
        "cordaro" => {
            no_params(name)?;
            let meta = OracleMeta {
                omega: unit_square(),
                eps1: Eps1::Constant { value: 0.0 },
                z2_domain: SliceDomain::Plane,
                continuity: true,
            };
            SeparateOracle::new(name, vec![], Expected::NotTempered, meta, move |z1, z2| {
                if z1 == c0 {
                    c0
                } else {
                    z1 * (z2 / z1).sin()
                }
            })
        }
        "flat" => {
            no_params(name)?;
            let meta = OracleMeta {
                omega: unit_square(),
                eps1: Eps1::AbsX2,
                z2_domain: SliceDomain::DiscAbsX1,
                continuity: true,
            };
            SeparateOracle::new(name, vec![], Expected::NotCrExtendible, meta, move |z1, z2| {
                let r2 = z1 * z1 + z2 * z2;
                if r2 == c0 {
                    c0
                } else {
                    z1 * z2 * (-1.0 / r2).exp()
                }
            })
        }
        _ => return Err(GalleryError::Unknown(name.into())),
    })
}

/// All registered oracles with default parameters.
pub fn list() -> Vec<OracleSpec> {
    NAMES
        .iter()
        .map(|&n| {
            let o = oracle(n).expect("registered");
            OracleSpec {
                name: n,
                formula: formula(n),
                params: o.params.clone(),
                expected: o.expected,
                meta: o.meta,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn registry_values() {
        assert_eq!(list().len(), 5);
        let g = oracle("good2s").unwrap();
        assert!((g.eval(c(0.0, 0.0), c(0.0, 0.0)).unwrap() - 1.0 / 3.0).norm() < 1e-15);
        let cd = oracle("cordaro").unwrap();
        for x1 in [-0.9, -0.1, 0.0, 0.3, 0.7] {
            assert_eq!(cd.eval(c(x1, 0.0), c(0.0, 0.0)).unwrap().norm(), 0.0);
        }
        assert!((cd.eval(c(0.5, 0.0), c(0.25, 0.0)).unwrap().re - 0.5 * 0.5f64.sin()).abs() < 1e-15);
        let fl = oracle("flat").unwrap();
        assert!((fl.eval(c(1.0 - 1e-16, 0.0), c(1.0 - 1e-16, 0.0)).unwrap().re - 0.606_530_659_7).abs() < 1e-9);
        assert!(matches!(oracle("nope"), Err(GalleryError::Unknown(_))));
        assert!(oracle_with_params("onesided", &[-1.0]).is_err());
        assert!(oracle_with_params("entire", &[1.0]).is_err());
    }

    #[test]
    fn flat_at_diagonal() {
        let fl = oracle("flat").unwrap();
        for t in [0.25, 0.5, 0.75] {
            let v = fl.eval(c(t, 0.0), c(t, 0.0)).unwrap().re;
            assert!((v - t * t * (-1.0 / (2.0 * t * t)).exp()).abs() < 1e-15);
        }
        assert_eq!(fl.eval(c(0.0, 0.0), c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn declared_domains() {
        let o = oracle("onesided").unwrap();
        assert!(o.eval(c(0.0, 0.0), c(0.0, 0.49)).is_ok());
        assert!(o.eval(c(0.0, 0.0), c(0.0, 0.5)).is_err());
        assert!(o.eval(c(0.0, 0.0), c(0.3, -0.1)).is_err());
        assert!(o.eval(c(0.0, -0.49), c(0.0, 0.0)).is_ok());
        let cd = oracle("cordaro").unwrap();
        assert!(cd.eval(c(0.1, 0.01), c(0.2, 0.0)).is_err());
        let fl = oracle("flat").unwrap();
        assert!(fl.eval(c(0.2, 0.0), c(0.0, 0.19)).is_ok());
        assert!(fl.eval(c(0.2, 0.0), c(0.0, 0.21)).is_err());
    }

    #[test]
    fn cordaro_bounded_by_x1_on_reals() {
        let cd = oracle("cordaro").unwrap();
        for i in 0..=20 {
            for j in 0..=20 {
                let (x1, x2) = (-0.95 + 0.095 * i as f64, -0.95 + 0.095 * j as f64);
                assert!(cd.eval(c(x1, 0.0), c(x2, 0.0)).unwrap().norm() <= x1.abs() + 1e-15);
            }
        }
    }
}
