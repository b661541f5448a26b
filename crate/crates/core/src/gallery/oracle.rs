//! Functions of two variables known only through their separate extensions.
//!
//! [`SeparateOracle::eval`] answers only where the metadata allows: at real
//! points of the edge, along a `z_2` slice over a real `x_1`, or along a
//! `z_1` slice over a real `x_2`. Anything else is a [`DomainError`], so the
//! pipeline cannot consult the function off those sets by accident.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::{Disc, Interval};
use crate::DomainError;

/// Height of the `z_1` extension over the slice `x_2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eps1 {
    Constant { value: f64 },
    /// `|x_2|`: collapses at `x_2 = 0`.
    AbsX2,
}

impl Eps1 {
    pub fn at(&self, x2: f64) -> f64 {
        match *self {
            Eps1::Constant { value } => value,
            Eps1::AbsX2 => x2.abs(),
        }
    }
}

/// Domain of `z_2 -> f(x_1, z_2)` for real `x_1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SliceDomain {
    /// Entire in `z_2`.
    Plane,
    Disc { disc: Disc },
    /// `|Re z_2| < half_width`, `0 <= Im z_2 < height` (real axis included).
    UpperStrip { half_width: f64, height: f64 },
    /// `|z_2| < |x_1|`.
    DiscAbsX1,
}

impl SliceDomain {
    pub fn contains(&self, x1: f64, z2: Complex64) -> bool {
        match *self {
            SliceDomain::Plane => true,
            SliceDomain::Disc { disc } => disc.contains(z2),
            SliceDomain::UpperStrip { half_width, height } => {
                z2.re.abs() < half_width && z2.im >= 0.0 && z2.im < height
            }
            SliceDomain::DiscAbsX1 => z2.norm() < x1.abs(),
        }
    }

    /// Distance from `z2` to the complement of the slice domain.
    pub fn boundary_distance(&self, x1: f64, z2: Complex64) -> f64 {
        match *self {
            SliceDomain::Plane => f64::INFINITY,
            SliceDomain::Disc { disc } => (disc.radius - (z2 - disc.center).norm()).max(0.0),
            SliceDomain::UpperStrip { half_width, height } => (half_width - z2.re.abs())
                .min(height - z2.im)
                .min(z2.im)
                .max(0.0),
            SliceDomain::DiscAbsX1 => (x1.abs() - z2.norm()).max(0.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    TwoSided,
    OneSidedUp,
    NotCrExtendible,
    NotTempered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleMeta {
    pub omega: [Interval; 2],
    pub eps1: Eps1,
    pub z2_domain: SliceDomain,
    pub continuity: bool,
}

type EvalFn = Arc<dyn Fn(Complex64, Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone)]
pub struct SeparateOracle {
    pub name: String,
    pub params: Vec<f64>,
    pub expected: Expected,
    pub meta: OracleMeta,
    f: EvalFn,
}

impl fmt::Debug for SeparateOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeparateOracle")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("expected", &self.expected)
            .field("meta", &self.meta)
            .finish()
    }
}

impl SeparateOracle {
    pub fn new(
        name: impl Into<String>,
        params: Vec<f64>,
        expected: Expected,
        meta: OracleMeta,
        f: impl Fn(Complex64, Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            params,
            expected,
            meta,
            f: Arc::new(f),
        }
    }

    /// The defining formula, without domain checks. Reference values only.
    pub fn closed_form(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        (self.f)(z1, z2)
    }

    /// Domain-checked evaluation.
    pub fn eval(&self, z1: Complex64, z2: Complex64) -> Result<Complex64, DomainError> {
        match (z1.im == 0.0, z2.im == 0.0) {
            (true, _) => self.eval_z2_slice(z1.re, z2),
            (false, true) => self.eval_z1_slice(z1, z2.re),
            (false, false) => Err(DomainError::new(format!(
                "({z1}, {z2}) has both coordinates off the real axis; {} is only known on separate slices",
                self.name
            ))),
        }
    }

    /// `f(x_1, z_2)` for real `x_1` in the edge.
    pub fn eval_z2_slice(&self, x1: f64, z2: Complex64) -> Result<Complex64, DomainError> {
        if !self.meta.omega[0].contains_real(x1) {
            return Err(DomainError::new(format!("x1 = {x1} is outside the edge")));
        }
        let real_point = z2.im == 0.0 && self.meta.omega[1].contains_real(z2.re);
        if !real_point && !self.meta.z2_domain.contains(x1, z2) {
            return Err(DomainError::new(format!(
                "z2 = {z2} is outside the slice domain of {} over x1 = {x1}",
                self.name
            )));
        }
        self.finite((self.f)(Complex64::new(x1, 0.0), z2), x1.into(), z2)
    }

    /// `f(z_1, x_2)` for real `x_2` in the edge and `|Im z_1| < eps1(x_2)`.
    pub fn eval_z1_slice(&self, z1: Complex64, x2: f64) -> Result<Complex64, DomainError> {
        if !self.meta.omega[1].contains_real(x2) {
            return Err(DomainError::new(format!("x2 = {x2} is outside the edge")));
        }
        let eps = self.meta.eps1.at(x2);
        if z1.im != 0.0 && z1.im.abs() >= eps {
            return Err(DomainError::new(format!(
                "|Im z1| = {} exceeds the z1 extension height {eps} of {} over x2 = {x2}",
                z1.im.abs(),
                self.name
            )));
        }
        if z1.im == 0.0 && !self.meta.omega[0].contains_real(z1.re) {
            return Err(DomainError::new(format!("x1 = {} is outside the edge", z1.re)));
        }
        self.finite((self.f)(z1, Complex64::new(x2, 0.0)), z1, x2.into())
    }

    fn finite(&self, v: Complex64, z1: Complex64, z2: Complex64) -> Result<Complex64, DomainError> {
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(DomainError::new(format!("{} is not finite at ({z1}, {z2})", self.name)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slice_domains() {
        let s = SliceDomain::UpperStrip {
            half_width: 1.5,
            height: 0.5,
        };
        assert!(s.contains(0.0, Complex64::new(0.3, 0.2)));
        assert!(!s.contains(0.0, Complex64::new(0.3, 0.5)));
        assert!(!s.contains(0.0, Complex64::new(0.3, -0.1)));
        assert!((s.boundary_distance(0.0, Complex64::new(0.0, 0.2)) - 0.2).abs() < 1e-15);
        assert!(SliceDomain::DiscAbsX1.contains(0.5, Complex64::new(0.0, 0.4)));
        assert!(!SliceDomain::DiscAbsX1.contains(0.5, Complex64::new(0.0, 0.5)));
    }

    #[test]
    fn eval_refuses_points_off_the_slices() {
        let meta = OracleMeta {
            omega: [Interval::unit(), Interval::unit()],
            eps1: Eps1::Constant { value: 0.5 },
            z2_domain: SliceDomain::Plane,
            continuity: true,
        };
        let o = SeparateOracle::new("sum", vec![], Expected::TwoSided, meta, |a, b| a + b);
        let c = Complex64::new;
        assert!(o.eval(c(0.1, 0.1), c(0.2, 0.1)).is_err());
        assert!(o.eval(c(0.1, 0.6), c(0.2, 0.0)).is_err());
        assert!(o.eval(c(0.1, 0.4), c(0.2, 0.0)).is_ok());
        assert!(o.eval(c(1.5, 0.0), c(0.2, 0.3)).is_err());
        assert!((o.eval(c(0.1, 0.0), c(0.2, 7.0)).unwrap() - c(0.3, 7.0)).norm() < 1e-15);
    }
}
