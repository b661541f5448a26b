//! Real and complex domains: intervals, discs, half-discs, strips, cones and
//! wedges in `C^2 = R^2 + iR^2`.
//!
//! All sets are open unless stated otherwise. [`HalfDisc`] keeps its diameter
//! (it is the closed upper half of the open disc), and wedge queries that need
//! the edge itself go through [`Wedge::contains_with_edge`].
//!
//! Every value serializes to a JSON object carrying a `"kind"` discriminator
//! when wrapped in [`Geometry`].

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },
    #[error("resolution {got:?} rejected for {kind}: {reason}")]
    Resolution {
        kind: &'static str,
        got: Vec<usize>,
        reason: &'static str,
    },
    #[error("sample grid for {kind} is empty")]
    EmptyGrid { kind: &'static str },
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> GeometryError {
    GeometryError::Invalid {
        kind,
        reason: reason.into(),
    }
}

/// A query point: one complex number, a point of the `y`-plane, or a point of `C^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    One(Complex64),
    Plane([f64; 2]),
    Two([Complex64; 2]),
}

impl Point {
    pub fn one(&self) -> Option<Complex64> {
        match self {
            Point::One(z) => Some(*z),
            _ => None,
        }
    }

    pub fn two(&self) -> Option<[Complex64; 2]> {
        match self {
            Point::Two(z) => Some(*z),
            _ => None,
        }
    }
}

/// Uniform interior grid with `n` points, excluding both endpoints.
pub(crate) fn interior_axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n as f64 + 1.0);
    (1..=n).map(|i| lo + step * i as f64).collect()
}

fn axis_counts(kind: &'static str, resolution: &[usize], axes: usize) -> Result<Vec<usize>, GeometryError> {
    let counts = match resolution.len() {
        1 => vec![resolution[0]; axes],
        n if n == axes => resolution.to_vec(),
        _ => {
            return Err(GeometryError::Resolution {
                kind,
                got: resolution.to_vec(),
                reason: "expected one count or one count per axis",
            })
        }
    };
    if counts.iter().any(|&n| n < 2) {
        return Err(GeometryError::Resolution {
            kind,
            got: resolution.to_vec(),
            reason: "need at least 2 points per axis",
        });
    }
    Ok(counts)
}

fn non_empty<T>(kind: &'static str, pts: Vec<T>) -> Result<Vec<T>, GeometryError> {
    if pts.is_empty() {
        Err(GeometryError::EmptyGrid { kind })
    } else {
        Ok(pts)
    }
}

// ---------------------------------------------------------------------------
// Interval

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IntervalRaw")]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalRaw {
    lo: f64,
    hi: f64,
}

impl TryFrom<IntervalRaw> for Interval {
    type Error = GeometryError;
    fn try_from(raw: IntervalRaw) -> Result<Self, Self::Error> {
        Interval::new(raw.lo, raw.hi)
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, GeometryError> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(invalid("interval", format!("need lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// The symmetric interval `(-r, r)`.
    pub fn symmetric(r: f64) -> Result<Self, GeometryError> {
        Self::new(-r, r)
    }

    pub fn unit() -> Self {
        Self { lo: -1.0, hi: 1.0 }
    }

    pub fn contains_real(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.im == 0.0 && self.contains_real(z.re)
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Shrinks the interval about its midpoint by `factor` in `(0, 1]`.
    pub fn shrink(&self, factor: f64) -> Self {
        let half = 0.5 * self.len() * factor;
        Self {
            lo: self.mid() - half,
            hi: self.mid() + half,
        }
    }

    pub fn translate(&self, dx: f64) -> Self {
        Self {
            lo: self.lo + dx,
            hi: self.hi + dx,
        }
    }

    pub fn sample_grid(&self, n: usize) -> Result<Vec<f64>, GeometryError> {
        if n < 2 {
            return Err(GeometryError::Resolution {
                kind: "interval",
                got: vec![n],
                reason: "need at least 2 points per axis",
            });
        }
        Ok(interior_axis(self.lo, self.hi, n))
    }
}

// ---------------------------------------------------------------------------
// Disc

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DiscRaw")]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiscRaw {
    center: Complex64,
    radius: f64,
}

impl TryFrom<DiscRaw> for Disc {
    type Error = GeometryError;
    fn try_from(raw: DiscRaw) -> Result<Self, Self::Error> {
        Disc::new(raw.center, raw.radius)
    }
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Result<Self, GeometryError> {
        if !(radius.is_finite() && radius > 0.0) || !(center.re.is_finite() && center.im.is_finite()) {
            return Err(invalid("disc", format!("radius must be positive, got {radius}")));
        }
        Ok(Self { center, radius })
    }

    pub fn unit() -> Self {
        Self {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius
    }

    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<Complex64>, GeometryError> {
        let n = axis_counts("disc", resolution, 2)?;
        let r = self.radius;
        let xs = interior_axis(self.center.re - r, self.center.re + r, n[0]);
        let ys = interior_axis(self.center.im - r, self.center.im + r, n[1]);
        let pts = ys
            .iter()
            .flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, y)))
            .filter(|z| self.contains(*z))
            .collect();
        non_empty("disc", pts)
    }
}

// ---------------------------------------------------------------------------
// HalfDisc

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Upper => 1.0,
            Side::Lower => -1.0,
        }
    }
}

/// Half of the open disc of radius `radius` about a real center, including
/// the diameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HalfDiscRaw")]
pub struct HalfDisc {
    pub center: f64,
    pub radius: f64,
    pub side: Side,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HalfDiscRaw {
    center: f64,
    radius: f64,
    side: Side,
}

impl TryFrom<HalfDiscRaw> for HalfDisc {
    type Error = GeometryError;
    fn try_from(raw: HalfDiscRaw) -> Result<Self, Self::Error> {
        HalfDisc::new(raw.center, raw.radius, raw.side)
    }
}

impl HalfDisc {
    pub fn new(center: f64, radius: f64, side: Side) -> Result<Self, GeometryError> {
        if !(radius.is_finite() && radius > 0.0 && center.is_finite()) {
            return Err(invalid("half_disc", format!("radius must be positive, got {radius}")));
        }
        Ok(Self { center, radius, side })
    }

    pub fn unit_upper() -> Self {
        Self {
            center: 0.0,
            radius: 1.0,
            side: Side::Upper,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - Complex64::new(self.center, 0.0)).norm() < self.radius && self.side.sign() * z.im >= 0.0
    }

    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<Complex64>, GeometryError> {
        let n = axis_counts("half_disc", resolution, 2)?;
        let r = self.radius;
        let xs = interior_axis(self.center - r, self.center + r, n[0]);
        let ys = interior_axis(0.0, r, n[1]);
        let s = self.side.sign();
        let pts = ys
            .iter()
            .flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, s * y)))
            .filter(|z| self.contains(*z))
            .collect();
        non_empty("half_disc", pts)
    }
}

// ---------------------------------------------------------------------------
// Strip

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StripSide {
    TwoSided,
    Upper,
    Lower,
}

/// `{ tau : Re tau in real_extent, Im tau in (-height, height) }`, or one
/// open half of it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StripRaw")]
pub struct Strip {
    pub real_extent: Interval,
    pub height: f64,
    pub side: StripSide,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StripRaw {
    real_extent: Interval,
    height: f64,
    side: StripSide,
}

impl TryFrom<StripRaw> for Strip {
    type Error = GeometryError;
    fn try_from(raw: StripRaw) -> Result<Self, Self::Error> {
        Strip::new(raw.real_extent, raw.height, raw.side)
    }
}

impl Strip {
    pub fn new(real_extent: Interval, height: f64, side: StripSide) -> Result<Self, GeometryError> {
        if !(height.is_finite() && height > 0.0) {
            return Err(invalid("strip", format!("height must be positive, got {height}")));
        }
        Ok(Self {
            real_extent,
            height,
            side,
        })
    }

    pub fn imag_range(&self) -> (f64, f64) {
        match self.side {
            StripSide::TwoSided => (-self.height, self.height),
            StripSide::Upper => (0.0, self.height),
            StripSide::Lower => (-self.height, 0.0),
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let (lo, hi) = self.imag_range();
        self.real_extent.contains_real(z.re) && lo < z.im && z.im < hi
    }

    /// Membership with the real segment counted in (one-sided strips only).
    pub fn contains_with_base(&self, z: Complex64) -> bool {
        if z.im == 0.0 {
            return self.real_extent.contains_real(z.re);
        }
        self.contains(z)
    }

    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<Complex64>, GeometryError> {
        let n = axis_counts("strip", resolution, 2)?;
        let xs = interior_axis(self.real_extent.lo, self.real_extent.hi, n[0]);
        let (lo, hi) = self.imag_range();
        let ys = interior_axis(lo, hi, n[1]);
        let pts = ys
            .iter()
            .flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, y)))
            .filter(|z| self.contains(*z))
            .collect();
        non_empty("strip", pts)
    }
}

// ---------------------------------------------------------------------------
// Cone

/// Open circular cone `{ y != 0 : angle(y, axis) < aperture }` in the `y`-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ConeRaw")]
pub struct Cone {
    pub axis: [f64; 2],
    pub aperture: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeRaw {
    axis: [f64; 2],
    aperture: f64,
}

impl TryFrom<ConeRaw> for Cone {
    type Error = GeometryError;
    fn try_from(raw: ConeRaw) -> Result<Self, Self::Error> {
        Cone::new(raw.axis, raw.aperture)
    }
}

fn angle_between(a: [f64; 2], b: [f64; 2]) -> f64 {
    let cross = a[0] * b[1] - a[1] * b[0];
    let dot = a[0] * b[0] + a[1] * b[1];
    cross.abs().atan2(dot)
}

impl Cone {
    /// Builds a cone; the axis is normalized, aperture must lie in `(0, pi/2)`.
    pub fn new(axis: [f64; 2], aperture: f64) -> Result<Self, GeometryError> {
        let len = axis[0].hypot(axis[1]);
        if !(len.is_finite() && len > 0.0) {
            return Err(invalid("cone", "axis must be a nonzero vector"));
        }
        if !(aperture > 0.0 && aperture < PI / 2.0) {
            return Err(invalid("cone", format!("aperture must lie in (0, pi/2), got {aperture}")));
        }
        Ok(Self {
            axis: [axis[0] / len, axis[1] / len],
            aperture,
        })
    }

    /// The cone around the positive `y_2` axis.
    pub fn upward(aperture: f64) -> Result<Self, GeometryError> {
        Self::new([0.0, 1.0], aperture)
    }

    pub fn contains(&self, y: [f64; 2]) -> bool {
        if y[0] == 0.0 && y[1] == 0.0 {
            return false;
        }
        angle_between(y, self.axis) < self.aperture
    }

    /// Direction at signed angle `t` from the axis (counter-clockwise).
    pub fn direction(&self, t: f64) -> [f64; 2] {
        let (s, c) = t.sin_cos();
        [c * self.axis[0] - s * self.axis[1], s * self.axis[0] + c * self.axis[1]]
    }

    /// Directions and unit radii; the cone is truncated at `|y| < 1` for sampling.
    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<[f64; 2]>, GeometryError> {
        let n = axis_counts("cone", resolution, 2)?;
        let angles = interior_axis(-self.aperture, self.aperture, n[0]);
        let radii = interior_axis(0.0, 1.0, n[1]);
        let pts = radii
            .iter()
            .flat_map(|&r| {
                angles.iter().map(move |&t| {
                    let d = self.direction(t);
                    [r * d[0], r * d[1]]
                })
            })
            .filter(|y| self.contains(*y))
            .collect();
        non_empty("cone", pts)
    }
}

/// `closure(inner) \ {0}` lies inside `outer`.
pub fn is_proper_subcone(inner: &Cone, outer: &Cone) -> bool {
    angle_between(inner.axis, outer.axis) + inner.aperture < outer.aperture
}

// ---------------------------------------------------------------------------
// Wedge

/// `edge + i (cone truncated by |y| < epsilon)` with a rectangular edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WedgeRaw")]
pub struct Wedge {
    pub edge: [Interval; 2],
    pub cone: Cone,
    pub epsilon: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WedgeRaw {
    edge: [Interval; 2],
    cone: Cone,
    epsilon: f64,
}

impl TryFrom<WedgeRaw> for Wedge {
    type Error = GeometryError;
    fn try_from(raw: WedgeRaw) -> Result<Self, Self::Error> {
        Wedge::new(raw.edge, raw.cone, raw.epsilon)
    }
}

impl Wedge {
    pub fn new(edge: [Interval; 2], cone: Cone, epsilon: f64) -> Result<Self, GeometryError> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(invalid("wedge", format!("epsilon must be positive, got {epsilon}")));
        }
        Ok(Self { edge, cone, epsilon })
    }

    fn edge_contains(&self, z: [Complex64; 2]) -> bool {
        self.edge[0].contains_real(z[0].re) && self.edge[1].contains_real(z[1].re)
    }

    pub fn contains(&self, z: [Complex64; 2]) -> bool {
        let y = [z[0].im, z[1].im];
        self.edge_contains(z) && self.cone.contains(y) && y[0].hypot(y[1]) < self.epsilon
    }

    /// Membership in the wedge together with its edge (`y = 0`).
    pub fn contains_with_edge(&self, z: [Complex64; 2]) -> bool {
        if z[0].im == 0.0 && z[1].im == 0.0 {
            return self.edge_contains(z);
        }
        self.contains(z)
    }

    /// Resolution is `[n_x1, n_x2, n_angle, n_radius]` or a single count.
    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<[Complex64; 2]>, GeometryError> {
        let n = axis_counts("wedge", resolution, 4)?;
        let x1s = interior_axis(self.edge[0].lo, self.edge[0].hi, n[0]);
        let x2s = interior_axis(self.edge[1].lo, self.edge[1].hi, n[1]);
        let angles = interior_axis(-self.cone.aperture, self.cone.aperture, n[2]);
        let radii = interior_axis(0.0, self.epsilon, n[3]);
        let mut pts = Vec::with_capacity(n.iter().product());
        for &x1 in &x1s {
            for &x2 in &x2s {
                for &t in &angles {
                    let d = self.cone.direction(t);
                    for &r in &radii {
                        let z = [Complex64::new(x1, r * d[0]), Complex64::new(x2, r * d[1])];
                        if self.contains(z) {
                            pts.push(z);
                        }
                    }
                }
            }
        }
        non_empty("wedge", pts)
    }
}

// ---------------------------------------------------------------------------
// Tagged union

/// Any geometry value, serialized with a `"kind"` discriminator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Geometry {
    Interval(Interval),
    Disc(Disc),
    HalfDisc(HalfDisc),
    Strip(Strip),
    Cone(Cone),
    Wedge(Wedge),
}

impl Geometry {
    pub fn kind(&self) -> &'static str {
        match self {
            Geometry::Interval(_) => "interval",
            Geometry::Disc(_) => "disc",
            Geometry::HalfDisc(_) => "half_disc",
            Geometry::Strip(_) => "strip",
            Geometry::Cone(_) => "cone",
            Geometry::Wedge(_) => "wedge",
        }
    }

    /// Exact membership; a point of the wrong dimension is never contained.
    pub fn contains(&self, p: Point) -> bool {
        match (self, p) {
            (Geometry::Interval(d), Point::One(z)) => d.contains(z),
            (Geometry::Disc(d), Point::One(z)) => d.contains(z),
            (Geometry::HalfDisc(d), Point::One(z)) => d.contains(z),
            (Geometry::Strip(d), Point::One(z)) => d.contains(z),
            (Geometry::Cone(d), Point::Plane(y)) => d.contains(y),
            (Geometry::Wedge(d), Point::Two(z)) => d.contains(z),
            _ => false,
        }
    }

    pub fn sample_grid(&self, resolution: &[usize]) -> Result<Vec<Point>, GeometryError> {
        Ok(match self {
            Geometry::Interval(d) => {
                if resolution.len() != 1 {
                    return Err(GeometryError::Resolution {
                        kind: "interval",
                        got: resolution.to_vec(),
                        reason: "expected a single count",
                    });
                }
                d.sample_grid(resolution[0])?
                    .into_iter()
                    .map(|x| Point::One(Complex64::new(x, 0.0)))
                    .collect()
            }
            Geometry::Disc(d) => d.sample_grid(resolution)?.into_iter().map(Point::One).collect(),
            Geometry::HalfDisc(d) => d.sample_grid(resolution)?.into_iter().map(Point::One).collect(),
            Geometry::Strip(d) => d.sample_grid(resolution)?.into_iter().map(Point::One).collect(),
            Geometry::Cone(d) => d.sample_grid(resolution)?.into_iter().map(Point::Plane).collect(),
            Geometry::Wedge(d) => d.sample_grid(resolution)?.into_iter().map(Point::Two).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn disc_contains_interior_point() {
        assert!(Disc::unit().contains(c(0.5, 0.0)));
        assert!(!Disc::unit().contains(c(1.0, 0.0)));
    }

    #[test]
    fn half_disc_rejects_wrong_side() {
        let h = HalfDisc::unit_upper();
        assert!(!h.contains(c(0.5, -0.1)));
        assert!(h.contains(c(0.5, 0.0)));
        assert!(h.contains(c(0.0, 0.5)));
    }

    #[test]
    fn wedge_contains_axis_point() {
        let w = Wedge::new(
            [Interval::unit(), Interval::unit()],
            Cone::upward(PI / 6.0).unwrap(),
            0.1,
        )
        .unwrap();
        assert!(w.contains([c(0.0, 0.0), c(0.0, 0.05)]));
        assert!(!w.contains([c(0.0, 0.0), c(0.0, 0.15)]));
        assert!(!w.contains([c(0.0, 0.0), c(0.0, 0.0)]));
        assert!(w.contains_with_edge([c(0.0, 0.0), c(0.0, 0.0)]));
        assert!(!w.contains([c(0.0, 0.05), c(0.0, 0.05)]));
    }

    #[test]
    fn proper_subcone_examples() {
        let outer = Cone::upward(PI / 4.0).unwrap();
        let inner = Cone::upward(PI / 8.0).unwrap();
        assert!(is_proper_subcone(&inner, &outer));
        assert!(!is_proper_subcone(&outer, &outer));
        let tilted = Cone::new([(PI / 4.0).sin(), (PI / 4.0).cos()], PI / 8.0).unwrap();
        assert!(!is_proper_subcone(&tilted, &outer));
    }

    #[test]
    fn tilted_subcone_has_boundary_ray_outside() {
        // sampling check: a boundary ray of the tilted cone escapes the outer cone
        let outer = Cone::upward(PI / 4.0).unwrap();
        let tilted = Cone::new([(PI / 4.0).sin(), (PI / 4.0).cos()], PI / 8.0).unwrap();
        let escapes = (0..=100).any(|k| {
            let t = -tilted.aperture + 2.0 * tilted.aperture * k as f64 / 100.0;
            !outer.contains(tilted.direction(t))
        });
        assert!(escapes);
    }

    #[test]
    fn interval_midpoint_grid() {
        let g = Interval::unit().sample_grid(3).unwrap();
        assert_eq!(g.len(), 3);
        for (a, b) in g.iter().zip([-0.5, 0.0, 0.5]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn strip_grid_counts() {
        let s = Strip::new(Interval::unit(), 0.1, StripSide::Upper).unwrap();
        let g = s.sample_grid(&[4, 4]).unwrap();
        assert_eq!(g.len(), 16);
        assert!(g.iter().all(|z| z.im > 0.0 && z.im < 0.1));
    }

    #[test]
    fn degenerate_resolution_is_rejected() {
        assert!(Interval::unit().sample_grid(1).is_err());
        assert!(Disc::unit().sample_grid(&[1, 5]).is_err());
        assert!(Wedge::new([Interval::unit(), Interval::unit()], Cone::upward(0.3).unwrap(), 0.1)
            .unwrap()
            .sample_grid(&[2, 2, 2])
            .is_err());
    }

    #[test]
    fn invalid_values_rejected() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Disc::new(c(0.0, 0.0), 0.0).is_err());
        assert!(Cone::new([0.0, 1.0], PI / 2.0).is_err());
        assert!(Cone::new([0.0, 0.0], 0.1).is_err());
    }

    #[test]
    fn json_uses_kind_discriminator() {
        let g = Geometry::Disc(Disc::new(c(0.5, -0.25), 2.0).unwrap());
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"kind":"disc","center":[0.5,-0.25],"radius":2.0}"#);
        let back: Geometry = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);

        let strip: Geometry =
            serde_json::from_str(r#"{"kind":"strip","real_extent":{"lo":-1,"hi":1},"height":0.1,"side":"two-sided"}"#)
                .unwrap();
        assert!(strip.contains(Point::One(c(0.0, -0.05))));

        let bad = serde_json::from_str::<Geometry>(r#"{"kind":"disc","center":[0,0],"radius":-1}"#);
        assert!(bad.is_err());
        let unknown = serde_json::from_str::<Geometry>(r#"{"kind":"interval","lo":0,"hi":1,"extra":2}"#);
        assert!(unknown.is_err());
    }
}
