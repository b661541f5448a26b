//! Property suites run by `verify`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::edgewedge::{attach_disc, cauchy_formula_residual, default_bump, extend_at_center, CutoffSpec};
use crate::gallery::{
    oracle, radius_collapse_probe, temperedness_probe, CollapseVerdict, TemperednessVerdict, DEFAULT_K_MAX,
    DEFAULT_NU_MAX, DEFAULT_PROBE_COEFFS,
};
use crate::geometry::{HalfDisc, Interval, Strip, StripSide};
use crate::harmonic::{
    halfdisc_grid, harmonic_measure_mc, hilbert_values, kappa_estimate, kappa_field, strip_grid,
    verify_hartogs, verify_hartogs_with_kappa, BoundaryFunction, Clause, HalfDiscPoisson, HarmonicError,
    HartogsDomain, HartogsHypotheses,
};
use crate::taylor::CoeffLogSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Hartogs,
    Cauchy,
    Discs,
    Probes,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: f64,
    pub threshold: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
}

/// Knobs shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Multiplies every numeric tolerance.
    pub tolerance_scale: f64,
    /// Monte Carlo seed.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            tolerance_scale: 1.0,
            seed: 20_240_601,
        }
    }
}

fn below(name: &str, value: f64, threshold: f64, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass: value < threshold,
        value,
        threshold,
        detail: detail.into(),
    }
}

fn flag(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        value: if pass { 1.0 } else { 0.0 },
        threshold: 1.0,
        detail: detail.into(),
    }
}

fn failed(name: &str, err: impl std::fmt::Display) -> Check {
    flag(name, false, err.to_string())
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let checks = match suite {
        Suite::Hartogs => hartogs(opts),
        Suite::Cauchy => cauchy(opts),
        Suite::Discs => discs(opts),
        Suite::Probes => probes(opts),
    };
    SuiteReport {
        suite,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

fn hartogs(opts: &SuiteOptions) -> Vec<Check> {
    let s = opts.tolerance_scale;
    let mut out = Vec::new();

    let m = 2048;
    let theta: Vec<f64> = (0..m).map(|j| TAU * j as f64 / m as f64).collect();
    let mut worst: f64 = 0.0;
    for k in 1..=32 {
        let kf = k as f64;
        let c: Vec<f64> = theta.iter().map(|t| (kf * t).cos()).collect();
        let sn: Vec<f64> = theta.iter().map(|t| (kf * t).sin()).collect();
        for (j, (a, b)) in hilbert_values(&c).iter().zip(hilbert_values(&sn)).enumerate() {
            worst = worst.max((a - sn[j]).abs()).max((b + c[j]).abs());
        }
    }
    out.push(below("hilbert_cos_sin_k_le_32", worst, 1e-10 * s, "2048 samples"));

    match (kappa_estimate(128), kappa_estimate(256)) {
        (Ok(a), Ok(b)) => out.push(below(
            "kappa_grid_doubling",
            (b - a).abs() / b,
            0.02 * s,
            format!("kappa(128) = {a}, kappa(256) = {b}"),
        )),
        (Err(e), _) | (_, Err(e)) => out.push(failed("kappa_grid_doubling", e)),
    }

    match kappa_field(128) {
        Ok(field) => {
            let (lo, hi) = field
                .u
                .iter()
                .flatten()
                .filter(|v| !v.is_nan())
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
            out.push(flag(
                "maximum_principle",
                lo >= -1e-12 && hi <= 1.0 + 1e-12,
                format!("u in [{lo}, {hi}]"),
            ));
        }
        Err(e) => out.push(failed("maximum_principle", e)),
    }

    let z = Complex64::new(0.0, 0.5);
    let mc = harmonic_measure_mc(z, 1_000_000, opts.seed, 1e-5);
    match BoundaryFunction::chi_half_disc(8192, 16).and_then(|bf| HalfDiscPoisson::new(&bf)?.eval(z)) {
        Ok(u) => out.push(below(
            "monte_carlo_harmonic_measure",
            (u.value.re - mc.mean).abs() / mc.std_err,
            3.0 * s,
            format!("u(0.5i) = {}, walks {} seed {} mean {}", u.value.re, mc.walks, opts.seed, mc.mean),
        )),
        Err(e) => out.push(failed("monte_carlo_harmonic_measure", e)),
    }

    let hd = HalfDisc::unit_upper();
    let grid = halfdisc_grid(&hd, 24, 48);
    let log_family = CoeffLogSequence {
        values: vec![grid.iter().map(|z| z.norm().ln()).collect(); 40],
        grid,
        nu_range: [1, 40],
    };
    let log_ok = [1e-3, 0.1, 1.0].iter().all(|&alpha| {
        HartogsHypotheses::new(0.0, 0.0, alpha, 0.05)
            .and_then(|h| verify_hartogs(&log_family, &HartogsDomain::HalfDisc(hd), &h))
            .is_ok_and(|c| c.pass && c.nu_threshold == 1)
    });
    out.push(flag("log_modulus_family_passes", log_ok, "nu_threshold = nu_min for alpha in {1e-3, 0.1, 1}"));

    let grid = halfdisc_grid(&hd, 8, 16);
    let constant = CoeffLogSequence {
        values: vec![vec![0.3; grid.len()]; 20],
        grid,
        nu_range: [1, 20],
    };
    let rejected = HartogsHypotheses::new(0.0, 1.0, 0.1, 0.1)
        .and_then(|h| verify_hartogs(&constant, &HartogsDomain::HalfDisc(hd), &h));
    out.push(flag(
        "constant_family_rejected_on_diameter",
        matches!(
            rejected,
            Err(HarmonicError::HypothesisViolation {
                clause: Clause::Diameter,
                ..
            })
        ),
        format!("{:?}", rejected.map(|c| c.pass)),
    ));

    out.push(alpha_monotonicity());
    out
}

/// `phi_nu = l kappa y + 1/nu` inside a strip: the threshold must not grow with alpha.
fn alpha_monotonicity() -> Check {
    let strip = match Strip::new(Interval::unit(), 0.5, StripSide::Upper) {
        Ok(s) => s,
        Err(e) => return failed("alpha_monotonicity", e),
    };
    let dom = HartogsDomain::Strip(strip);
    let kappa = dom.kappa();
    let grid = strip_grid(&strip, 20, 10);
    let l = 0.2;
    let values = (1..=50)
        .map(|nu| {
            grid.iter()
                .map(|z| {
                    if z.im == 0.0 {
                        -1.0
                    } else if z.im < 0.5 && z.re.abs() < 1.0 {
                        l * kappa * z.im + 1.0 / nu as f64
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
    let thresholds: Result<Vec<usize>, HarmonicError> = [0.05, 0.1, 0.2, 0.5]
        .iter()
        .map(|&alpha| {
            let h = HartogsHypotheses::new(l, 10.0, alpha, 0.05)?;
            let c = verify_hartogs_with_kappa(&seq, &dom, &h, kappa)?;
            Ok(if c.pass { c.nu_threshold } else { usize::MAX })
        })
        .collect();
    match thresholds {
        Ok(t) => flag(
            "alpha_monotonicity",
            t.windows(2).all(|w| w[1] <= w[0]) && t[0] != usize::MAX,
            format!("thresholds {t:?} for alpha 0.05, 0.1, 0.2, 0.5"),
        ),
        Err(e) => failed("alpha_monotonicity", e),
    }
}

fn cauchy(opts: &SuiteOptions) -> Vec<Check> {
    let s = opts.tolerance_scale;
    let chi = match Interval::new(-0.5, 0.5)
        .and_then(|inner| Ok((inner, Interval::new(-0.9, 0.9)?)))
        .map_err(|e| e.to_string())
        .and_then(|(i, o)| CutoffSpec::new(i, o, 2, 0.4).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => return vec![failed("cutoff", e)],
    };
    let mut out = Vec::new();
    let cases: [(&str, fn(&[f64], Complex64) -> Complex64); 3] = [
        ("square", |_, z| z * z),
        ("pole_at_minus_2i", |_, z| 1.0 / (z + Complex64::new(0.0, 2.0))),
        ("constant", |_, _| Complex64::new(1.0, 0.0)),
    ];
    for (name, f) in cases {
        match cauchy_formula_residual(f, &chi, &[], 0.1, 0.05, 2000) {
            Ok(r) => {
                out.push(below(
                    &format!("residual_{name}"),
                    r.residual,
                    1e-6 * s,
                    format!("2000 points, coarse residual {}", r.residual_coarse),
                ));
                out.push(flag(
                    &format!("refinement_{name}"),
                    r.residual <= r.residual_coarse || r.residual < 1e-12,
                    format!("{} -> {}", r.residual_coarse, r.residual),
                ));
            }
            Err(e) => out.push(failed(&format!("residual_{name}"), e)),
        }
    }
    let sq = |_: &[f64], z: Complex64| z * z;
    match (
        cauchy_formula_residual(sq, &chi, &[], 0.1, 0.04, 400),
        cauchy_formula_residual(sq, &chi, &[], 0.1, 0.02, 400),
    ) {
        (Ok(a), Ok(b)) => {
            let ratio = b.area_term.norm() / a.area_term.norm();
            out.push(flag(
                "correction_halves_with_height",
                (0.4..=0.6).contains(&ratio),
                format!("ratio {ratio}"),
            ));
        }
        (Err(e), _) | (_, Err(e)) => out.push(failed("correction_halves_with_height", e)),
    }
    out
}

fn discs(opts: &SuiteOptions) -> Vec<Check> {
    let s = opts.tolerance_scale;
    let mut out = Vec::new();
    let bumps = |m| Ok::<_, crate::edgewedge::EdgeWedgeError>((default_bump(1, m)?, default_bump(2, m)?));
    let (b1, b2) = match bumps(1024) {
        Ok(b) => b,
        Err(e) => return vec![failed("bump_profiles", e)],
    };
    let mean_err = (b1.mean() - 1.0).abs().max((b2.mean() - 1.0).abs());
    out.push(below("bump_unit_mean", mean_err, 1e-10 * s, "grid 1024"));

    let xs: Vec<f64> = (0..5).map(|k| -0.5 + 0.25 * k as f64).collect();
    let ls: Vec<f64> = (1..=4).map(|k| 0.05 * k as f64).collect();
    let mut center_err: f64 = 0.0;
    let mut linear_err: f64 = 0.0;
    let mut errors = Vec::new();
    for &a in &xs {
        for &b in &xs {
            for &l1 in &ls {
                for &l2 in &ls {
                    match attach_disc([a, b], [l1, l2], (&b1, &b2)) {
                        Ok(d) => {
                            let target = [Complex64::new(a, l1), Complex64::new(b, l2)];
                            center_err = center_err
                                .max((d.center[0] - target[0]).norm())
                                .max((d.center[1] - target[1]).norm());
                            let vals: Vec<Complex64> = d.boundary.iter().map(|z| z[0] + z[1]).collect();
                            if let Ok(v) = extend_at_center(&d, &vals) {
                                linear_err = linear_err.max((v - target[0] - target[1]).norm());
                            }
                        }
                        Err(e) => errors.push(e.to_string()),
                    }
                }
            }
        }
    }
    if errors.is_empty() {
        out.push(below("disc_center_identity", center_err, 1e-8 * s, "5x5 base points x 4x4 lifts, grid 1024"));
        out.push(below("linear_center_value", linear_err, 1e-9 * s, "f = z1 + z2"));
    } else {
        out.push(failed("disc_center_identity", errors.join("; ")));
    }

    match bumps(2048).and_then(|(c1, c2)| {
        let d = attach_disc([0.2, -0.3], [0.15, 0.1], (&c1, &c2))?;
        let vals: Vec<Complex64> = d.boundary.iter().map(|z| (z[0] * z[1]).exp()).collect();
        Ok((extend_at_center(&d, &vals)?, (d.center[0] * d.center[1]).exp()))
    }) {
        Ok((v, exact)) => out.push(below("exp_product_center_value", (v - exact).norm(), 1e-8 * s, "grid 2048")),
        Err(e) => out.push(failed("exp_product_center_value", e)),
    }
    out
}

fn probes(opts: &SuiteOptions) -> Vec<Check> {
    let s = opts.tolerance_scale;
    let mut out = Vec::new();
    match oracle("cordaro") {
        Ok(o) => {
            let r = temperedness_probe(&o, 0.0, DEFAULT_K_MAX, DEFAULT_NU_MAX);
            out.push(flag(
                "cordaro_not_tempered",
                r.verdict == TemperednessVerdict::NotTempered,
                format!("fitted k {}", r.fitted_k),
            ));
            let exact = 10f64.sinh() / 100.0;
            match r.rows.iter().find(|row| row.nu == 10) {
                Some(row) => out.push(below(
                    "cordaro_growth_at_nu_10",
                    (row.abs_f - exact).abs() / exact,
                    1e-9 * s,
                    format!("|f| = {}", row.abs_f),
                )),
                None => out.push(failed("cordaro_growth_at_nu_10", "row nu = 10 missing")),
            }
        }
        Err(e) => out.push(failed("cordaro_not_tempered", e)),
    }
    match oracle("flat") {
        Ok(o) => {
            let path = [[0.5, 0.0], [0.25, 0.0], [0.125, 0.0]];
            let r = radius_collapse_probe(&o, 2, &path, DEFAULT_PROBE_COEFFS);
            out.push(flag(
                "flat_not_cr_extendible",
                r.verdict == CollapseVerdict::NotCrExtendible,
                "path (t, 0), t = 0.5, 0.25, 0.125",
            ));
            let worst = r
                .rows
                .iter()
                .map(|row| row.radius.map_or(f64::INFINITY, |x| (x.value() / row.point[0] - 1.0).abs()))
                .fold(0.0, f64::max);
            out.push(below("flat_radius_tracks_t", worst, 0.3 * s, "relative deviation of radius from t"));
        }
        Err(e) => out.push(failed("flat_not_cr_extendible", e)),
    }
    match oracle("good2s") {
        Ok(o) => {
            let r = temperedness_probe(&o, 0.3, DEFAULT_K_MAX, DEFAULT_NU_MAX);
            out.push(flag(
                "good2s_tempered",
                r.verdict == TemperednessVerdict::Tempered,
                format!("fitted k {}", r.fitted_k),
            ));
        }
        Err(e) => out.push(failed("good2s_tempered", e)),
    }
    out
}
