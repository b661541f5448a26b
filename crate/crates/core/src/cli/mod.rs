//! Command-line front end. The `crwedge` binary only parses arguments and
//! calls [`execute`].
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid configuration.

mod suites;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::continuation::{
    evaluate_extension, run, write_evaluation_csv, ContinuationError, ContinuationJob, ExtensionAtlas,
    SideCertificate,
};
use crate::gallery::{self, Expected};

pub use suites::{run_suite, Check, Suite, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "crwedge", version, about = "Holomorphic extension of separately analytic functions to wedges")]
pub struct Cli {
    /// JSON configuration for the command.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file; stdout when omitted (the atlas of `march` defaults to `atlas.json`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed of the Monte Carlo cross-check.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Multiplies all acceptance tolerances.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tolerance_scale: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Registered oracles.
    #[command(subcommand)]
    Gallery(GalleryCommand),
    /// Runs the continuation job given by `--config`.
    March,
    /// Runs a property suite and prints one JSON verdict per check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Samples an atlas along the slice described in `--config` and writes CSV.
    Report { atlas: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GalleryCommand {
    List,
    Eval {
        name: String,
        #[arg(allow_hyphen_values = true)]
        z1: Complex64,
        #[arg(allow_hyphen_values = true)]
        z2: Complex64,
        /// Oracle parameters, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<f64>,
    },
}

/// Real or imaginary part of one of the two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coord {
    Z1Re,
    Z1Im,
    Z2Re,
    Z2Im,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceAxis {
    pub coord: Coord,
    pub from: f64,
    pub to: f64,
    pub n: usize,
}

/// A 1-D or 2-D grid through `base`. Points run over the last axis fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceSpec {
    pub base: [Complex64; 2],
    pub axes: Vec<SliceAxis>,
}

impl SliceSpec {
    pub fn points(&self) -> Result<Vec<[Complex64; 2]>, String> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(format!("slice needs 1 or 2 axes, got {}", self.axes.len()));
        }
        if self.axes.len() == 2 && self.axes[0].coord == self.axes[1].coord {
            return Err("slice axes must differ".into());
        }
        let values = |a: &SliceAxis| -> Result<Vec<f64>, String> {
            match a.n {
                0 => Err("slice axis with n = 0".into()),
                1 => Ok(vec![a.from]),
                n => Ok((0..n).map(|k| a.from + (a.to - a.from) * k as f64 / (n - 1) as f64).collect()),
            }
        };
        let set = |z: &mut [Complex64; 2], c: Coord, v: f64| match c {
            Coord::Z1Re => z[0].re = v,
            Coord::Z1Im => z[0].im = v,
            Coord::Z2Re => z[1].re = v,
            Coord::Z2Im => z[1].im = v,
        };
        let first = values(&self.axes[0])?;
        let second = match self.axes.get(1) {
            Some(a) => Some((a.coord, values(a)?)),
            None => None,
        };
        let mut pts = Vec::new();
        for &u in &first {
            let mut z = self.base;
            set(&mut z, self.axes[0].coord, u);
            match &second {
                Some((c, vs)) => {
                    for &v in vs {
                        let mut w = z;
                        set(&mut w, *c, v);
                        pts.push(w);
                    }
                }
                None => pts.push(z),
            }
        }
        Ok(pts)
    }
}

/// One row of the `march` summary table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepSummary {
    pub step: i32,
    pub center: Complex64,
    pub pass: bool,
    pub radius: f64,
    pub strip_height: f64,
    pub z1_height: f64,
}

#[derive(Debug, Serialize)]
struct StepCertificates<'a> {
    step: i32,
    center: Complex64,
    certificates: &'a [SideCertificate],
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn config_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_CONFIG,
        message: message.into(),
    }
}

fn check_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_CHECK,
        message: message.into(),
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Failure {
    config_error(format!("{}: {e}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| io_error(path, e))
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_error(p, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| check_error(format!("stdout: {e}"))),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code; diagnostics go to `stderr`.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdout, stderr),
        Err(e) => {
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_CONFIG
                }
            }
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if !(cli.tolerance_scale > 0.0) {
        let _ = writeln!(stderr, "--tolerance-scale must be positive");
        return EXIT_CONFIG;
    }
    // Output is buffered so the pool closure does not borrow the writer.
    let mut buf = Vec::new();
    let result = match cli.workers {
        Some(0) => Err(config_error("--workers must be at least 1")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli, &mut buf)),
            Err(e) => Err(config_error(e.to_string())),
        },
        None => dispatch(cli, &mut buf),
    };
    if let Err(e) = stdout.write_all(&buf).and_then(|_| stdout.flush()) {
        let _ = writeln!(stderr, "error: stdout: {e}");
        return EXIT_CHECK;
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Gallery(g) => gallery_cmd(g, cli, stdout),
        Command::March => march_cmd(cli, stdout),
        Command::Verify { suite } => verify_cmd(*suite, cli, stdout),
        Command::Report { atlas } => report_cmd(atlas, cli, stdout),
    }
}

fn gallery_cmd(g: &GalleryCommand, cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match g {
        GalleryCommand::List => {
            let list = gallery::list();
            let mut text = serde_json::to_string_pretty(&list).map_err(|e| check_error(e.to_string()))?;
            text.push('\n');
            emit(cli.out.as_deref(), stdout, &text)?;
            Ok(EXIT_OK)
        }
        GalleryCommand::Eval { name, z1, z2, params } => {
            let o = gallery::oracle_with_params(name, params).map_err(|e| config_error(e.to_string()))?;
            let value = o.eval(*z1, *z2).map_err(|e| config_error(e.to_string()))?;
            let spec = gallery::list().into_iter().find(|s| s.name == o.name);
            #[derive(Serialize)]
            struct EvalOut<'a> {
                oracle: &'a str,
                params: &'a [f64],
                formula: Option<&'static str>,
                expected: Expected,
                z1: Complex64,
                z2: Complex64,
                value: Complex64,
                abs: f64,
            }
            let out = EvalOut {
                oracle: &o.name,
                params: &o.params,
                formula: spec.map(|s| s.formula),
                expected: o.expected,
                z1: *z1,
                z2: *z2,
                value,
                abs: value.norm(),
            };
            let mut text = serde_json::to_string_pretty(&out).map_err(|e| check_error(e.to_string()))?;
            text.push('\n');
            emit(cli.out.as_deref(), stdout, &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Table rows and certificate records of an atlas, in chart order.
pub fn summarize(atlas: &ExtensionAtlas) -> Vec<StepSummary> {
    atlas
        .charts
        .iter()
        .map(|c| StepSummary {
            step: c.id,
            center: c.center,
            pass: !c.certificates.is_empty() && c.certificates.iter().all(|s| s.certificate.pass),
            radius: c.radius,
            strip_height: c.certificates.first().map_or(0.0, |s| s.strip_height),
            z1_height: c.z1_height,
        })
        .collect()
}

fn summary_table(rows: &[StepSummary]) -> String {
    let mut t = String::new();
    let _ = writeln!(
        t,
        "{:>5}  {:>22}  {:>6}  {:>10}  {:>12}  {:>12}",
        "step", "center", "cert", "radius", "strip_height", "z1_height"
    );
    for r in rows {
        let cert = if r.step == 0 && r.strip_height == 0.0 {
            "seed"
        } else if r.pass {
            "pass"
        } else {
            "FAIL"
        };
        let _ = writeln!(
            t,
            "{:>5}  {:>22}  {:>6}  {:>10.6}  {:>12.4e}  {:>12.4e}",
            r.step,
            format!("{:.5}{:+.5}i", r.center.re, r.center.im),
            cert,
            r.radius,
            r.strip_height,
            r.z1_height
        );
    }
    t
}

fn certificates_path(atlas_path: &Path) -> PathBuf {
    atlas_path.with_extension("certificates.json")
}

fn write_atlas(atlas: &ExtensionAtlas, path: &Path) -> Result<(), Failure> {
    let json = atlas.to_json().map_err(|e| check_error(e.to_string()))?;
    fs::write(path, json).map_err(|e| io_error(path, e))?;
    let certs: Vec<StepCertificates> = atlas
        .charts
        .iter()
        .map(|c| StepCertificates {
            step: c.id,
            center: c.center,
            certificates: &c.certificates,
        })
        .collect();
    let cpath = certificates_path(path);
    let json = serde_json::to_string_pretty(&certs).map_err(|e| check_error(e.to_string()))?;
    fs::write(&cpath, json).map_err(|e| io_error(&cpath, e))
}

fn march_cmd(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let path = cli.config.as_deref().ok_or_else(|| config_error("march needs --config JOB.json"))?;
    let mut job: ContinuationJob = read_json(path)?;
    job.tolerances = job.tolerances.scaled(cli.tolerance_scale);
    job.validate().map_err(|e| config_error(e.to_string()))?;
    let out = cli.out.clone().unwrap_or_else(|| PathBuf::from("atlas.json"));
    match run(&job) {
        Ok(atlas) => {
            write_atlas(&atlas, &out)?;
            let rows = summarize(&atlas);
            let mut text = summary_table(&rows);
            let d = &atlas.diagnostics;
            let _ = writeln!(
                text,
                "steps forward {} backward {}; worst overlap {:.3e}; atlas {}",
                d.steps_forward,
                d.steps_backward,
                d.worst_overlap,
                out.display()
            );
            stdout.write_all(text.as_bytes()).map_err(|e| check_error(e.to_string()))?;
            let certified = rows.iter().filter(|r| r.strip_height > 0.0).all(|r| r.pass);
            Ok(if certified { EXIT_OK } else { EXIT_CHECK })
        }
        Err(e) => {
            let partial = match &e {
                ContinuationError::Certificate { partial: Some(p), .. } => Some(p.as_ref()),
                ContinuationError::Overlap { partial, .. } => Some(partial.as_ref()),
                _ => None,
            };
            if let Some(p) = partial {
                write_atlas(p, &out)?;
                let _ = stdout.write_all(summary_table(&summarize(p)).as_bytes());
            }
            Err(match e {
                ContinuationError::Job(_) | ContinuationError::Mode { .. } | ContinuationError::Gallery(_) => {
                    config_error(e.to_string())
                }
                _ => check_error(e.to_string()),
            })
        }
    }
}

fn verify_cmd(suite: Suite, cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let mut opts = SuiteOptions {
        tolerance_scale: cli.tolerance_scale,
        ..SuiteOptions::default()
    };
    if let Some(seed) = cli.seed {
        opts.seed = seed;
    }
    let report = run_suite(suite, &opts);
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| check_error(e.to_string()))?;
    text.push('\n');
    emit(cli.out.as_deref(), stdout, &text)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_CHECK })
}

fn report_cmd(atlas_path: &Path, cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let slice_path = cli
        .config
        .as_deref()
        .ok_or_else(|| config_error("report needs --config SLICE.json"))?;
    let atlas: ExtensionAtlas = read_json(atlas_path)?;
    let spec: SliceSpec = read_json(slice_path)?;
    let points = spec.points().map_err(config_error)?;
    let rows = points
        .iter()
        .map(|&z| evaluate_extension(&atlas, z).map(|e| (z, e)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| check_error(e.to_string()))?;
    let mut buf = Vec::new();
    write_evaluation_csv(&rows, &mut buf).map_err(|e| check_error(e.to_string()))?;
    let text = String::from_utf8(buf).map_err(|e| check_error(e.to_string()))?;
    emit(cli.out.as_deref(), stdout, &text)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(std::iter::once("crwedge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gallery_list_and_eval() {
        let (code, out, _) = run_args(&["gallery", "list"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);

        let (code, out, _) = run_args(&["gallery", "eval", "good2s", "0", "0"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"][0].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);

        let (code, out, _) = run_args(&["gallery", "eval", "cordaro", "0.5", "0.25"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"][0].as_f64().unwrap() - 0.5 * 0.5f64.sin()).abs() < 1e-12);

        let (code, _, err) = run_args(&["gallery", "eval", "nope", "0", "0"]);
        assert_eq!(code, EXIT_CONFIG);
        assert!(err.contains("nope"));
    }

    #[test]
    fn negative_complex_arguments_parse() {
        let (code, out, _) = run_args(&["gallery", "eval", "entire", "-0.5+0.1i", "-0.9"]);
        assert_eq!(code, EXIT_OK, "{out}");
    }

    #[test]
    fn slice_points_ordering() {
        let spec = SliceSpec {
            base: [Complex64::new(0.1, 0.0), Complex64::new(0.0, 0.2)],
            axes: vec![
                SliceAxis {
                    coord: Coord::Z1Re,
                    from: 0.0,
                    to: 1.0,
                    n: 2,
                },
                SliceAxis {
                    coord: Coord::Z2Re,
                    from: -1.0,
                    to: 1.0,
                    n: 3,
                },
            ],
        };
        let p = spec.points().unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p[1], [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.2)]);
        assert_eq!(p[5], [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.2)]);
        let bad = SliceSpec { axes: vec![], ..spec };
        assert!(bad.points().is_err());
    }

    #[test]
    fn bad_flags_are_config_errors() {
        assert_eq!(run_args(&["march"]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["--tolerance-scale", "0", "gallery", "list"]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["--workers", "0", "gallery", "list"]).0, EXIT_CONFIG);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_CONFIG);
    }
}
