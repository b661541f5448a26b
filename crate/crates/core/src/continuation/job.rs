use serde::{Deserialize, Serialize};

use super::ContinuationError;
use crate::gallery::{oracle_with_params, SeparateOracle};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleRef {
    pub name: String,
    #[serde(default)]
    pub params: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    TwoSided,
    OneSidedUp,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::TwoSided => "two_sided",
            Mode::OneSidedUp => "one_sided_up",
        }
    }
}

/// Discretization of the `z1` direction and of the certificate grids.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    /// Width of one interpolation panel along `x1`.
    pub panel_width: f64,
    /// Chebyshev nodes per panel.
    pub panel_nodes: usize,
    pub hartogs_nx: usize,
    pub hartogs_ny: usize,
    /// `z1` height of the seed chart of a march, as a fraction of `delta`.
    pub seed_height_fraction: f64,
    /// Real `x1` samples per overlap check.
    pub overlap_points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            panel_width: 0.1,
            panel_nodes: 24,
            hartogs_nx: 40,
            hartogs_ny: 8,
            seed_height_fraction: 0.25,
            overlap_points: 9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Slack allowed in the certificate clauses.
    pub hartogs: f64,
    /// Relative chart disagreement `|F1 - F2| / (1 + |F|)` allowed on overlaps.
    pub overlap: f64,
    /// Trailing fraction of indices used for limsup clauses.
    pub tail_fraction: f64,
    /// Quadrature circle radius is `(1 - shrink)` times the slice radius,
    /// with `shrink` capped at `alpha / 4`.
    pub quadrature_shrink: f64,
    /// Global clause bound as a multiple of the boundary bound `l`.
    pub global_factor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hartogs: 1e-6,
            overlap: 1e-5,
            tail_fraction: 0.25,
            quadrature_shrink: 0.02,
            global_factor: 2.0,
        }
    }
}

impl Tolerances {
    /// Scales the two acceptance tolerances.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.hartogs *= factor;
        self.overlap *= factor;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContinuationJob {
    pub oracle: OracleRef,
    pub mode: Mode,
    pub delta: f64,
    pub sigma: f64,
    pub alpha: f64,
    #[serde(rename = "N_coeffs", alias = "n_coeffs")]
    pub n_coeffs: usize,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl ContinuationJob {
    /// A job with default grids and tolerances and `sigma = delta / 10`.
    pub fn new(oracle: &str, mode: Mode, delta: f64, alpha: f64, n_coeffs: usize) -> Self {
        Self {
            oracle: OracleRef {
                name: oracle.into(),
                params: vec![],
            },
            mode,
            delta,
            sigma: delta / 10.0,
            alpha,
            n_coeffs,
            grid: GridConfig::default(),
            tolerances: Tolerances::default(),
        }
    }

    pub fn validate(&self) -> Result<(), ContinuationError> {
        let bad = |m: String| Err(ContinuationError::Job(m));
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return bad(format!("delta must lie in (0, 1), got {}", self.delta));
        }
        if !(self.sigma > 0.0 && self.sigma <= self.delta / 8.0) {
            return bad(format!(
                "sigma must lie in (0, delta/8] = (0, {}], got {}",
                self.delta / 8.0,
                self.sigma
            ));
        }
        if !(self.alpha > 0.0 && self.alpha <= 0.5) {
            return bad(format!("alpha must lie in (0, 0.5], got {}", self.alpha));
        }
        if self.n_coeffs < 32 {
            return bad(format!("N_coeffs must be at least 32, got {}", self.n_coeffs));
        }
        let g = &self.grid;
        if !(g.panel_width > 0.0 && g.panel_width <= 2.0) || g.panel_nodes < 4 {
            return bad("panels need positive width <= 2 and at least 4 nodes".into());
        }
        if g.hartogs_nx < 4 || g.hartogs_ny < 2 || g.overlap_points < 2 {
            return bad("certificate grids need nx >= 4, ny >= 2 and overlap_points >= 2".into());
        }
        if !(g.seed_height_fraction > 0.0 && g.seed_height_fraction <= 1.0) {
            return bad("seed_height_fraction must lie in (0, 1]".into());
        }
        let t = &self.tolerances;
        if !(t.hartogs > 0.0 && t.overlap > 0.0 && t.tail_fraction > 0.0 && t.tail_fraction <= 1.0) {
            return bad("tolerances must be positive and tail_fraction in (0, 1]".into());
        }
        if !(t.quadrature_shrink > 0.0 && t.quadrature_shrink < 0.5 && t.global_factor >= 1.0) {
            return bad("quadrature_shrink must lie in (0, 0.5) and global_factor >= 1".into());
        }
        Ok(())
    }

    pub fn oracle(&self) -> Result<SeparateOracle, ContinuationError> {
        Ok(oracle_with_params(&self.oracle.name, &self.oracle.params)?)
    }

    /// `delta' = (1 - alpha) delta`, the chart radius of a march.
    pub fn delta_prime(&self) -> f64 {
        (1.0 - self.alpha) * self.delta
    }

    pub(crate) fn shrink(&self) -> f64 {
        self.tolerances.quadrature_shrink.min(self.alpha / 4.0)
    }

    /// Number of circle samples, a power of two with at least `4(N+1)`.
    pub(crate) fn quadrature_nodes(&self) -> usize {
        (4 * (self.n_coeffs + 1)).next_power_of_two()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut j = ContinuationJob::new("entire", Mode::OneSidedUp, 0.2, 0.25, 64);
        assert!(j.validate().is_ok());
        j.sigma = 0.2 / 7.0;
        assert!(j.validate().is_err());
        j.sigma = 0.02;
        j.alpha = 0.6;
        assert!(j.validate().is_err());
    }

    #[test]
    fn json_round_trip_with_defaults() {
        let text = r#"{"oracle":{"name":"onesided"},"mode":"one_sided_up","delta":0.2,"sigma":0.02,"alpha":0.25,"N_coeffs":64}"#;
        let j: ContinuationJob = serde_json::from_str(text).unwrap();
        assert_eq!(j.grid, GridConfig::default());
        let back: ContinuationJob = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back, j);
        assert!(serde_json::from_str::<ContinuationJob>(&text.replace("\"delta\"", "\"dlt\"")).is_err());
    }
}
