//! Run configuration: a single structure covering all four experiments,
//! loadable from a TOML file with command-line flags taking precedence.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Simulate,
    Converge,
    Benchmark,
    ShadowVerify,
}

/// Cost units per logical evaluation, mirroring the lab defaults.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct WeightsConfig {
    pub slow_force: f64,
    pub fast_force: f64,
    pub slow_force_gradient: f64,
    pub fast_force_gradient: f64,
    pub drift: f64,
}

impl Default for WeightsConfig {
    fn default() -> Self {
        let w = threebody::CostWeights::default();
        Self {
            slow_force: w.slow_force,
            fast_force: w.fast_force,
            slow_force_gradient: w.slow_force_gradient,
            fast_force_gradient: w.fast_force_gradient,
            drift: w.drift,
        }
    }
}

impl From<WeightsConfig> for threebody::CostWeights {
    fn from(w: WeightsConfig) -> Self {
        Self {
            slow_force: w.slow_force,
            fast_force: w.fast_force,
            slow_force_gradient: w.slow_force_gradient,
            fast_force_gradient: w.fast_force_gradient,
            drift: w.drift,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub experiment: Experiment,
    /// Scheme name for single-scheme experiments.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scheme: Option<String>,
    /// Scheme names for the benchmark.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub schemes: Vec<String>,
    /// Inner-loop repetition count for nested schemes.
    #[serde(default = "default_m")]
    pub m: u32,
    /// Outer kick coefficient for the five-stage nested family, as `p/q`.
    #[serde(default = "default_lambda")]
    pub lambda: String,
    /// Step size(s) in months: one for simulate, a descending grid for
    /// converge, an optional shared grid for benchmark.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub h: Vec<f64>,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_sample_every")]
    pub sample_every: u64,
    /// Truncation degree for shadow verification.
    #[serde(default = "default_degree")]
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub weights: WeightsConfig,
}

fn default_m() -> u32 {
    30
}

fn default_lambda() -> String {
    "1/6".to_string()
}

fn default_t_end() -> f64 {
    12.0
}

fn default_sample_every() -> u64 {
    1
}

fn default_degree() -> usize {
    4
}

impl RunConfig {
    pub fn new(experiment: Experiment) -> Self {
        Self {
            experiment,
            scheme: None,
            schemes: Vec::new(),
            m: default_m(),
            lambda: default_lambda(),
            h: Vec::new(),
            t_end: default_t_end(),
            sample_every: default_sample_every(),
            degree: default_degree(),
            output: None,
            weights: WeightsConfig::default(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).context("failed to parse config file")
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).context("failed to serialize config")
    }

    /// The single scheme name, named in errors after its field.
    pub fn require_scheme(&self) -> Result<&str> {
        self.scheme
            .as_deref()
            .ok_or_else(|| anyhow::anyhow!("scheme: required for this experiment"))
    }

    pub fn validate(&self) -> Result<()> {
        if !self.t_end.is_finite() || self.t_end < 0.0 {
            bail!("t_end: must be a finite non-negative duration, got {}", self.t_end);
        }
        if self.h.iter().any(|&h| h.is_nan() || h <= 0.0) {
            bail!("h: step sizes must be positive, got {:?}", self.h);
        }
        if self.m == 0 {
            bail!("m: inner repetition count must be at least 1");
        }
        if self.degree == 0 || self.degree > 6 {
            bail!("degree: truncation degree must lie in 1..=6, got {}", self.degree);
        }
        let w = &self.weights;
        for (name, value) in [
            ("weights.slow_force", w.slow_force),
            ("weights.fast_force", w.fast_force),
            ("weights.slow_force_gradient", w.slow_force_gradient),
            ("weights.fast_force_gradient", w.fast_force_gradient),
            ("weights.drift", w.drift),
        ] {
            if value.is_nan() || value < 0.0 {
                bail!("{name}: cost weights must be non-negative, got {value}");
            }
        }
        match self.experiment {
            Experiment::Simulate => {
                self.require_scheme()?;
                if self.h.len() != 1 {
                    bail!("h: simulate needs exactly one step size, got {}", self.h.len());
                }
            }
            Experiment::Converge => {
                self.require_scheme()?;
                if self.h.len() < 4 {
                    bail!("h: converge needs a grid of at least 4 step sizes, got {}", self.h.len());
                }
            }
            Experiment::Benchmark => {
                if self.schemes.is_empty() {
                    bail!("schemes: benchmark needs at least one scheme name");
                }
            }
            Experiment::ShadowVerify => {
                self.require_scheme()?;
            }
        }
        Ok(())
    }
}
