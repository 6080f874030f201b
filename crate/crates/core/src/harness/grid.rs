//! Rectangular σ-τ sampling grids over the critical strip and beyond.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauScale {
    Linear,
    Geometric,
}

impl std::str::FromStr for TauScale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(TauScale::Linear),
            "geometric" => Ok(TauScale::Geometric),
            other => Err(Error::Usage(format!("unknown tau scale '{other}'"))),
        }
    }
}

/// A σ x τ product grid. Endpoints are always included; a degenerate axis
/// (min == max) collapses to a single sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub sigma_steps: usize,
    pub tau_min: f64,
    pub tau_max: f64,
    pub tau_scale: TauScale,
    pub tau_steps: usize,
}

impl GridSpec {
    /// The default verification grid: σ across the half-strip, τ geometric
    /// across three decades.
    pub fn default_half_strip() -> Self {
        GridSpec {
            sigma_min: 0.0,
            sigma_max: 0.5,
            sigma_steps: 26,
            tau_min: 1.0,
            tau_max: 1e3,
            tau_scale: TauScale::Geometric,
            tau_steps: 60,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma_min.is_finite() && self.sigma_max.is_finite()) {
            return Err(Error::Usage("sigma bounds must be finite".into()));
        }
        if self.sigma_min > self.sigma_max {
            return Err(Error::Usage(format!(
                "sigma_min {} > sigma_max {}",
                self.sigma_min, self.sigma_max
            )));
        }
        if !(self.tau_min > 0.0 && self.tau_min <= self.tau_max && self.tau_max <= 1e4) {
            return Err(Error::Usage(format!(
                "tau range [{}, {}] outside 0 < tau_min <= tau_max <= 1e4",
                self.tau_min, self.tau_max
            )));
        }
        if self.sigma_min < self.sigma_max && self.sigma_steps < 2 {
            return Err(Error::Usage(
                "sigma_steps must be >= 2 when sigma_min < sigma_max".into(),
            ));
        }
        if self.tau_min < self.tau_max && self.tau_steps < 2 {
            return Err(Error::Usage(
                "tau_steps must be >= 2 when tau_min < tau_max".into(),
            ));
        }
        Ok(())
    }

    pub fn sigma_values(&self) -> Vec<f64> {
        axis(
            self.sigma_min,
            self.sigma_max,
            self.sigma_steps,
            TauScale::Linear,
        )
    }

    pub fn tau_values(&self) -> Vec<f64> {
        axis(self.tau_min, self.tau_max, self.tau_steps, self.tau_scale)
    }

    /// All (σ, τ) grid points, σ-major.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let taus = self.tau_values();
        self.sigma_values()
            .iter()
            .flat_map(|&s| taus.iter().map(move |&t| (s, t)))
            .collect()
    }
}

fn axis(min: f64, max: f64, steps: usize, scale: TauScale) -> Vec<f64> {
    if min == max || steps < 2 {
        return vec![min];
    }
    let n = steps - 1;
    (0..=n)
        .map(|i| {
            let f = i as f64 / n as f64;
            match scale {
                TauScale::Linear => min + f * (max - min),
                TauScale::Geometric => min * (max / min).powf(f),
            }
        })
        .collect()
}
