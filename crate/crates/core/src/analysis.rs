//! Sweeps and time averages built on the analytic node trajectory and the
//! two-state density: oscillation amplitude versus `A`, its power-law fit,
//! the mean node position and the time-averaged density heatmap.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::fit::{fit_power_law_points, PowerLawFit};
use crate::nodes::{analytic_node_position, RatioA};
use crate::numeric::{golden_max, golden_min, linspace, logspace};
use crate::superposition::{density_unchecked, TwoStateSuperposition};
use crate::well::WellConfig;

/// Time samples per period used for amplitudes and time averages.
pub const TIME_AVERAGE_SAMPLES: usize = 1024;
const MIN_TRAJECTORY_SAMPLES: usize = 64;
const MIN_HEATMAP_COUNT: usize = 8;
/// Extremal trajectory samples are refined to this fraction of a period.
const EXTREMUM_TOL: f64 = 1e-10;

fn check_samples(n_samples: usize) -> Result<()> {
    if n_samples < MIN_TRAJECTORY_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_TRAJECTORY_SAMPLES} samples per period, got {n_samples}"
        )));
    }
    Ok(())
}

/// Half the peak-to-peak range of the analytic node trajectory over one
/// beat period. Requires `|A| <= 1` so the node never leaves the well.
pub fn oscillation_amplitude(cfg: &WellConfig, ratio: RatioA, n_samples: usize) -> Result<f64> {
    if ratio.value().abs() > 1.0 {
        return Err(Error::RatioOutOfRange(ratio.value()));
    }
    check_samples(n_samples)?;
    let period = cfg.beat_period();
    let dt = period / n_samples as f64;
    let x = |t: f64| analytic_node_position(cfg, ratio, t).expect("|A| <= 1 keeps the node inside");

    let samples: Vec<f64> = (0..n_samples).map(|k| x(k as f64 * dt)).collect();
    let argmax = (0..n_samples)
        .max_by(|&i, &j| samples[i].total_cmp(&samples[j]))
        .unwrap();
    let argmin = (0..n_samples)
        .min_by(|&i, &j| samples[i].total_cmp(&samples[j]))
        .unwrap();

    let tol = EXTREMUM_TOL * period;
    let t_max = argmax as f64 * dt;
    let t_min = argmin as f64 * dt;
    let hi = golden_max(x, t_max - dt, t_max + dt, tol).1.max(samples[argmax]);
    let lo = golden_min(x, t_min - dt, t_min + dt, tol).1.min(samples[argmin]);
    Ok((hi - lo) / 2.0)
}

/// Mean analytic node position over one period, sampled at `n_samples`
/// uniform times starting at `t = 0`. Requires `|A| < 1`.
pub fn time_avg_node_position(cfg: &WellConfig, ratio: RatioA, n_samples: usize) -> Result<f64> {
    if ratio.value().abs() >= 1.0 {
        return Err(Error::RatioOutOfRange(ratio.value()));
    }
    check_samples(n_samples)?;
    let dt = cfg.beat_period() / n_samples as f64;
    let sum: f64 = (0..n_samples)
        .map(|k| analytic_node_position(cfg, ratio, k as f64 * dt).expect("|A| < 1 keeps the node inside"))
        .sum();
    Ok(sum / n_samples as f64)
}

/// Density at `x` averaged over one beat period with the midpoint rule.
pub fn time_avg_density(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, n_samples: usize) -> Result<f64> {
    cfg.check_position(x)?;
    if n_samples == 0 {
        return Err(Error::InvalidArgument("time average needs at least one sample".into()));
    }
    let dt = cfg.beat_period() / n_samples as f64;
    let sum: f64 = (0..n_samples)
        .map(|k| density_unchecked(cfg, state, x, (k as f64 + 0.5) * dt))
        .sum();
    Ok(sum / n_samples as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Logarithmic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub a_min: f64,
    pub a_max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Default for SweepSpec {
    /// 64 logarithmically spaced ratios in `[0.05, 1]`.
    fn default() -> Self {
        Self {
            a_min: 0.05,
            a_max: 1.0,
            count: 64,
            spacing: Spacing::Logarithmic,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.a_min > 0.0 && self.a_min < self.a_max && self.a_max <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "sweep range must satisfy 0 < A_min < A_max <= 1, got [{}, {}]",
                self.a_min, self.a_max
            )));
        }
        if self.count < 2 {
            return Err(Error::InvalidArgument(format!(
                "sweep needs at least 2 points, got {}",
                self.count
            )));
        }
        Ok(())
    }

    pub fn ratios(&self) -> Vec<f64> {
        match self.spacing {
            Spacing::Linear => linspace(self.a_min, self.a_max, self.count),
            Spacing::Logarithmic => logspace(self.a_min, self.a_max, self.count),
        }
    }
}

/// Oscillation amplitude as a function of `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeSweep {
    pub entries: Vec<(f64, f64)>,
    pub spec: SweepSpec,
}

pub fn amplitude_sweep(cfg: &WellConfig, spec: SweepSpec) -> Result<AmplitudeSweep> {
    spec.validate()?;
    let entries = spec
        .ratios()
        .into_iter()
        .map(|a| Ok((a, oscillation_amplitude(cfg, RatioA::new(a)?, TIME_AVERAGE_SAMPLES)?)))
        .collect::<Result<_>>()?;
    Ok(AmplitudeSweep { entries, spec })
}

/// Log-log least-squares power law through the sweep.
pub fn fit_power_law(sweep: &AmplitudeSweep) -> Result<PowerLawFit> {
    fit_power_law_points(&sweep.entries)
}

/// Time-averaged density over positions (columns) and mixing angles
/// `θ ∈ [0, π/2]` (rows), with `(c1, c2) = (cos θ, sin θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatmapGrid {
    x_values: Vec<f64>,
    mix_values: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl HeatmapGrid {
    pub fn x_values(&self) -> &[f64] {
        &self.x_values
    }

    pub fn mix_values(&self) -> &[f64] {
        &self.mix_values
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.values[j]
    }

    /// Trapezoid integral of row `j` over `x`.
    pub fn row_integral(&self, j: usize) -> f64 {
        let h = self.x_values[1] - self.x_values[0];
        let row = &self.values[j];
        h * (row.iter().sum::<f64>() - 0.5 * (row[0] + row[row.len() - 1]))
    }

    /// Grid positions of the interior local maxima of row `j`.
    pub fn row_peaks(&self, j: usize) -> Vec<f64> {
        let row = &self.values[j];
        (1..row.len() - 1)
            .filter(|&i| row[i] > row[i - 1] && row[i] >= row[i + 1])
            .map(|i| self.x_values[i])
            .collect()
    }

    /// Distance between the brightest grid point right of centre and the
    /// brightest one left of it.
    pub fn peak_separation(&self, j: usize) -> f64 {
        let row = &self.values[j];
        let center = 0.5 * (self.x_values[0] + self.x_values[self.x_values.len() - 1]);
        let argmax = |pick: &dyn Fn(f64) -> bool| {
            (0..row.len())
                .filter(|&i| pick(self.x_values[i]))
                .max_by(|&a, &b| row[a].total_cmp(&row[b]))
                .map(|i| self.x_values[i])
                .expect("both halves are non-empty")
        };
        argmax(&|x| x >= center) - argmax(&|x| x <= center)
    }
}

pub fn heatmap(cfg: &WellConfig, x_count: usize, mix_count: usize) -> Result<HeatmapGrid> {
    if x_count < MIN_HEATMAP_COUNT || mix_count < MIN_HEATMAP_COUNT {
        return Err(Error::InvalidArgument(format!(
            "heatmap needs at least {MIN_HEATMAP_COUNT} points per axis, got {x_count} x {mix_count}"
        )));
    }
    let x_values = linspace(0.0, cfg.width(), x_count);
    let mix_values = linspace(0.0, FRAC_PI_2, mix_count);
    let values = mix_values
        .iter()
        .map(|&theta| {
            let state = TwoStateSuperposition::from_mixing_angle(theta);
            x_values
                .iter()
                .map(|&x| time_avg_density(cfg, &state, x, TIME_AVERAGE_SAMPLES))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(HeatmapGrid {
        x_values,
        mix_values,
        values,
    })
}
