//! Unit-well computations behind the browser demo.

use qbox_core::numeric::linspace;
use qbox_core::{
    density_exact, fit_power_law, track_trajectory, NodeKind, PowerLawFit, Result, Spacing, SweepSpec,
    TwoStateSuperposition, WellConfig,
};

pub fn node_trajectory(c1: f64, c2: f64, kind: &str, samples: usize) -> Result<Vec<f64>> {
    let cfg = WellConfig::default();
    let state = TwoStateSuperposition::real(c1, c2)?;
    let tr = track_trajectory(&cfg, &state, kind.parse::<NodeKind>()?, 0.0, cfg.beat_period(), samples)?;
    Ok(tr
        .samples()
        .iter()
        .flat_map(|s| [s.t, s.position.unwrap_or(f64::NAN)])
        .collect())
}

pub fn density_profile(c1: f64, c2: f64, t: f64, points: usize) -> Result<Vec<f64>> {
    let cfg = WellConfig::default();
    let state = TwoStateSuperposition::real(c1, c2)?;
    linspace(0.0, cfg.width(), points)
        .into_iter()
        .map(|x| density_exact(&cfg, &state, x, t))
        .collect()
}

pub struct SweepResult {
    pub ratios: Vec<f64>,
    pub amplitudes: Vec<f64>,
    pub fit: PowerLawFit,
}

pub fn amplitude_sweep(a_min: f64, a_max: f64, count: usize, log_spacing: bool) -> Result<SweepResult> {
    let spacing = if log_spacing {
        Spacing::Logarithmic
    } else {
        Spacing::Linear
    };
    let sweep = qbox_core::amplitude_sweep(
        &WellConfig::default(),
        SweepSpec {
            a_min,
            a_max,
            count,
            spacing,
        },
    )?;
    let fit = fit_power_law(&sweep)?;
    let (ratios, amplitudes) = sweep.entries.into_iter().unzip();
    Ok(SweepResult {
        ratios,
        amplitudes,
        fit,
    })
}

pub fn heatmap(x_count: usize, mix_count: usize) -> Result<Vec<f64>> {
    let grid = qbox_core::heatmap(&WellConfig::default(), x_count, mix_count)?;
    Ok(grid.values().concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn trajectory_is_interleaved() {
        let v = node_trajectory(FRAC_1_SQRT_2, FRAC_1_SQRT_2, "analytic", 64).unwrap();
        assert_eq!(v.len(), 128);
        assert_eq!(v[0], 0.0);
        assert!((v[1] - 2.0 / 3.0).abs() < 1e-12);
        assert!((v[65] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn missing_nodes_are_nan() {
        let v = node_trajectory(3.0, 1.0, "analytic", 64).unwrap();
        assert!(v.iter().skip(1).step_by(2).any(|x| x.is_nan()));
    }

    #[test]
    fn bad_inputs_are_errors() {
        assert!(node_trajectory(1.0, 0.0, "analytic", 64).is_err());
        assert!(node_trajectory(1.0, 1.0, "sideways", 64).is_err());
        assert!(density_profile(0.0, 0.0, 0.0, 16).is_err());
        assert!(amplitude_sweep(0.5, 0.4, 10, true).is_err());
        assert!(heatmap(4, 4).is_err());
    }

    #[test]
    fn density_profile_vanishes_at_walls() {
        let v = density_profile(0.6, 0.8, 0.1, 101).unwrap();
        assert_eq!(v.len(), 101);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[100], 0.0);
    }

    #[test]
    fn sweep_and_heatmap_shapes() {
        let s = amplitude_sweep(0.05, 1.0, 32, true).unwrap();
        assert_eq!(s.ratios.len(), 32);
        assert_eq!(s.amplitudes.len(), 32);
        assert!(s.fit.rms_log_residual > 0.0);
        assert_eq!(heatmap(16, 8).unwrap().len(), 128);
    }
}
