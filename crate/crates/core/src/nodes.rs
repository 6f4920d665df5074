//! Quasi-nodes of the (1, 2) superposition.
//!
//! Three notions of "node" are kept apart:
//!
//! * the analytic trajectory `x(t) = (a/π) arccos(−A cos(Δω t))` with
//!   `A = c1 / (2 c2)`, obtained by keeping only the real part of the
//!   complex node condition;
//! * zeros of `Re Ψ(·, t)`;
//! * interior minima of the density `|Ψ(·, t)|²`.
//!
//! A true zero of the complex wavefunction needs both `Re Ψ` and `Im Ψ` to
//! vanish, which for real coefficients only happens at the discrete times
//! where `sin(Δω t) = 0`. [`exact_zero_times`] finds those numerically.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{bisect, golden_min};
use crate::superposition::{psi_unchecked, TwoStateSuperposition};
use crate::well::{EigenIndex, WellConfig};

/// Default number of uniform cells used when scanning `(0, a)`.
pub const DEFAULT_SCAN_GRID: usize = 2048;
/// Sign-change brackets are bisected to this fraction of the well width.
pub const ROOT_TOL: f64 = 1e-12;
/// Density minima are refined to this fraction of the well width.
pub const MINIMUM_TOL: f64 = 1e-10;
/// A density minimum counts as a true zero below this fraction of the
/// largest density at the same instant.
pub const ZERO_DENSITY_THRESHOLD: f64 = 1e-10;
/// Time samples per beat period scanned by [`exact_zero_times`].
pub const ZERO_SCAN_TIMES_PER_PERIOD: usize = 1024;
const MIN_GRID: usize = 16;
/// Relative size below which an imaginary part is treated as rounding noise.
const REAL_COEFF_TOL: f64 = 1e-14;

/// `A = c1 / (2 c2)`, the amplitude of the arccos argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RatioA(f64);

impl RatioA {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::InvalidArgument(format!("ratio must be finite, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The real, normalized state `(c1, c2) ∝ (2A, 1)` with this ratio.
    pub fn to_state(self) -> TwoStateSuperposition {
        let norm = (4.0 * self.0 * self.0 + 1.0).sqrt();
        TwoStateSuperposition::real(2.0 * self.0 / norm, 1.0 / norm).expect("c2 > 0 so the state is nonzero")
    }
}

fn is_effectively_real(c: Complex64) -> bool {
    c.im.abs() <= REAL_COEFF_TOL * c.norm()
}

/// `A = c1 / (2 c2)` for a state with real coefficients and `c2 ≠ 0`.
pub fn ratio_from_state(state: &TwoStateSuperposition) -> Result<RatioA> {
    let (c1, c2) = (state.c1(), state.c2());
    if c2.norm() == 0.0 {
        return Err(Error::DegenerateRatio);
    }
    if !(is_effectively_real(c1) && is_effectively_real(c2)) {
        return Err(Error::ComplexCoefficients {
            c1: c1.to_string(),
            c2: c2.to_string(),
        });
    }
    RatioA::new(c1.re / (2.0 * c2.re))
}

/// Analytic quasi-node position `(a/π) arccos(−A cos(Δω t))`, or `None`
/// when `|A cos(Δω t)| > 1` and the node has left the well.
pub fn analytic_node_position(cfg: &WellConfig, ratio: RatioA, t: f64) -> Option<f64> {
    let u = -ratio.0 * (cfg.delta_omega() * t).cos();
    (u.abs() <= 1.0).then(|| cfg.width() * u.acos() / PI)
}

/// Precomputed eigenfunction values on a uniform grid over `[0, a]`.
struct Grid {
    xs: Vec<f64>,
    psi1: Vec<f64>,
    psi2: Vec<f64>,
}

impl Grid {
    fn new(cfg: &WellConfig, cells: usize) -> Self {
        let h = cfg.width() / cells as f64;
        let xs: Vec<f64> = (0..=cells)
            .map(|i| if i == cells { cfg.width() } else { i as f64 * h })
            .collect();
        let psi1 = xs
            .iter()
            .map(|&x| cfg.eigenfunction_unchecked(EigenIndex::GROUND, x))
            .collect();
        let psi2 = xs
            .iter()
            .map(|&x| cfg.eigenfunction_unchecked(EigenIndex::SECOND, x))
            .collect();
        Self { xs, psi1, psi2 }
    }

    /// Phase-rotated coefficients `(c1 e^{-iω1 t}, c2 e^{-iω2 t})`.
    fn phased(cfg: &WellConfig, state: &TwoStateSuperposition, t: f64) -> (Complex64, Complex64) {
        (
            state.c1() * Complex64::cis(-cfg.omega(EigenIndex::GROUND) * t),
            state.c2() * Complex64::cis(-cfg.omega(EigenIndex::SECOND) * t),
        )
    }

    fn psi(&self, i: usize, (a1, a2): (Complex64, Complex64)) -> Complex64 {
        a1 * self.psi1[i] + a2 * self.psi2[i]
    }

    fn densities(&self, phased: (Complex64, Complex64)) -> Vec<f64> {
        (0..self.xs.len()).map(|i| self.psi(i, phased).norm_sqr()).collect()
    }
}

fn check_grid(grid_n: usize) -> Result<()> {
    if grid_n < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "scan grid needs at least {MIN_GRID} cells, got {grid_n}"
        )));
    }
    Ok(())
}

/// Interior zeros of `Re Ψ(·, t)`, located by a sign-change scan over
/// `grid_n` cells and bisected to `1e-12 · a`. Sorted ascending; the walls
/// are never reported.
pub fn find_real_part_zeros(
    cfg: &WellConfig,
    state: &TwoStateSuperposition,
    t: f64,
    grid_n: usize,
) -> Result<Vec<f64>> {
    check_grid(grid_n)?;
    let grid = Grid::new(cfg, grid_n);
    let phased = Grid::phased(cfg, state, t);
    let re: Vec<f64> = (0..=grid_n).map(|i| grid.psi(i, phased).re).collect();
    let f = |x: f64| psi_unchecked(cfg, state, x, t).re;
    let tol = ROOT_TOL * cfg.width();

    let mut roots = Vec::new();
    for i in 1..grid_n {
        if re[i] == 0.0 {
            roots.push(grid.xs[i]);
        } else if i + 1 < grid_n && re[i] * re[i + 1] < 0.0 {
            if let Some(r) = bisect(f, grid.xs[i], grid.xs[i + 1], tol) {
                roots.push(r);
            }
        }
    }
    Ok(roots)
}

/// Interior local minima of `|Ψ(·, t)|²` as `(position, density)`, located
/// on a `grid_n`-cell scan and refined by golden-section search to
/// `1e-10 · a`. Sorted by position.
pub fn find_density_minima(
    cfg: &WellConfig,
    state: &TwoStateSuperposition,
    t: f64,
    grid_n: usize,
) -> Result<Vec<(f64, f64)>> {
    check_grid(grid_n)?;
    let grid = Grid::new(cfg, grid_n);
    let rho = grid.densities(Grid::phased(cfg, state, t));
    Ok(refine_minima(cfg, state, t, &grid, &rho))
}

fn refine_minima(cfg: &WellConfig, state: &TwoStateSuperposition, t: f64, grid: &Grid, rho: &[f64]) -> Vec<(f64, f64)> {
    let f = |x: f64| psi_unchecked(cfg, state, x, t).norm_sqr();
    let tol = MINIMUM_TOL * cfg.width();
    let last = rho.len() - 1;
    let mut minima: Vec<(f64, f64)> = Vec::new();
    for i in 1..last {
        // Ties resolve to the leftmost grid point of a flat run.
        if rho[i] < rho[i - 1] && rho[i] <= rho[i + 1] {
            let found = golden_min(f, grid.xs[i - 1], grid.xs[i + 1], tol);
            if found.0 > 0.0 && found.0 < cfg.width() {
                minima.push(found);
            }
        }
    }
    minima.sort_by(|a, b| a.0.total_cmp(&b.0));
    minima.dedup_by(|b, a| (b.0 - a.0).abs() <= tol);
    minima
}

/// Lowest interior density relative to the largest one at time `t`.
fn relative_min_density(cfg: &WellConfig, state: &TwoStateSuperposition, grid: &Grid, t: f64, refine: bool) -> f64 {
    let rho = grid.densities(Grid::phased(cfg, state, t));
    let max = rho.iter().copied().fold(0.0, f64::max);
    let min = if refine {
        refine_minima(cfg, state, t, grid, &rho)
            .into_iter()
            .map(|m| m.1)
            .fold(f64::INFINITY, f64::min)
    } else {
        rho[1..rho.len() - 1].iter().copied().fold(f64::INFINITY, f64::min)
    };
    if max > 0.0 {
        min / max
    } else {
        f64::INFINITY
    }
}

/// Times in `[0, period_count · 2π/Δω]` at which the density has a true
/// interior zero (below [`ZERO_DENSITY_THRESHOLD`] of its maximum).
///
/// The time axis is scanned at [`ZERO_SCAN_TIMES_PER_PERIOD`] samples per
/// period; local minima of the lowest interior density are refined by
/// golden-section search in `t`. A pure ground state never has an interior
/// zero. A pure `ψ2` state has its node at `a/2` at every instant, so every
/// scanned time is returned.
pub fn exact_zero_times(cfg: &WellConfig, state: &TwoStateSuperposition, period_count: usize) -> Result<Vec<f64>> {
    let period = cfg.beat_period();
    let steps = ZERO_SCAN_TIMES_PER_PERIOD * period_count;
    let dt = period / ZERO_SCAN_TIMES_PER_PERIOD as f64;
    let t_end = period * period_count as f64;
    let times: Vec<f64> = (0..=steps)
        .map(|k| if k == steps { t_end } else { k as f64 * dt })
        .collect();

    if state.c2().norm() == 0.0 || period_count == 0 {
        return Ok(Vec::new());
    }
    if state.c1().norm() == 0.0 {
        return Ok(times);
    }

    let grid = Grid::new(cfg, DEFAULT_SCAN_GRID);
    let coarse: Vec<f64> = times
        .iter()
        .map(|&t| relative_min_density(cfg, state, &grid, t, false))
        .collect();
    let refined = |t: f64| relative_min_density(cfg, state, &grid, t, true);
    let tol = 1e-13 * period;

    let mut zeros: Vec<f64> = Vec::new();
    for k in 0..times.len() {
        let lower_left = k == 0 || coarse[k] <= coarse[k - 1];
        let lower_right = k == steps || coarse[k] <= coarse[k + 1];
        if !(lower_left && lower_right) {
            continue;
        }
        let lo = times[k.saturating_sub(1)];
        let hi = times[(k + 1).min(steps)];
        let (t, value) = golden_min(refined, lo, hi, tol);
        if value <= ZERO_DENSITY_THRESHOLD && zeros.last().is_none_or(|&prev| t - prev > dt) {
            zeros.push(t);
        }
    }
    Ok(zeros)
}

/// Which node notion a trajectory follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    AnalyticFormula,
    RealPartZero,
    DensityMinimum,
    TrueZero,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::AnalyticFormula => "analytic",
            Self::RealPartZero => "repart",
            Self::DensityMinimum => "minimum",
            Self::TrueZero => "true-zero",
        }
    }
}

impl std::fmt::Display for NodeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Self::AnalyticFormula),
            "repart" => Ok(Self::RealPartZero),
            "minimum" => Ok(Self::DensityMinimum),
            "true-zero" => Ok(Self::TrueZero),
            other => Err(Error::InvalidArgument(format!("unknown node kind `{other}`"))),
        }
    }
}

/// One time sample of a node trajectory. `position` is `None` when no node
/// exists inside the well at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeSample {
    pub t: f64,
    pub position: Option<f64>,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeTrajectory {
    samples: Vec<NodeSample>,
    config: WellConfig,
    state: TwoStateSuperposition,
    ratio: Option<RatioA>,
}

impl NodeTrajectory {
    pub fn samples(&self) -> &[NodeSample] {
        &self.samples
    }

    pub fn config(&self) -> &WellConfig {
        &self.config
    }

    pub fn state(&self) -> &TwoStateSuperposition {
        &self.state
    }

    /// `None` when the ratio is undefined (`c2 = 0` or complex coefficients).
    pub fn ratio(&self) -> Option<RatioA> {
        self.ratio
    }

    pub fn kind(&self) -> NodeKind {
        self.samples[0].kind
    }

    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().filter_map(|s| s.position)
    }
}

/// Samples the node of the chosen kind at `n_samples` uniform times over the
/// half-open window `[t_start, t_end)`.
///
/// When a numerical finder returns several candidates, the one nearest the
/// previous position is kept (nearest `a/2` before any node has been seen).
pub fn track_trajectory(
    cfg: &WellConfig,
    state: &TwoStateSuperposition,
    kind: NodeKind,
    t_start: f64,
    t_end: f64,
    n_samples: usize,
) -> Result<NodeTrajectory> {
    track_trajectory_with_grid(cfg, state, kind, t_start, t_end, n_samples, DEFAULT_SCAN_GRID)
}

/// [`track_trajectory`] with an explicit spatial scan grid for the
/// numerical node kinds.
pub fn track_trajectory_with_grid(
    cfg: &WellConfig,
    state: &TwoStateSuperposition,
    kind: NodeKind,
    t_start: f64,
    t_end: f64,
    n_samples: usize,
    grid_n: usize,
) -> Result<NodeTrajectory> {
    if !(t_start.is_finite() && t_end.is_finite() && t_start < t_end) {
        return Err(Error::InvalidArgument(format!(
            "time window [{t_start}, {t_end}) is empty"
        )));
    }
    if n_samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {n_samples}"
        )));
    }
    let ratio = match kind {
        NodeKind::AnalyticFormula => Some(ratio_from_state(state)?),
        _ => ratio_from_state(state).ok(),
    };
    if kind != NodeKind::AnalyticFormula {
        check_grid(grid_n)?;
    }

    let dt = (t_end - t_start) / n_samples as f64;
    let mut previous = cfg.width() / 2.0;
    let mut samples = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let t = t_start + i as f64 * dt;
        let candidates: Vec<f64> = match kind {
            NodeKind::AnalyticFormula => analytic_node_position(cfg, ratio.expect("checked above"), t)
                .into_iter()
                .collect(),
            NodeKind::RealPartZero => find_real_part_zeros(cfg, state, t, grid_n)?,
            NodeKind::DensityMinimum => find_density_minima(cfg, state, t, grid_n)?
                .into_iter()
                .map(|m| m.0)
                .collect(),
            NodeKind::TrueZero => {
                let minima = find_density_minima(cfg, state, t, grid_n)?;
                let max = Grid::new(cfg, grid_n)
                    .densities(Grid::phased(cfg, state, t))
                    .into_iter()
                    .fold(0.0, f64::max);
                minima
                    .into_iter()
                    .filter(|m| m.1 <= ZERO_DENSITY_THRESHOLD * max)
                    .map(|m| m.0)
                    .collect()
            }
        };
        let position = candidates
            .into_iter()
            .min_by(|a, b| (a - previous).abs().total_cmp(&(b - previous).abs()));
        if let Some(p) = position {
            previous = p;
        }
        samples.push(NodeSample { t, position, kind });
    }
    Ok(NodeTrajectory {
        samples,
        config: *cfg,
        state: *state,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn equal_mix() -> TwoStateSuperposition {
        TwoStateSuperposition::real(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap()
    }

    fn ratio(a: f64) -> RatioA {
        RatioA::new(a).unwrap()
    }

    #[test]
    fn analytic_examples() {
        let cfg = WellConfig::default();
        let half = PI / cfg.delta_omega();
        assert_abs_diff_eq!(
            analytic_node_position(&cfg, ratio(0.5), 0.0).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            analytic_node_position(&cfg, ratio(0.5), half).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-15
        );
        for t in [0.0, 0.1, 1.3] {
            assert_eq!(analytic_node_position(&cfg, ratio(0.0), t), Some(0.5));
        }
        assert_eq!(analytic_node_position(&cfg, ratio(1.5), 0.0), None);
    }

    #[test]
    fn analytic_scales_with_width() {
        let cfg = WellConfig::new(3.0, 2.0, 0.5).unwrap();
        assert_abs_diff_eq!(
            analytic_node_position(&cfg, ratio(0.5), 0.0).unwrap(),
            2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn ratio_examples() {
        assert_abs_diff_eq!(ratio_from_state(&equal_mix()).unwrap().value(), 0.5, epsilon = 1e-15);
        let s = TwoStateSuperposition::real(0.6, 0.8).unwrap();
        assert_abs_diff_eq!(ratio_from_state(&s).unwrap().value(), 0.375, epsilon = 1e-15);
        let ground = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert_eq!(ratio_from_state(&ground), Err(Error::DegenerateRatio));
        let complex = TwoStateSuperposition::new(Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)).unwrap();
        assert!(matches!(
            ratio_from_state(&complex),
            Err(Error::ComplexCoefficients { .. })
        ));
    }

    #[test]
    fn ratio_to_state_round_trip() {
        for a in [-2.0, -0.3, 0.0, 0.5, 0.99, 4.0] {
            let s = ratio(a).to_state();
            assert!(s.is_normalized());
            assert_abs_diff_eq!(ratio_from_state(&s).unwrap().value(), a, epsilon = 1e-14);
        }
    }

    #[test]
    fn real_part_zero_examples() {
        let cfg = WellConfig::default();
        let roots = find_real_part_zeros(&cfg, &equal_mix(), 0.0, 2048).unwrap();
        assert_eq!(roots.len(), 1);
        assert_abs_diff_eq!(roots[0], 2.0 / 3.0, epsilon = 1e-10);

        let ground = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert!(find_real_part_zeros(&cfg, &ground, 0.0, 2048).unwrap().is_empty());

        let second = TwoStateSuperposition::real(0.0, 1.0).unwrap();
        let roots = find_real_part_zeros(&cfg, &second, 0.0, 2048).unwrap();
        assert_eq!(roots.len(), 1);
        assert_abs_diff_eq!(roots[0], 0.5, epsilon = 1e-10);
    }

    #[test]
    fn small_grid_rejected() {
        let cfg = WellConfig::default();
        assert!(find_real_part_zeros(&cfg, &equal_mix(), 0.0, 8).is_err());
        assert!(find_density_minima(&cfg, &equal_mix(), 0.0, 15).is_err());
    }

    #[test]
    fn density_minimum_examples() {
        let cfg = WellConfig::default();
        let minima = find_density_minima(&cfg, &equal_mix(), 0.0, 2048).unwrap();
        assert_eq!(minima.len(), 1);
        assert_abs_diff_eq!(minima[0].0, 2.0 / 3.0, epsilon = 1e-8);
        assert!(minima[0].1 <= 1e-8);

        let second = TwoStateSuperposition::real(0.0, 1.0).unwrap();
        for t in [0.0, 0.07, 0.3] {
            let minima = find_density_minima(&cfg, &second, t, 2048).unwrap();
            assert_eq!(minima.len(), 1);
            assert_abs_diff_eq!(minima[0].0, 0.5, epsilon = 1e-8);
            assert!(minima[0].1 < 1e-16);
        }

        let quarter = cfg.beat_period() / 4.0;
        let minima = find_density_minima(&cfg, &equal_mix(), quarter, 2048).unwrap();
        assert_eq!(minima.len(), 1);
        assert!(minima[0].1 > 1e-3);
    }

    #[test]
    fn zero_times_equal_mix() {
        let cfg = WellConfig::default();
        let zeros = exact_zero_times(&cfg, &equal_mix(), 1).unwrap();
        let dw = cfg.delta_omega();
        let expected = [0.0, PI / dw, 2.0 * PI / dw];
        assert_eq!(zeros.len(), expected.len(), "{zeros:?}");
        for (z, e) in zeros.iter().zip(expected) {
            assert_abs_diff_eq!(*z, e, epsilon = 1e-6);
            let x = analytic_node_position(&cfg, ratio(0.5), *z).unwrap();
            let minima = find_density_minima(&cfg, &equal_mix(), *z, 2048).unwrap();
            let nearest = minima
                .iter()
                .map(|m| m.0)
                .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
                .unwrap();
            assert_abs_diff_eq!(nearest, x, epsilon = 1e-8);
        }
    }

    #[test]
    fn zero_times_pure_states() {
        let cfg = WellConfig::default();
        let ground = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert!(exact_zero_times(&cfg, &ground, 2).unwrap().is_empty());
        let second = TwoStateSuperposition::real(0.0, 1.0).unwrap();
        assert_eq!(
            exact_zero_times(&cfg, &second, 1).unwrap().len(),
            ZERO_SCAN_TIMES_PER_PERIOD + 1
        );
    }

    #[test]
    fn zero_times_absent_when_node_never_enters() {
        // |A| = 1.5 > 1: the node never reaches the interior at sin(Δω t) = 0.
        let cfg = WellConfig::default();
        let s = ratio(1.5).to_state();
        assert!(exact_zero_times(&cfg, &s, 1).unwrap().is_empty());
    }

    #[test]
    fn trajectory_equal_mix_range() {
        let cfg = WellConfig::default();
        let tr = track_trajectory(
            &cfg,
            &equal_mix(),
            NodeKind::AnalyticFormula,
            0.0,
            cfg.beat_period(),
            256,
        )
        .unwrap();
        assert_eq!(tr.samples().len(), 256);
        let (lo, hi) = tr
            .positions()
            .fold((f64::INFINITY, 0.0_f64), |(l, h), p| (l.min(p), h.max(p)));
        assert_abs_diff_eq!(lo, 1.0 / 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(hi, 2.0 / 3.0, epsilon = 1e-9);
        assert!(tr.samples().windows(2).all(|w| w[0].t < w[1].t));
        assert!(tr.samples().iter().all(|s| s.kind == NodeKind::AnalyticFormula));
    }

    #[test]
    fn trajectory_stationary_node() {
        let cfg = WellConfig::default();
        let second = TwoStateSuperposition::real(0.0, 1.0).unwrap();
        let tr = track_trajectory(&cfg, &second, NodeKind::DensityMinimum, 0.0, cfg.beat_period(), 32).unwrap();
        for p in tr.samples().iter().map(|s| s.position.unwrap()) {
            assert_abs_diff_eq!(p, 0.5, epsilon = 1e-8);
        }
    }

    #[test]
    fn trajectory_absent_samples_follow_threshold() {
        let cfg = WellConfig::default();
        let s = ratio(1.5).to_state();
        let tr = track_trajectory(&cfg, &s, NodeKind::AnalyticFormula, 0.0, cfg.beat_period(), 200).unwrap();
        for sample in tr.samples() {
            let c = (cfg.delta_omega() * sample.t).cos().abs();
            assert_eq!(sample.position.is_none(), c > 1.0 / 1.5, "t = {}", sample.t);
        }
        assert!(tr.samples().iter().any(|s| s.position.is_none()));
        assert!(tr.samples().iter().any(|s| s.position.is_some()));
    }

    #[test]
    fn trajectory_argument_errors() {
        let cfg = WellConfig::default();
        let ground = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert_eq!(
            track_trajectory(&cfg, &ground, NodeKind::AnalyticFormula, 0.0, 1.0, 10).unwrap_err(),
            Error::DegenerateRatio
        );
        assert!(track_trajectory(&cfg, &equal_mix(), NodeKind::AnalyticFormula, 1.0, 1.0, 10).is_err());
        assert!(track_trajectory(&cfg, &equal_mix(), NodeKind::AnalyticFormula, 0.0, 1.0, 1).is_err());
        // numerical kinds accept a pure ground state
        let tr = track_trajectory(&cfg, &ground, NodeKind::RealPartZero, 0.0, 1.0, 4).unwrap();
        assert!(tr.samples().iter().all(|s| s.position.is_none()));
        assert!(tr.ratio().is_none());
    }

    #[test]
    fn true_zero_trajectory_only_at_special_times() {
        let cfg = WellConfig::default();
        let tr = track_trajectory(&cfg, &equal_mix(), NodeKind::TrueZero, 0.0, cfg.beat_period(), 8).unwrap();
        let found: Vec<usize> = tr
            .samples()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.position.is_some())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(found, vec![0, 4]);
    }

    #[test]
    fn kind_round_trips_through_str() {
        for k in [
            NodeKind::AnalyticFormula,
            NodeKind::RealPartZero,
            NodeKind::DensityMinimum,
            NodeKind::TrueZero,
        ] {
            assert_eq!(k.as_str().parse::<NodeKind>().unwrap(), k);
        }
        assert!("bogus".parse::<NodeKind>().is_err());
    }
}
