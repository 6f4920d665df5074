//! Superpositions of well eigenstates and their time evolution.
//!
//! Every evaluation is exact complex arithmetic on the analytic eigenterms
//! `c_n ψ_n(x) e^{-i E_n t / ħ}`; nothing is integrated in time.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::simpson;
use crate::well::{EigenIndex, WellConfig};

/// Tolerance of [`TwoStateSuperposition::is_normalized`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Sub-intervals used by [`norm_integral`].
pub const NORM_QUADRATURE_INTERVALS: usize = 2048;

/// `c1 ψ1 + c2 ψ2`. Normalization is not enforced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStateSuperposition {
    c1: Complex64,
    c2: Complex64,
}

impl TwoStateSuperposition {
    pub fn new(c1: Complex64, c2: Complex64) -> Result<Self> {
        let norm = c1.norm_sqr() + c2.norm_sqr();
        if !norm.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite coefficients ({c1}, {c2})")));
        }
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(Self { c1, c2 })
    }

    pub fn real(c1: f64, c2: f64) -> Result<Self> {
        Self::new(Complex64::new(c1, 0.0), Complex64::new(c2, 0.0))
    }

    /// `(c1, c2) = (cos θ, sin θ)`, normalized by construction.
    pub fn from_mixing_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            c1: Complex64::new(c, 0.0),
            c2: Complex64::new(s, 0.0),
        }
    }

    pub fn c1(&self) -> Complex64 {
        self.c1
    }

    pub fn c2(&self) -> Complex64 {
        self.c2
    }

    /// `|c1|² + |c2|²`.
    pub fn weight(&self) -> f64 {
        self.c1.norm_sqr() + self.c2.norm_sqr()
    }

    pub fn is_normalized(&self) -> bool {
        (self.weight() - 1.0).abs() <= NORMALIZATION_TOL
    }
}

/// Rescales the state to unit weight, keeping the phase of each coefficient.
pub fn normalize(state: &TwoStateSuperposition) -> Result<TwoStateSuperposition> {
    let scale = state.weight().sqrt();
    if scale == 0.0 {
        return Err(Error::ZeroState);
    }
    TwoStateSuperposition::new(state.c1 / scale, state.c2 / scale)
}

/// `Σ c_n ψ_n` over distinct quantum numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralSuperposition {
    terms: Vec<(EigenIndex, Complex64)>,
}

impl GeneralSuperposition {
    pub fn new(terms: Vec<(EigenIndex, Complex64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument("superposition needs at least one term".into()));
        }
        for (i, (n, _)) in terms.iter().enumerate() {
            if terms[..i].iter().any(|(m, _)| m == n) {
                return Err(Error::DuplicateIndex(n.get()));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(EigenIndex, Complex64)] {
        &self.terms
    }
}

impl From<TwoStateSuperposition> for GeneralSuperposition {
    fn from(s: TwoStateSuperposition) -> Self {
        Self {
            terms: vec![(EigenIndex::GROUND, s.c1), (EigenIndex::SECOND, s.c2)],
        }
    }
}

fn eigenterm(cfg: &WellConfig, n: EigenIndex, c: Complex64, x: f64, t: f64) -> Complex64 {
    c * cfg.eigenfunction_unchecked(n, x) * Complex64::cis(-cfg.omega(n) * t)
}

/// `Ψ(x, t) = c1 ψ1(x) e^{-iω1 t} + c2 ψ2(x) e^{-iω2 t}`.
pub fn evaluate_psi(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, t: f64) -> Result<Complex64> {
    cfg.check_position(x)?;
    Ok(psi_unchecked(cfg, state, x, t))
}

pub(crate) fn psi_unchecked(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, t: f64) -> Complex64 {
    eigenterm(cfg, EigenIndex::GROUND, state.c1, x, t) + eigenterm(cfg, EigenIndex::SECOND, state.c2, x, t)
}

/// `Ψ(x, t) = Σ c_n ψ_n(x) e^{-iω_n t}`.
pub fn evaluate_psi_general(cfg: &WellConfig, state: &GeneralSuperposition, x: f64, t: f64) -> Result<Complex64> {
    cfg.check_position(x)?;
    Ok(state.terms.iter().map(|&(n, c)| eigenterm(cfg, n, c, x, t)).sum())
}

/// `|Ψ(x, t)|²` from the full complex amplitude.
pub fn density_exact(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, t: f64) -> Result<f64> {
    cfg.check_position(x)?;
    Ok(density_unchecked(cfg, state, x, t))
}

pub(crate) fn density_unchecked(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, t: f64) -> f64 {
    psi_unchecked(cfg, state, x, t).norm_sqr()
}

/// Density written as stationary part plus a single beat term:
///
/// `|c1|² ψ1² + |c2|² ψ2² + 2 ψ1 ψ2 Re(c1 c2* e^{iΔω t})`
///
/// For real `c1 c2*` the interference term is `2 c1 c2* ψ1 ψ2 cos(Δω t)`.
pub fn density_closed_form(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64, t: f64) -> Result<f64> {
    cfg.check_position(x)?;
    let psi1 = cfg.eigenfunction_unchecked(EigenIndex::GROUND, x);
    let psi2 = cfg.eigenfunction_unchecked(EigenIndex::SECOND, x);
    let beat = (state.c1 * state.c2.conj() * Complex64::cis(cfg.delta_omega() * t)).re;
    Ok(state.c1.norm_sqr() * psi1 * psi1 + state.c2.norm_sqr() * psi2 * psi2 + 2.0 * psi1 * psi2 * beat)
}

/// Stationary (time-averaged) density `|c1|² ψ1² + |c2|² ψ2²`.
pub fn stationary_density(cfg: &WellConfig, state: &TwoStateSuperposition, x: f64) -> Result<f64> {
    cfg.check_position(x)?;
    let psi1 = cfg.eigenfunction_unchecked(EigenIndex::GROUND, x);
    let psi2 = cfg.eigenfunction_unchecked(EigenIndex::SECOND, x);
    Ok(state.c1.norm_sqr() * psi1 * psi1 + state.c2.norm_sqr() * psi2 * psi2)
}

/// `∫₀ᵃ |Ψ(x, t)|² dx` by composite Simpson on
/// [`NORM_QUADRATURE_INTERVALS`] intervals.
pub fn norm_integral(cfg: &WellConfig, state: &TwoStateSuperposition, t: f64) -> f64 {
    simpson(
        |x| density_unchecked(cfg, state, x, t),
        0.0,
        cfg.width(),
        NORM_QUADRATURE_INTERVALS,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn equal_mix() -> TwoStateSuperposition {
        TwoStateSuperposition::real(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap()
    }

    #[test]
    fn zero_state_rejected() {
        assert_eq!(TwoStateSuperposition::real(0.0, 0.0), Err(Error::ZeroState));
    }

    #[test]
    fn single_term_phase() {
        let cfg = WellConfig::default();
        let s = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        let t = 0.137;
        let psi = evaluate_psi(&cfg, &s, 0.5, t).unwrap();
        assert_abs_diff_eq!(psi.norm(), SQRT_2, epsilon = 1e-15);
        let expected = -cfg.omega(EigenIndex::GROUND) * t;
        assert_abs_diff_eq!(psi.arg(), expected.sin().atan2(expected.cos()), epsilon = 1e-14);
    }

    #[test]
    fn equal_mix_at_center() {
        let psi = evaluate_psi(&WellConfig::default(), &equal_mix(), 0.5, 0.0).unwrap();
        assert_abs_diff_eq!(psi.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn walls_are_exact_zeros() {
        let cfg = WellConfig::new(2.5, 0.7, 1.3).unwrap();
        let s = TwoStateSuperposition::new(c(0.3, -1.1), c(2.0, 0.4)).unwrap();
        for t in [0.0, 0.31, 7.5] {
            assert_eq!(evaluate_psi(&cfg, &s, 0.0, t).unwrap(), Complex64::new(0.0, 0.0));
            assert_eq!(evaluate_psi(&cfg, &s, 2.5, t).unwrap(), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn out_of_range_positions_error() {
        let cfg = WellConfig::default();
        let s = equal_mix();
        assert!(evaluate_psi(&cfg, &s, 1.01, 0.0).is_err());
        assert!(density_exact(&cfg, &s, -0.1, 0.0).is_err());
        assert!(density_closed_form(&cfg, &s, 2.0, 0.0).is_err());
        let g = GeneralSuperposition::from(s);
        assert!(evaluate_psi_general(&cfg, &g, 1.5, 0.0).is_err());
    }

    #[test]
    fn general_single_term() {
        let cfg = WellConfig::default();
        let g = GeneralSuperposition::new(vec![(EigenIndex::new(3).unwrap(), c(1.0, 0.0))]).unwrap();
        let psi = evaluate_psi_general(&cfg, &g, 1.0 / 6.0, 0.0).unwrap();
        assert_abs_diff_eq!(psi.re, SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn general_matches_two_state() {
        let cfg = WellConfig::default();
        let s = TwoStateSuperposition::new(c(0.2, 0.9), c(-0.4, 0.1)).unwrap();
        let g = GeneralSuperposition::from(s);
        for &(x, t) in &[(0.1, 0.0), (0.37, 0.2), (0.81, 3.3)] {
            let a = evaluate_psi(&cfg, &s, x, t).unwrap();
            let b = evaluate_psi_general(&cfg, &g, x, t).unwrap();
            assert!((a - b).norm() <= 1e-15);
        }
    }

    #[test]
    fn general_at_t0_is_real_sum() {
        let cfg = WellConfig::default();
        let terms: Vec<_> = (1..=4)
            .map(|n| (EigenIndex::new(n).unwrap(), c(1.0 / f64::from(n), 0.0)))
            .collect();
        let g = GeneralSuperposition::new(terms).unwrap();
        let x = 0.3;
        let direct: f64 = (1..=4)
            .map(|n| cfg.eigenfunction(EigenIndex::new(n).unwrap(), x).unwrap() / f64::from(n))
            .sum();
        let psi = evaluate_psi_general(&cfg, &g, x, 0.0).unwrap();
        assert_abs_diff_eq!(psi.re, direct, epsilon = 1e-15);
        assert_eq!(psi.im, 0.0);
    }

    #[test]
    fn general_rejects_bad_terms() {
        assert!(GeneralSuperposition::new(vec![]).is_err());
        let one = EigenIndex::GROUND;
        assert_eq!(
            GeneralSuperposition::new(vec![(one, c(1.0, 0.0)), (one, c(2.0, 0.0))]),
            Err(Error::DuplicateIndex(1))
        );
    }

    #[test]
    fn density_examples() {
        let cfg = WellConfig::default();
        let s = equal_mix();
        for t in [0.0, 0.05, 0.2, 1.7] {
            assert_abs_diff_eq!(density_exact(&cfg, &s, 0.5, t).unwrap(), 1.0, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(
            density_exact(&cfg, &s, 0.25, 0.0).unwrap(),
            1.5 + SQRT_2,
            epsilon = 1e-14
        );
        assert!(density_exact(&cfg, &s, 2.0 / 3.0, 0.0).unwrap() < 1e-28);
    }

    #[test]
    fn closed_form_examples() {
        let cfg = WellConfig::default();
        let imag = TwoStateSuperposition::new(c(0.0, FRAC_1_SQRT_2), c(FRAC_1_SQRT_2, 0.0)).unwrap();
        assert_abs_diff_eq!(
            density_closed_form(&cfg, &imag, 0.25, 0.0).unwrap(),
            1.5,
            epsilon = 1e-14
        );
        let half = PI / cfg.delta_omega();
        assert_abs_diff_eq!(
            density_closed_form(&cfg, &equal_mix(), 0.25, half).unwrap(),
            1.5 - SQRT_2,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            density_exact(&cfg, &equal_mix(), 0.25, half).unwrap(),
            1.5 - SQRT_2,
            epsilon = 1e-14
        );
    }

    #[test]
    fn norm_integral_examples() {
        let cfg = WellConfig::default();
        for t in [0.0, 0.1, 0.3] {
            assert_abs_diff_eq!(norm_integral(&cfg, &equal_mix(), t), 1.0, epsilon = 1e-8);
        }
        let ground = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(norm_integral(&cfg, &ground, 0.4), 1.0, epsilon = 1e-8);
        let big = TwoStateSuperposition::real(3.0, 4.0).unwrap();
        assert_abs_diff_eq!(norm_integral(&cfg, &big, 0.17), 25.0, epsilon = 1e-6);
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&TwoStateSuperposition::real(3.0, 4.0).unwrap()).unwrap();
        assert_abs_diff_eq!(n.c1().re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(n.c2().re, 0.8, epsilon = 1e-15);
        assert!(n.is_normalized());

        let g = TwoStateSuperposition::real(1.0, 0.0).unwrap();
        assert_eq!(normalize(&g).unwrap(), g);

        let p = normalize(&TwoStateSuperposition::new(c(1.0, 1.0), c(0.0, 0.0)).unwrap()).unwrap();
        assert_abs_diff_eq!(p.c1().re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(p.c1().im, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(p.weight(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn mixing_angle_is_normalized() {
        for i in 0..=16 {
            let s = TwoStateSuperposition::from_mixing_angle(i as f64 * PI / 32.0);
            assert!(s.is_normalized());
        }
    }
}
