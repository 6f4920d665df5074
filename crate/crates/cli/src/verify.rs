//! Invariant checks run by `qbox verify`.

use std::f64::consts::PI;

use qbox_core::analysis::TIME_AVERAGE_SAMPLES;
use qbox_core::nodes::DEFAULT_SCAN_GRID;
use qbox_core::numeric::linspace;
use qbox_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
enum Bound {
    /// Passes when `measured <= tol`.
    AtMost,
    /// Passes when `measured > tol`.
    Above,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub measured: f64,
    pub tol: f64,
    bound: Bound,
}

impl Check {
    fn at_most(name: &'static str, measured: f64, tol: f64) -> Self {
        Self {
            name,
            measured,
            tol,
            bound: Bound::AtMost,
        }
    }

    fn above(name: &'static str, measured: f64, tol: f64) -> Self {
        Self {
            name,
            measured,
            tol,
            bound: Bound::Above,
        }
    }

    pub fn passes(&self, scale: f64) -> bool {
        match self.bound {
            Bound::AtMost => self.measured <= self.tol * scale,
            Bound::Above => self.measured > self.tol / scale,
        }
    }
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

fn random_complex_state(rng: &mut ChaCha8Rng) -> TwoStateSuperposition {
    loop {
        let c = |rng: &mut ChaCha8Rng| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if let Ok(s) = TwoStateSuperposition::new(c(rng), c(rng)) {
            return s;
        }
    }
}

/// Real state with `|c2|` bounded away from zero.
fn random_real_state(rng: &mut ChaCha8Rng) -> TwoStateSuperposition {
    let c1 = rng.gen_range(-1.0..1.0);
    let c2 = rng.gen_range(0.1..1.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    normalize(&TwoStateSuperposition::real(c1, c2).expect("c2 != 0")).expect("nonzero")
}

pub fn checks(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = WellConfig::default();
    let period = cfg.beat_period();
    let dw = cfg.delta_omega();
    let xs: &[f64] = &linspace(0.0, 1.0, 256);
    let ts: &[f64] = &linspace(0.0, 2.0 * period, 64);
    let mut out = Vec::new();

    out.push(Check::at_most(
        "delta_omega equals 3*pi^2/2",
        (dw - 1.5 * PI * PI).abs(),
        1e-12,
    ));

    let complex: Vec<_> = (0..50).map(|_| random_complex_state(&mut rng)).collect();

    let walls = max_of(complex.iter().flat_map(|s| {
        ts.iter()
            .flat_map(move |&t| [0.0, 1.0].map(|x| evaluate_psi(&cfg, s, x, t).expect("in range").norm()))
    }));
    out.push(Check::at_most("psi vanishes at both walls", walls, 0.0));

    let mut most_negative = 0.0_f64;
    let mut closed_err = 0.0_f64;
    for s in &complex {
        for &t in ts {
            for &x in xs {
                let exact = density_exact(&cfg, s, x, t).expect("in range");
                most_negative = most_negative.min(exact);
                closed_err = closed_err.max((exact - density_closed_form(&cfg, s, x, t).expect("in range")).abs());
            }
        }
    }
    out.push(Check::at_most(
        "density is non-negative",
        (-most_negative).max(0.0),
        0.0,
    ));
    out.push(Check::at_most("closed-form density equals |psi|^2", closed_err, 1e-12));

    let mut norm_err = 0.0_f64;
    let mut norm_spread = 0.0_f64;
    for s in complex.iter().take(20) {
        let norms: Vec<f64> = linspace(0.0, period, 10)
            .into_iter()
            .map(|t| norm_integral(&cfg, s, t))
            .collect();
        norm_err = norm_err.max(max_of(norms.iter().map(|n| (n - s.weight()).abs())));
        let lo = norms.iter().copied().fold(f64::INFINITY, f64::min);
        norm_spread = norm_spread.max(max_of(norms.iter().copied()) - lo);
    }
    out.push(Check::at_most("norm integral equals |c1|^2+|c2|^2", norm_err, 1e-8));
    out.push(Check::at_most("norm integral constant in time", norm_spread, 1e-10));

    let periodic = max_of(complex.iter().take(10).flat_map(|s| {
        ts.iter().flat_map(move |&t| {
            xs.iter().map(move |&x| {
                (density_exact(&cfg, s, x, t).unwrap() - density_exact(&cfg, s, x, t + period).unwrap()).abs()
            })
        })
    }));
    out.push(Check::at_most("density has period 2pi/delta_omega", periodic, 1e-12));

    let ground = TwoStateSuperposition::new(complex[0].c1(), Complex64::new(0.0, 0.0)).expect("nonzero");
    let stationary = max_of(xs.iter().map(|&x| {
        (density_exact(&cfg, &ground, x, 0.0).unwrap() - density_exact(&cfg, &ground, x, 0.37).unwrap()).abs()
    }));
    out.push(Check::at_most("c2 = 0 density is time independent", stationary, 1e-13));

    let node_miscount: f64 = (1..=6u32)
        .map(|n| {
            let idx = EigenIndex::new(n).unwrap();
            let v: Vec<f64> = (1..10_000)
                .map(|i| cfg.eigenfunction(idx, i as f64 / 10_000.0).unwrap())
                .collect();
            let changes = v.windows(2).filter(|w| w[0] * w[1] < 0.0).count() as f64;
            (changes - f64::from(n - 1)).abs()
        })
        .sum();
    out.push(Check::at_most(
        "psi_n has n-1 interior sign changes",
        node_miscount,
        0.0,
    ));

    let ratios: Vec<f64> = (0..50).map(|_| rng.gen_range(-0.95..0.95)).collect();
    let mut period_err = 0.0_f64;
    let mut mirror_err = 0.0_f64;
    for &a in &ratios {
        let r = RatioA::new(a).unwrap();
        for t in linspace(0.0, period, 64) {
            let x = analytic_node_position(&cfg, r, t).unwrap();
            period_err = period_err.max((x - analytic_node_position(&cfg, r, t + period).unwrap()).abs());
            mirror_err = mirror_err.max((x + analytic_node_position(&cfg, r, t + period / 2.0).unwrap() - 1.0).abs());
        }
    }
    out.push(Check::at_most(
        "analytic node has period 2pi/delta_omega",
        period_err,
        1e-12,
    ));
    out.push(Check::at_most("x(t) + x(t + T/2) = a", mirror_err, 1e-12));

    let mut range_err = 0.0_f64;
    for &a in &ratios {
        let r = RatioA::new(a).unwrap();
        let tr = track_trajectory(&cfg, &r.to_state(), NodeKind::AnalyticFormula, 0.0, period, 256).unwrap();
        let lo = tr.positions().fold(f64::INFINITY, f64::min);
        let hi = tr.positions().fold(0.0, f64::max);
        range_err = range_err
            .max((lo - a.abs().acos() / PI).abs())
            .max((hi - (-a.abs()).acos() / PI).abs());
    }
    out.push(Check::at_most("analytic node attains its range", range_err, 1e-9));

    let real: Vec<_> = (0..20).map(|_| random_real_state(&mut rng)).collect();

    let mut agree_err = 0.0_f64;
    let mut zero_density = 0.0_f64;
    for s in &real {
        let r = ratio_from_state(s).unwrap();
        for k in 0..=2 {
            let t = f64::from(k) * PI / dw;
            let Some(x) = analytic_node_position(&cfg, r, t) else {
                continue;
            };
            if !(1e-3..=1.0 - 1e-3).contains(&x) {
                continue;
            }
            let nearest = |cands: Vec<f64>| cands.into_iter().map(|c| (c - x).abs()).fold(f64::INFINITY, f64::min);
            let re = nearest(find_real_part_zeros(&cfg, s, t, DEFAULT_SCAN_GRID).unwrap());
            let minima = find_density_minima(&cfg, s, t, DEFAULT_SCAN_GRID).unwrap();
            let mn = nearest(minima.iter().map(|m| m.0).collect());
            agree_err = agree_err.max(re).max(mn);
            zero_density = zero_density.max(density_exact(&cfg, s, x, t).unwrap());
        }
    }
    out.push(Check::at_most(
        "node notions agree where sin(dw t) = 0",
        agree_err,
        1e-8,
    ));
    out.push(Check::at_most("density vanishes there", zero_density, 1e-10));

    let mut smallest = f64::INFINITY;
    for s in &real {
        for t in linspace(0.0, period, 41) {
            if (dw * t).sin().abs() < 1e-3 {
                continue;
            }
            let max = max_of(
                linspace(0.0, 1.0, 2049)
                    .into_iter()
                    .map(|x| density_exact(&cfg, s, x, t).unwrap()),
            );
            for (_, d) in find_density_minima(&cfg, s, t, DEFAULT_SCAN_GRID).unwrap() {
                smallest = smallest.min(d / max);
            }
        }
    }
    out.push(Check::above("no true zero between special times", smallest, 1e-10));

    let (w1, w2) = (cfg.omega(EigenIndex::GROUND), cfg.omega(EigenIndex::SECOND));
    let mut tracker_err = 0.0_f64;
    for s in &real {
        let (c1, c2) = (s.c1().re, s.c2().re);
        let tr = track_trajectory(&cfg, s, NodeKind::RealPartZero, 0.0, period, 64).unwrap();
        for sample in tr.samples() {
            let u = -(c1 * (w1 * sample.t).cos()) / (2.0 * c2 * (w2 * sample.t).cos());
            if let (true, Some(p)) = (u.abs() <= 1.0, sample.position) {
                tracker_err = tracker_err.max((p - u.acos() / PI).abs());
            }
        }
    }
    out.push(Check::at_most(
        "real-part tracker matches closed form",
        tracker_err,
        1e-10,
    ));

    let amp_err = max_of((0..50).map(|_| {
        let a: f64 = rng.gen_range(1e-6..=1.0);
        let amp = oscillation_amplitude(&cfg, RatioA::new(a).unwrap(), TIME_AVERAGE_SAMPLES).unwrap();
        (amp - a.asin() / PI).abs()
    }));
    out.push(Check::at_most("amplitude equals (a/pi) asin(A)", amp_err, 1e-9));

    let mean_err = max_of((0..50).map(|_| {
        let a: f64 = rng.gen_range(-0.99..=0.99);
        let m = time_avg_node_position(&cfg, RatioA::new(a).unwrap(), TIME_AVERAGE_SAMPLES).unwrap();
        (m - 0.5).abs()
    }));
    out.push(Check::at_most("mean node position is a/2", mean_err, 1e-9));

    let avg_err = max_of(real.iter().flat_map(|s| {
        xs.iter().map(move |&x| {
            let avg = time_avg_density(&cfg, s, x, TIME_AVERAGE_SAMPLES).unwrap();
            (avg - stationary_density(&cfg, s, x).unwrap()).abs()
        })
    }));
    out.push(Check::at_most(
        "time-averaged density is stationary part",
        avg_err,
        1e-10,
    ));

    let grid = heatmap(&cfg, 64, 64).unwrap();
    let row_err = max_of((0..64).map(|j| (grid.row_integral(j) - 1.0).abs()));
    out.push(Check::at_most("heatmap rows integrate to 1", row_err, 1e-6));

    let fit = fit_power_law(&amplitude_sweep(&cfg, SweepSpec::default()).unwrap()).unwrap();
    out.push(Check::above(
        "power-law fit residual is nonzero",
        fit.rms_log_residual,
        0.0,
    ));
    out.push(Check::at_most(
        "power-law fit residual below 0.15",
        fit.rms_log_residual,
        0.15,
    ));

    out
}

/// Prints one line per check; returns the number of failures.
pub fn run_all(seed: u64, tolerance_scale: f64) -> usize {
    let cfg = WellConfig::default();
    println!("delta_omega = {} (unit well)", cfg.delta_omega());
    let mut failed = 0;
    for c in checks(seed) {
        let ok = c.passes(tolerance_scale);
        failed += usize::from(!ok);
        let relation = match c.bound {
            Bound::AtMost => "<=",
            Bound::Above => ">",
        };
        println!(
            "{} {:<44} measured={:.3e} {relation} {:e}",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            c.measured,
            c.tol
        );
    }
    println!("{failed} failed");
    failed
}
