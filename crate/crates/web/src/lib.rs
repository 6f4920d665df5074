//! Browser bindings for the interactive demo in `www/`.
//!
//! Each exported function is a thin wrapper over a plain Rust function of
//! the same name in [`demo`], which the native tests exercise directly.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js(e: qbox_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Beat period `2π/Δω` of the unit well.
#[wasm_bindgen]
pub fn beat_period() -> f64 {
    qbox_core::WellConfig::default().beat_period()
}

/// Node trajectory over one beat period as interleaved `[t0, x0, t1, x1, ...]`;
/// `x` is NaN where no node exists.
#[wasm_bindgen]
pub fn node_trajectory(c1: f64, c2: f64, kind: &str, samples: usize) -> Result<Vec<f64>, JsError> {
    demo::node_trajectory(c1, c2, kind, samples).map_err(js)
}

/// `|Ψ(x, t)|²` at `points` uniform positions over `[0, 1]`.
#[wasm_bindgen]
pub fn density_profile(c1: f64, c2: f64, t: f64, points: usize) -> Result<Vec<f64>, JsError> {
    demo::density_profile(c1, c2, t, points).map_err(js)
}

#[wasm_bindgen]
pub struct Sweep(demo::SweepResult);

#[wasm_bindgen]
impl Sweep {
    pub fn ratios(&self) -> Vec<f64> {
        self.0.ratios.clone()
    }

    pub fn amplitudes(&self) -> Vec<f64> {
        self.0.amplitudes.clone()
    }

    pub fn coefficient(&self) -> f64 {
        self.0.fit.coefficient
    }

    pub fn exponent(&self) -> f64 {
        self.0.fit.exponent
    }

    pub fn rms_log_residual(&self) -> f64 {
        self.0.fit.rms_log_residual
    }
}

#[wasm_bindgen]
pub fn amplitude_sweep(a_min: f64, a_max: f64, count: usize, log_spacing: bool) -> Result<Sweep, JsError> {
    demo::amplitude_sweep(a_min, a_max, count, log_spacing)
        .map(Sweep)
        .map_err(js)
}

/// Time-averaged density, row-major with `mix_count` rows (θ from 0 to π/2)
/// of `x_count` columns.
#[wasm_bindgen]
pub fn heatmap(x_count: usize, mix_count: usize) -> Result<Vec<f64>, JsError> {
    demo::heatmap(x_count, mix_count).map_err(js)
}
