//! Two-eigenstate superpositions in the 1D infinite square well and the
//! oscillating quasi-nodes of their wavefunction.
//!
//! The crate is organised bottom-up:
//!
//! * [`well`]: well parameters, eigenfunctions, energies and frequencies;
//! * [`superposition`]: time-evolved amplitudes and densities;
//! * [`nodes`]: the analytic node trajectory and numerical node finders;
//! * [`analysis`]: amplitude sweeps, power-law fit and time averages.

pub mod analysis;
pub mod error;
pub mod fit;
pub mod nodes;
pub mod numeric;
pub mod superposition;
pub mod well;

pub use analysis::{
    amplitude_sweep, fit_power_law, heatmap, oscillation_amplitude, time_avg_density, time_avg_node_position,
    AmplitudeSweep, HeatmapGrid, Spacing, SweepSpec,
};
pub use error::{Error, Result};
pub use fit::PowerLawFit;
pub use nodes::{
    analytic_node_position, exact_zero_times, find_density_minima, find_real_part_zeros, ratio_from_state,
    track_trajectory, track_trajectory_with_grid, NodeKind, NodeSample, NodeTrajectory, RatioA,
};
pub use num_complex::Complex64;
pub use superposition::{
    density_closed_form, density_exact, evaluate_psi, evaluate_psi_general, norm_integral, normalize,
    stationary_density, GeneralSuperposition, TwoStateSuperposition,
};
pub use well::{EigenIndex, WellConfig};
