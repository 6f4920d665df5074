//! The infinite square well on `[0, a]`: its parameters, analytic
//! eigenfunctions, energies and angular frequencies.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Physical parameters of the well: width `a`, particle mass `m` and `ħ`.
///
/// `Default` gives natural units, `a = m = ħ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellConfig {
    width: f64,
    mass: f64,
    hbar: f64,
}

impl Default for WellConfig {
    fn default() -> Self {
        Self {
            width: 1.0,
            mass: 1.0,
            hbar: 1.0,
        }
    }
}

impl WellConfig {
    pub fn new(width: f64, mass: f64, hbar: f64) -> Result<Self> {
        for (name, value) in [("width", width), ("mass", mass), ("hbar", hbar)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidWell { name, value });
            }
        }
        Ok(Self { width, mass, hbar })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Errors unless `0 <= x <= a`.
    pub fn check_position(&self, x: f64) -> Result<()> {
        if (0.0..=self.width).contains(&x) {
            Ok(())
        } else {
            Err(Error::OutOfWell { x, width: self.width })
        }
    }

    /// `E_n = n² π² ħ² / (2 m a²)`.
    pub fn energy(&self, n: EigenIndex) -> f64 {
        let n = f64::from(n.get());
        n * n * PI * PI * self.hbar * self.hbar / (2.0 * self.mass * self.width * self.width)
    }

    /// `ω_n = E_n / ħ`.
    pub fn omega(&self, n: EigenIndex) -> f64 {
        self.energy(n) / self.hbar
    }

    /// Beat frequency of the (1, 2) pair, `ω₂ − ω₁ = 3π²ħ / (2 m a²)`.
    pub fn delta_omega(&self) -> f64 {
        self.omega(EigenIndex::SECOND) - self.omega(EigenIndex::GROUND)
    }

    /// Recurrence period of the two-state density, `2π / Δω`.
    pub fn beat_period(&self) -> f64 {
        2.0 * PI / self.delta_omega()
    }

    /// `ψ_n(x) = sqrt(2/a) sin(nπx/a)`, exactly zero at both walls.
    pub fn eigenfunction(&self, n: EigenIndex, x: f64) -> Result<f64> {
        self.check_position(x)?;
        Ok(self.eigenfunction_unchecked(n, x))
    }

    pub(crate) fn eigenfunction_unchecked(&self, n: EigenIndex, x: f64) -> f64 {
        if x == 0.0 || x == self.width {
            return 0.0;
        }
        (2.0 / self.width).sqrt() * (f64::from(n.get()) * PI * x / self.width).sin()
    }
}

/// Quantum number `n >= 1` of a well eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EigenIndex(u32);

impl EigenIndex {
    pub const GROUND: Self = Self(1);
    pub const SECOND: Self = Self(2);

    pub fn new(n: u32) -> Result<Self> {
        if n >= 1 {
            Ok(Self(n))
        } else {
            Err(Error::InvalidIndex(n))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for EigenIndex {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}
