//! Physics core: worldlines, the pulled-back field kernel, and the coherence
//! evaluators. All quantities are reduced by the detector gap: Ē = E/Ω,
//! T̄ = ΩT, ā = a/Ω, proper time τ̄ = Ωτ, with Ω = 1 internally.

mod coherence;
mod kernel;
mod trajectory;

pub use coherence::{
    coherence_accelerated, coherence_numeric, coherence_rest_closed_form,
    coherence_velocity_closed_form, doppler_amplitude, effective_initial_energy,
    small_energy_limit, CoherenceResult, Method, REDUCED_FLOOR, SHORT_TIME_LIMIT,
};
pub(crate) use coherence::check_rel_tol;
pub use kernel::{field_kernel, kernel_value, KERNEL_AT_ZERO};
pub use trajectory::{lightcone_coords, LightconeCoords, Trajectory};

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};

/// Static detector data: gap Ω and coupling g.
///
/// Coherence values are reported as C/g throughout, so the coupling only
/// matters for rescaling to absolute units and for judging whether the
/// second-order treatment is trustworthy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorConfig {
    pub omega: f64,
    pub coupling: f64,
}

impl DetectorConfig {
    pub fn new(omega: f64, coupling: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::domain(format!("omega must be > 0, got {omega}")));
        }
        if !(coupling > 0.0 && coupling.is_finite()) {
            return Err(Error::domain(format!(
                "coupling must be > 0, got {coupling}"
            )));
        }
        Ok(DetectorConfig { omega, coupling })
    }

    /// Rescale a reduced result to an absolute coherence C = g·(C/g).
    pub fn c_absolute(&self, c_over_g: f64) -> f64 {
        self.coupling * c_over_g
    }

    /// True when g·(C/g) is large enough (> 0.1) that the dropped O(g³)
    /// terms may matter. Diagnostic only; never an error.
    pub fn perturbative_warning(&self, c_over_g: f64) -> bool {
        self.coupling * c_over_g > 0.1
    }
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            omega: 1.0,
            coupling: 1.0,
        }
    }
}

/// Gaussian coherent-amplitude profile of the field, reduced energy Ē = E/Ω.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldProfile {
    pub e_bar: f64,
}

impl FieldProfile {
    pub fn new(e_bar: f64) -> Result<Self> {
        if !(e_bar > 0.0 && e_bar.is_finite()) {
            return Err(Error::domain(format!("e_bar must be > 0, got {e_bar}")));
        }
        Ok(FieldProfile { e_bar })
    }
}

/// Gaussian switching window of reduced width T̄ = ΩT.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwitchingProfile {
    pub t_bar: f64,
}

impl SwitchingProfile {
    pub fn new(t_bar: f64) -> Result<Self> {
        if !(t_bar > 0.0 && t_bar.is_finite()) {
            return Err(Error::domain(format!("t_bar must be > 0, got {t_bar}")));
        }
        Ok(SwitchingProfile { t_bar })
    }
}
