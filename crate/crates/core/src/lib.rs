//! Coherence extracted by a pointlike two-level detector sweeping through a
//! Gaussian coherent state of a massless scalar field in 1+1 Minkowski
//! spacetime.
//!
//! The detector couples to the field along its worldline through a Gaussian
//! switching window of reduced width `T̄ = ΩT`; the field carries a Gaussian
//! coherent amplitude of reduced energy `Ē = E/Ω`. Everything here works in
//! those reduced variables (detector gap Ω = 1) and reports the ℓ₁-norm
//! coherence divided by the coupling, `C/g`.
//!
//! Layout:
//! - [`specfun`]: gamma, scaled modified Bessel, adaptive Gauss–Kronrod
//!   quadrature. No physics.
//! - [`qfield`]: worldlines, the pulled-back field kernel, and the three
//!   coherence evaluators (closed form at rest, Doppler closed form for
//!   constant velocity, direct quadrature for uniform acceleration).
//! - [`sweep`]: parallel (Ē, T̄) grids, motion-minus-rest difference maps,
//!   swelling-region extraction, decoherence curves.

pub mod error;
pub mod qfield;
pub mod specfun;
pub mod sweep;

pub use error::Error;
pub use qfield::{
    coherence_accelerated, coherence_numeric, coherence_rest_closed_form,
    coherence_velocity_closed_form, doppler_amplitude, effective_initial_energy, field_kernel,
    lightcone_coords, small_energy_limit, CoherenceResult, DetectorConfig, FieldProfile,
    LightconeCoords, Method, SwitchingProfile, Trajectory, REDUCED_FLOOR, SHORT_TIME_LIMIT,
};
pub use specfun::{
    bessel_i_scaled, gamma_real, integrate_adaptive, integrate_halfline_sqrt_singularity,
    QuadratureResult,
};
pub use sweep::{
    decoherence_curve, diff_grid, sweep_grid, swelling_regions, CurveTable, DiffGrid, GridSpec,
    Spacing, SweepGrid, SweepMeta, SwellingCell, SwellingComponent, SwellingReport,
};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
