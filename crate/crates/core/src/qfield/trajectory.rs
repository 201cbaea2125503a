use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Detector worldline through the origin, parametrized by proper time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Trajectory {
    /// t(τ) = τ, x(τ) = 0.
    Rest,
    /// Inertial motion at speed υ (units of c), |υ| < 1 strictly.
    ConstantVelocity { upsilon: f64 },
    /// Hyperbolic worldline t = ā⁻¹ sinh(āτ̄), x = ā⁻¹(cosh(āτ̄) − 1) with
    /// constant proper acceleration ā > 0 strictly. ā = 0 is rejected so
    /// that limit studies stay explicit; request `Rest` instead.
    UniformAcceleration { a_bar: f64 },
}

impl Trajectory {
    pub fn constant_velocity(upsilon: f64) -> Result<Self> {
        if !(upsilon.is_finite() && upsilon.abs() < 1.0) {
            return Err(Error::domain(format!(
                "velocity must satisfy |v| < 1, got {upsilon}"
            )));
        }
        Ok(Trajectory::ConstantVelocity { upsilon })
    }

    pub fn uniform_acceleration(a_bar: f64) -> Result<Self> {
        if !(a_bar.is_finite() && a_bar > 0.0) {
            return Err(Error::domain(format!(
                "acceleration must be > 0 (use Rest for a = 0), got {a_bar}"
            )));
        }
        Ok(Trajectory::UniformAcceleration { a_bar })
    }

    /// Revalidate the parameters of an already-constructed value (variants
    /// are public, so a struct literal can bypass the checked constructors).
    pub fn validate(&self) -> Result<()> {
        match *self {
            Trajectory::Rest => Ok(()),
            Trajectory::ConstantVelocity { upsilon } => {
                Self::constant_velocity(upsilon).map(|_| ())
            }
            Trajectory::UniformAcceleration { a_bar } => {
                Self::uniform_acceleration(a_bar).map(|_| ())
            }
        }
    }

    /// Compact tag used in file columns and summaries: `rest`, `v0.8`, `a2`.
    pub fn tag(&self) -> String {
        match *self {
            Trajectory::Rest => "rest".to_string(),
            Trajectory::ConstantVelocity { upsilon } => format!("v{upsilon}"),
            Trajectory::UniformAcceleration { a_bar } => format!("a{a_bar}"),
        }
    }
}

impl fmt::Display for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Trajectory {
    type Err = Error;

    /// Inverse of [`Trajectory::tag`].
    fn from_str(s: &str) -> Result<Self> {
        if s == "rest" {
            return Ok(Trajectory::Rest);
        }
        if let Some(num) = s.strip_prefix('v') {
            let upsilon: f64 = num
                .parse()
                .map_err(|_| Error::domain(format!("bad trajectory tag '{s}'")))?;
            return Trajectory::constant_velocity(upsilon);
        }
        if let Some(num) = s.strip_prefix('a') {
            let a_bar: f64 = num
                .parse()
                .map_err(|_| Error::domain(format!("bad trajectory tag '{s}'")))?;
            return Trajectory::uniform_acceleration(a_bar);
        }
        Err(Error::domain(format!(
            "bad trajectory tag '{s}' (expected rest, v<speed>, or a<accel>)"
        )))
    }
}

/// Light-cone coordinates u = t − x, v = t + x of a worldline point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightconeCoords {
    pub u: f64,
    pub v: f64,
}

/// Light-cone position of the detector at proper time τ̄.
///
/// Rest: (τ̄, τ̄). Constant velocity: (γ(1−υ)τ̄, γ(1+υ)τ̄). Uniform
/// acceleration: ((1 − e^(−āτ̄))/ā, (e^(āτ̄) − 1)/ā), written with expm1 so
/// the ā → 0 limit degrades gracefully to (τ̄, τ̄).
pub fn lightcone_coords(traj: Trajectory, tau_bar: f64) -> LightconeCoords {
    match traj {
        Trajectory::Rest => LightconeCoords {
            u: tau_bar,
            v: tau_bar,
        },
        Trajectory::ConstantVelocity { upsilon } => {
            let gamma = 1.0 / (1.0 - upsilon * upsilon).sqrt();
            LightconeCoords {
                u: gamma * (1.0 - upsilon) * tau_bar,
                v: gamma * (1.0 + upsilon) * tau_bar,
            }
        }
        Trajectory::UniformAcceleration { a_bar } => LightconeCoords {
            u: -(-a_bar * tau_bar).exp_m1() / a_bar,
            v: (a_bar * tau_bar).exp_m1() / a_bar,
        },
    }
}
