use super::kernel::kernel_value;
use super::trajectory::{lightcone_coords, Trajectory};
use crate::error::Error;
use crate::specfun::{bessel_i_scaled, integrate_adaptive_with, DEFAULT_EVAL_BUDGET};
use crate::Result;
use num_complex::Complex64;

/// How a coherence value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    DopplerClosedForm,
    Quadrature,
}

/// A single coherence evaluation. All quantities are divided by the
/// coupling: `c_over_g` is C/g, `rho_coh_over_g` is the off-diagonal
/// amplitude ρ_coh/g, and `c_over_g = 2·|rho_coh_over_g|` always.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceResult {
    pub c_over_g: f64,
    pub rho_coh_over_g: Complex64,
    /// Absolute error bound on `c_over_g`.
    pub err_estimate: f64,
    pub method: Method,
}

/// Reduced parameters below this are clamped up to it before evaluation.
/// Guards the small-z Bessel corner of the closed form, where the assembly
/// loses digits to cancellation; the analytic limits below cover the
/// clamped region to far better accuracy than the evaluators would.
pub const REDUCED_FLOOR: f64 = 1e-6;

/// C/g in the T̄ → 0 limit: 4·𝒢(0) = √(4π)·8^(1/4)/Γ(3/4), reached by every
/// trajectory because all worldlines sit at the origin where the switching
/// window concentrates.
pub const SHORT_TIME_LIMIT: f64 = 4.8651208570300811;

/// C/g in the Ē → 0 limit at fixed T̄: the short-time constant damped by the
/// switching window, 4·𝒢(0)·e^(−T̄²/2).
pub fn small_energy_limit(t_bar: f64) -> f64 {
    SHORT_TIME_LIMIT * (-0.5 * t_bar * t_bar).exp()
}

fn checked_reduced(name: &str, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("{name} must be > 0, got {x}")));
    }
    Ok(x.max(REDUCED_FLOOR))
}

pub(crate) fn check_rel_tol(rel_tol: f64) -> Result<f64> {
    if !(1e-10..=1e-2).contains(&rel_tol) {
        return Err(Error::domain(format!(
            "rel_tol must lie in [1e-10, 1e-2], got {rel_tol}"
        )));
    }
    Ok(rel_tol)
}

/// Relative accuracy attributed to the special-function path of the closed
/// forms (gamma ~1e-14, Bessel ~1e-12, assembly roundoff).
const CLOSED_FORM_REL_ERR: f64 = 1e-9;

fn result_from_magnitude(c: f64, err: f64, method: Method) -> CoherenceResult {
    // The amplitude's phase is −i for every evaluator here: the switching
    // and the kernel are even in τ̄ along all three worldline families, so
    // the sin-weighted (real) part of ρ vanishes identically.
    let rho = Complex64::new(0.0, -0.5 * c);
    CoherenceResult {
        c_over_g: 2.0 * rho.norm(),
        rho_coh_over_g: rho,
        err_estimate: err,
        method,
    }
}

/// C₀(Ē, T̄)/g for a detector at rest, in closed form.
///
/// The textbook expression multiplies I₋₁/₄ of z = Ē²T̄⁴/(4(1+Ē²T̄²)) by
/// exponentials that individually overflow near T̄ ≈ 40. Assembled with the
/// scaled Bessel value the exponents combine analytically to the bounded
/// net exponent −T̄²/(2(1+Ē²T̄²)), so the evaluation stays finite for Ē, T̄
/// up to 10³ and beyond.
pub fn coherence_rest_closed_form(e_bar: f64, t_bar: f64) -> Result<CoherenceResult> {
    let e_bar = checked_reduced("e_bar", e_bar)?;
    let t_bar = checked_reduced("t_bar", t_bar)?;
    let (c, err) = rest_magnitude(e_bar, t_bar)?;
    Ok(result_from_magnitude(c, err, Method::ClosedForm))
}

fn rest_magnitude(e_bar: f64, t_bar: f64) -> Result<(f64, f64)> {
    let s = e_bar * e_bar * t_bar * t_bar;
    let d = 1.0 + s;
    let z = s * t_bar * t_bar / (4.0 * d);
    let prefactor = (4.0 * std::f64::consts::PI * e_bar * t_bar * t_bar / d).sqrt();
    let damping = (-t_bar * t_bar / (2.0 * d)).exp();
    let c = prefactor * damping * bessel_i_scaled(-0.25, z)?;
    Ok((c, CLOSED_FORM_REL_ERR * c))
}

/// C_υ(Ē, T̄)/g for an inertial detector: the equal-weight average of the
/// rest result at the two Doppler-shifted energies Ē·√((1∓υ)/(1±υ)).
pub fn coherence_velocity_closed_form(
    e_bar: f64,
    t_bar: f64,
    upsilon: f64,
) -> Result<CoherenceResult> {
    Trajectory::constant_velocity(upsilon)?;
    let e_bar = checked_reduced("e_bar", e_bar)?;
    let t_bar = checked_reduced("t_bar", t_bar)?;
    // Swapping υ → −υ swaps the two shifts, so the symmetry C_υ = C_{−υ}
    // holds to the last bit.
    let shift_minus = ((1.0 - upsilon) / (1.0 + upsilon)).sqrt();
    let shift_plus = ((1.0 + upsilon) / (1.0 - upsilon)).sqrt();
    let (c_minus, err_minus) = rest_magnitude(e_bar * shift_minus, t_bar)?;
    let (c_plus, err_plus) = rest_magnitude(e_bar * shift_plus, t_bar)?;
    Ok(result_from_magnitude(
        0.5 * (c_minus + c_plus),
        0.5 * (err_minus + err_plus),
        Method::DopplerClosedForm,
    ))
}

/// The Doppler-averaged amplitude a′(q) seen by an inertial detector:
/// ½·(e^(−q²/(2E₋²))/√E₋ + e^(−q²/(2E₊²))/√E₊) with E± = Ēγ(1±υ).
pub fn doppler_amplitude(e_bar: f64, upsilon: f64, q: f64) -> Result<f64> {
    Trajectory::constant_velocity(upsilon)?;
    if !(e_bar > 0.0 && e_bar.is_finite()) {
        return Err(Error::domain(format!("e_bar must be > 0, got {e_bar}")));
    }
    if q.is_nan() {
        return Err(Error::domain("q must not be NaN"));
    }
    let gamma = 1.0 / (1.0 - upsilon * upsilon).sqrt();
    let e_minus = e_bar * gamma * (1.0 - upsilon);
    let e_plus = e_bar * gamma * (1.0 + upsilon);
    let half_gaussian =
        |e: f64| 0.5 * (-q * q / (2.0 * e * e)).exp() / e.sqrt();
    Ok(half_gaussian(e_minus) + half_gaussian(e_plus))
}

/// Mean energy of the Doppler-averaged profile, E_υ = (Ē/2)(γ + (1−υ²)/(1+υ²)).
/// Diagnostic only; no evaluator consumes it.
pub fn effective_initial_energy(e_bar: f64, upsilon: f64) -> Result<f64> {
    Trajectory::constant_velocity(upsilon)?;
    if !(e_bar > 0.0 && e_bar.is_finite()) {
        return Err(Error::domain(format!("e_bar must be > 0, got {e_bar}")));
    }
    let u2 = upsilon * upsilon;
    let gamma = 1.0 / (1.0 - u2).sqrt();
    Ok(0.5 * e_bar * (gamma + (1.0 - u2) / (1.0 + u2)))
}

/// Absolute-tolerance floor handed to the τ̄-quadrature: `rel_tol`·1e-4 but
/// never below 1e-13, which keeps the roundoff-limited sin-weighted
/// component (analytically zero) convergent at the tightest tolerances.
fn tau_abs_tol(rel_tol: f64) -> f64 {
    (rel_tol * 1e-4).max(1e-13)
}

/// C/g for any trajectory by direct quadrature of the amplitude integral
///
///   ρ_coh/g = −i ∫ dτ̄ χ(τ̄) e^(iτ̄) [𝒢(Ē·u(τ̄)) + 𝒢(Ē·v(τ̄))],
///
/// with χ the unit-normalized Gaussian window of width T̄, truncated at
/// ±8T̄ (discarded switching tail below e^(−32) relative).
pub fn coherence_numeric(
    traj: Trajectory,
    e_bar: f64,
    t_bar: f64,
    rel_tol: f64,
) -> Result<CoherenceResult> {
    traj.validate()?;
    let e_bar = checked_reduced("e_bar", e_bar)?;
    let t_bar = checked_reduced("t_bar", t_bar)?;
    let rel_tol = check_rel_tol(rel_tol)?;

    let norm = 1.0 / (2.0 * std::f64::consts::PI * t_bar * t_bar).sqrt();
    let window = move |tau: f64| norm * (-tau * tau / (2.0 * t_bar * t_bar)).exp();
    let kernel_sum = move |tau: f64| {
        let lc = lightcone_coords(traj, tau);
        kernel_value(e_bar * lc.u) + kernel_value(e_bar * lc.v)
    };
    let half_range = 8.0 * t_bar;
    let abs_tol = tau_abs_tol(rel_tol);

    let run = |weight: fn(f64) -> f64| -> Result<(f64, f64, bool)> {
        let integrand = move |tau: f64| window(tau) * weight(tau) * kernel_sum(tau);
        match integrate_adaptive_with(
            integrand,
            -half_range,
            half_range,
            rel_tol,
            abs_tol,
            DEFAULT_EVAL_BUDGET,
        ) {
            Ok(q) => Ok((q.value, q.err_estimate, false)),
            Err(Error::QuadratureBudget {
                value,
                err_estimate,
                ..
            }) => Ok((value, err_estimate, true)),
            Err(e) => Err(e),
        }
    };

    // ρ = ∫χ sin(τ̄)K dτ̄ − i ∫χ cos(τ̄)K dτ̄; the sin part is zero by the
    // evenness of K along these worldlines but is integrated anyway as a
    // free consistency check (it converges at the absolute floor).
    let (re, re_err, re_failed) = run(f64::sin)?;
    let (cos_part, cos_err, cos_failed) = run(f64::cos)?;

    let rho = Complex64::new(re, -cos_part);
    let c = 2.0 * rho.norm();
    let err = 2.0 * (re_err + cos_err) + 1e-12 * c;

    if re_failed || cos_failed {
        return Err(Error::QuadratureBudget {
            value: c,
            err_estimate: err,
            evaluations: DEFAULT_EVAL_BUDGET,
            context: format!(
                "coherence_numeric({}, e_bar={e_bar}, t_bar={t_bar}, rel_tol={rel_tol})",
                traj.tag()
            ),
        });
    }

    Ok(CoherenceResult {
        c_over_g: c,
        rho_coh_over_g: rho,
        err_estimate: err,
        method: Method::Quadrature,
    })
}

/// C/g for the uniformly accelerated worldline. Identical contract to
/// [`coherence_numeric`] with a `UniformAcceleration` trajectory; named
/// separately because no closed form is available for this family.
pub fn coherence_accelerated(
    e_bar: f64,
    t_bar: f64,
    a_bar: f64,
    rel_tol: f64,
) -> Result<CoherenceResult> {
    let traj = Trajectory::uniform_acceleration(a_bar)?;
    coherence_numeric(traj, e_bar, t_bar, rel_tol)
}
