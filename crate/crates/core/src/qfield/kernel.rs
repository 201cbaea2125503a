//! The field kernel: the single k-integral left after pulling the coherent
//! amplitude back onto a worldline in light-cone coordinates.
//!
//! With the Gaussian amplitude a(q) = e^(−q²/(2Ē²))/√Ē and the measure
//! q^(−1/2) dq, the right- and left-moving mode sums each reduce to
//!
//!   G(Ē, s) = (1/√π) ∫₀^∞ a(q) q^(−1/2) cos(qs) dq = 𝒢(Ē·s),
//!
//! where the substitution q = Ēp cancels every explicit Ē factor:
//!
//!   𝒢(y) = (1/√π) ∫₀^∞ e^(−p²/2) p^(−1/2) cos(yp) dp.
//!
//! 𝒢 is even, positive, strictly decreasing in |y|, with 𝒢(0) =
//! Γ(1/4)·2^(1/4)/(2√π) and tail 𝒢(y) ~ (2|y|)^(−1/2).

use super::super::specfun::gamma_real;
use crate::error::Error;
use crate::Result;

/// 𝒢(0) = Γ(1/4)·2^(1/4)/(2√π), to the digit the closed form gives.
pub const KERNEL_AT_ZERO: f64 = 1.2162802142575203;

/// Series/asymptotic switchover in |y|. Both branches are good to ~1e-13
/// relative in a window around it.
const ASYMPTOTIC_CUTOFF: f64 = 30.0;

/// G(Ē, s): the kernel with its two arguments kept separate, as it appears
/// in the mode integral. Collapses to 𝒢(Ē·s); the pair form exists so the
/// scale invariance G(Ē, s) = G(λĒ, s/λ) is an explicit, testable statement.
pub fn field_kernel(e_bar: f64, s: f64) -> Result<f64> {
    if !(e_bar > 0.0 && e_bar.is_finite()) {
        return Err(Error::domain(format!(
            "field_kernel requires e_bar > 0, got {e_bar}"
        )));
    }
    if s.is_nan() {
        return Err(Error::domain("field_kernel requires finite s"));
    }
    Ok(kernel_value(e_bar * s))
}

/// 𝒢(y) itself.
///
/// Evaluated in closed form rather than by quadrature: the defining integral
/// equals 𝒢(0)·e^(−y²/2)·M(1/4, 1/2, y²/2) with M Kummer's confluent
/// hypergeometric function, whose series here has all-positive terms (no
/// cancellation). Above the cutoff the large-|y| expansion
/// (2|y|)^(−1/2)·Σ d_m y^(−2m) takes over. Quadrature of the defining
/// integral remains the ground truth the tests compare against.
pub fn kernel_value(y: f64) -> f64 {
    let y = y.abs();
    if y.is_infinite() {
        return 0.0;
    }
    if y <= ASYMPTOTIC_CUTOFF {
        kummer_branch(y)
    } else {
        asymptotic_branch(y)
    }
}

/// 𝒢(0)·e^(−x)·M(1/4, 1/2, x) at x = y²/2 ≤ 450. The reflected series is
/// used because M(1/4, 1/2, −x) itself alternates destructively, while this
/// form is a positive sum times an exact exponential.
fn kummer_branch(y: f64) -> f64 {
    let x = 0.5 * y * y;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut m = 0u32;
    while m < 2000 {
        let mf = m as f64;
        term *= x * (0.25 + mf) / ((0.5 + mf) * (mf + 1.0));
        sum += term;
        m += 1;
        if term < sum * 1e-17 {
            break;
        }
    }
    kernel_at_zero() * (-x).exp() * sum
}

/// (2y)^(−1/2)·[1 + Σ_{m≥1} d_m y^(−2m)], d_{m+1} = d_m(4m+1)(4m+3)/(8(m+1)),
/// truncated at the smallest term. At y = 30 the optimal truncation error is
/// far below 1e-13 relative.
fn asymptotic_branch(y: f64) -> f64 {
    let y2 = y * y;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut prev = f64::INFINITY;
    for m in 0u32..40 {
        let mf = m as f64;
        term *= (4.0 * mf + 1.0) * (4.0 * mf + 3.0) / (8.0 * (mf + 1.0) * y2);
        if term >= prev {
            break;
        }
        prev = term;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    sum / (2.0 * y).sqrt()
}

/// Γ(1/4)·2^(1/4)/(2√π) computed from the gamma routine; agrees with
/// [`KERNEL_AT_ZERO`] to the last digit.
fn kernel_at_zero() -> f64 {
    let g_quarter = gamma_real(0.25).expect("0.25 is in gamma's domain");
    g_quarter * 2.0f64.powf(0.25) / (2.0 * std::f64::consts::PI.sqrt())
}
