use super::gamma::gamma_real;
use crate::error::Error;
use crate::Result;

/// Power series below this z, large-argument expansion above. Both branches
/// agree to ~1e-13 relative in a window around the seam.
const SERIES_CUTOFF: f64 = 30.0;

/// Exponentially scaled modified Bessel function e^(−z)·I_ν(z) for z > 0,
/// ν > −1.
///
/// The scaled form is the only one exposed because every caller multiplies
/// I_ν by a decaying exponential anyway; the bare value overflows near
/// z ≈ 709. Relative error is below 1e-12 at ν = −1/4 across z ∈ [1e-6, 1e4]
/// (tested against a high-precision oracle).
pub fn bessel_i_scaled(nu: f64, z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain(format!(
            "bessel_i_scaled requires z > 0, got {z}"
        )));
    }
    if !nu.is_finite() || nu <= -1.0 {
        return Err(Error::domain(format!(
            "bessel_i_scaled requires nu > -1, got {nu}"
        )));
    }
    if z <= SERIES_CUTOFF {
        series(nu, z)
    } else {
        Ok(asymptotic(nu, z))
    }
}

/// e^(−z) Σ_m (z/2)^(2m+ν) / (m! Γ(m+ν+1)). All terms positive, so the sum
/// carries no cancellation; only the leading term needs Γ.
fn series(nu: f64, z: f64) -> Result<f64> {
    let half = 0.5 * z;
    let mut term = half.powf(nu) / gamma_real(nu + 1.0)?;
    let mut sum = term;
    let x = half * half;
    let mut m = 0u32;
    while m < 500 {
        term *= x / ((m as f64 + 1.0) * (m as f64 + 1.0 + nu));
        sum += term;
        m += 1;
        if term < sum * 1e-17 {
            break;
        }
    }
    Ok((-z).exp() * sum)
}

/// Large-z expansion e^(−z)I_ν(z) ≈ (2πz)^(−1/2) Σ_k (−1)^k a_k(ν) z^(−k)
/// with a_0 = 1, a_{k+1} = a_k (4ν² − (2k+1)²) / (8(k+1)). The series is
/// asymptotic; summation stops at the smallest term.
fn asymptotic(nu: f64, z: f64) -> f64 {
    let four_nu2 = 4.0 * nu * nu;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 0u32..60 {
        let k = k as f64;
        term *= -(four_nu2 - (2.0 * k + 1.0).powi(2)) / (8.0 * (k + 1.0) * z);
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        sum += term;
        if term.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    sum / (2.0 * std::f64::consts::PI * z).sqrt()
}
