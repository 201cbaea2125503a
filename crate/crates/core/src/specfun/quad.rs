use crate::error::Error;
use crate::Result;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Integral estimate.
    pub value: f64,
    /// Absolute error bound on `value`.
    pub err_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: u64,
}

/// Evaluation budget used when no explicit budget is given.
pub const DEFAULT_EVAL_BUDGET: u64 = 1_000_000;

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights. Standard QUADPACK qk15 constants.
const XGK: [f64; 8] = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224,
    0.06309209262997856,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.1903505780647854,
    0.20443294007529889,
    0.20948214108472782,
];
const WG: [f64; 4] = [
    0.1294849661688697,
    0.27970539148927664,
    0.3818300505051189,
    0.4179591836734694,
];

/// QUADPACK's error-magnification heuristic: inflate the raw |K15 − G7|
/// difference toward the scale of the integrand's variation, floor at the
/// roundoff level of |f|'s integral.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One G7-K15 application on [a, b]: returns (K15 value, error bound).
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut fv = [0.0f64; 15];
    fv[7] = f_center;
    let mut res_kronrod = WGK[7] * f_center;
    let mut res_gauss = WG[3] * f_center;
    let mut res_abs = res_kronrod.abs();

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            // XGK odd positions are the embedded Gauss nodes.
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let err = rescale_error((res_kronrod - res_gauss) * half, res_abs * half.abs(), res_asc * half.abs());
    (res_kronrod * half, err)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    seq: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    // Max-heap on error; insertion order breaks ties so pop order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Globally adaptive G7-K15 integration of `f` over the finite interval
/// [a, b], bisecting whichever panel currently carries the largest error
/// bound until Σ err ≤ max(rel_tol·|Σ value|, abs_tol).
///
/// Infinite ranges are the caller's problem: truncate first, with a tail
/// bound appropriate to the integrand.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadratureResult> {
    integrate_adaptive_with(f, a, b, rel_tol, abs_tol, DEFAULT_EVAL_BUDGET)
}

/// [`integrate_adaptive`] with an explicit evaluation budget.
pub fn integrate_adaptive_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_evals: u64,
) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain(format!(
            "integrate_adaptive requires finite a < b, got [{a}, {b}]"
        )));
    }
    if !(rel_tol >= 0.0 && abs_tol >= 0.0 && rel_tol + abs_tol > 0.0) {
        return Err(Error::domain(
            "integrate_adaptive needs rel_tol ≥ 0, abs_tol ≥ 0, not both zero",
        ));
    }

    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let (v, e) = qk15(&f, a, b);
    let mut evaluations = 15u64;
    let mut total = v;
    let mut err_total = e;
    heap.push(Panel { a, b, value: v, err: e, seq });

    let min_width = (b - a) * f64::EPSILON * 4.0;
    let tolerance = |total: f64| f64::max(abs_tol, rel_tol * total.abs());

    while err_total > tolerance(total) {
        if evaluations + 30 > max_evals {
            return Err(Error::QuadratureBudget {
                value: total,
                err_estimate: err_total,
                evaluations,
                context: format!("budget {max_evals} on [{a}, {b}]"),
            });
        }
        // Worst panel first; total order guaranteed by (err, seq).
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.b - worst.a < min_width || mid <= worst.a || mid >= worst.b {
            // Can't subdivide further; the error floor is roundoff-bound.
            heap.push(worst);
            return Err(Error::QuadratureBudget {
                value: total,
                err_estimate: err_total,
                evaluations,
                context: format!("panel width underflow near {mid:e} on [{a}, {b}]"),
            });
        }
        let (v1, e1) = qk15(&f, worst.a, mid);
        let (v2, e2) = qk15(&f, mid, worst.b);
        evaluations += 30;
        total += v1 + v2 - worst.value;
        err_total += e1 + e2 - worst.err;
        seq += 1;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1, seq });
        seq += 1;
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2, seq });
    }

    if !total.is_finite() {
        return Err(Error::domain(format!(
            "integrand produced a non-finite integral on [{a}, {b}]"
        )));
    }
    Ok(QuadratureResult {
        value: total,
        err_estimate: err_total,
        evaluations,
    })
}

/// ∫₀^∞ g(k)·k^(−1/2) dk for smooth, decaying (Gaussian-dominated) g.
///
/// The substitution k = w² turns the integrand into 2·g(w²), absorbing the
/// endpoint singularity exactly. The w-half-line is covered by geometrically
/// growing segments [0,1], [1,2], [2,4], … and summation stops once two
/// consecutive segments contribute below the tolerance floor; with a
/// Gaussian-dominated g the discarded tail is far below that floor.
pub fn integrate_halfline_sqrt_singularity<G: Fn(f64) -> f64>(
    g: G,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    if !(rel_tol > 0.0 && rel_tol.is_finite()) {
        return Err(Error::domain(format!(
            "integrate_halfline_sqrt_singularity requires rel_tol > 0, got {rel_tol}"
        )));
    }
    let integrand = |w: f64| 2.0 * g(w * w);
    let mut total = 0.0;
    let mut err_total = 0.0;
    let mut evaluations = 0u64;
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    let mut quiet_segments = 0u32;
    while quiet_segments < 2 && lo < 512.0 {
        let seg = integrate_adaptive(&integrand, lo, hi, rel_tol, rel_tol * 1e-6)?;
        total += seg.value;
        err_total += seg.err_estimate;
        evaluations += seg.evaluations;
        if seg.value.abs() <= 1e-3 * rel_tol * total.abs().max(1e-300) {
            quiet_segments += 1;
        } else {
            quiet_segments = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    Ok(QuadratureResult {
        value: total,
        err_estimate: err_total,
        evaluations,
    })
}
