//! Real special functions and quadrature engines. Self-contained: nothing in
//! here knows about detectors or fields.

mod bessel;
mod gamma;
mod quad;

pub use bessel::bessel_i_scaled;
pub use gamma::gamma_real;
pub use quad::{
    integrate_adaptive, integrate_adaptive_with, integrate_halfline_sqrt_singularity,
    QuadratureResult, DEFAULT_EVAL_BUDGET,
};
