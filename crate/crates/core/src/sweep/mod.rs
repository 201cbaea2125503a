//! Parameter-space exploration over (Ē, T̄): parallel sweeps, difference
//! maps between moving and static detectors, swelling-region extraction,
//! and fixed-energy decoherence curves.

mod curve;
mod regions;

pub use curve::{decoherence_curve, CurveTable};
pub use regions::{swelling_regions, SwellingCell, SwellingComponent, SwellingReport};

use crate::error::Error;
use crate::qfield::{
    coherence_numeric, coherence_rest_closed_form, coherence_velocity_closed_form, CoherenceResult,
    Trajectory,
};
use crate::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Axis spacing of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// Rectangular (Ē, T̄) grid description. Coordinates are a pure function of
/// the spec, so any holder of the spec reconstructs the axes exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub e_bar_min: f64,
    pub e_bar_max: f64,
    pub t_bar_min: f64,
    pub t_bar_max: f64,
    pub n_e: usize,
    pub n_t: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, min, max) in [
            ("e_bar", self.e_bar_min, self.e_bar_max),
            ("t_bar", self.t_bar_min, self.t_bar_max),
        ] {
            if !(min > 0.0 && min.is_finite() && max.is_finite() && min < max) {
                return Err(Error::domain(format!(
                    "grid needs 0 < {name}_min < {name}_max, got [{min}, {max}]"
                )));
            }
        }
        if self.n_e < 2 || self.n_t < 2 {
            return Err(Error::domain(format!(
                "grid needs n_e ≥ 2 and n_t ≥ 2, got {}x{}",
                self.n_e, self.n_t
            )));
        }
        Ok(())
    }

    /// i-th coordinate of an n-point axis. Endpoints are returned exactly.
    pub(crate) fn coord(min: f64, max: f64, n: usize, i: usize, spacing: Spacing) -> f64 {
        if i == 0 {
            return min;
        }
        if i == n - 1 {
            return max;
        }
        let frac = i as f64 / (n - 1) as f64;
        match spacing {
            Spacing::Linear => min + (max - min) * frac,
            Spacing::Log => (min.ln() + (max.ln() - min.ln()) * frac).exp(),
        }
    }

    pub fn e_coords(&self) -> Vec<f64> {
        (0..self.n_e)
            .map(|i| Self::coord(self.e_bar_min, self.e_bar_max, self.n_e, i, self.spacing))
            .collect()
    }

    pub fn t_coords(&self) -> Vec<f64> {
        (0..self.n_t)
            .map(|j| Self::coord(self.t_bar_min, self.t_bar_max, self.n_t, j, self.spacing))
            .collect()
    }

    pub fn cells(&self) -> usize {
        self.n_e * self.n_t
    }
}

/// Evaluation metadata carried by sweeps and curves. Wall time is kept in
/// memory but never serialized, so files from identical inputs stay
/// byte-identical regardless of machine or worker count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct SweepMeta {
    pub rel_tol: f64,
    /// (row, column) indices whose quadrature hit its budget; their stored
    /// values are best estimates.
    pub flagged: Vec<[usize; 2]>,
    #[serde(skip)]
    pub wall_seconds: f64,
}

/// C/g sampled over a grid for one trajectory. `values` and `errors` are
/// row-major with Ē as the slow (row) axis: index = i_e · n_t + j_t.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub spec: GridSpec,
    pub trajectory: Trajectory,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub meta: SweepMeta,
}

impl SweepGrid {
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.spec.n_t + j
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[self.idx(i, j)]
    }

    pub fn error(&self, i: usize, j: usize) -> f64 {
        self.errors[self.idx(i, j)]
    }
}

/// Pointwise difference of two sweeps sharing a spec, minuend − subtrahend.
/// Values may be negative; errors are the summed operand bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffGrid {
    pub spec: GridSpec,
    pub minuend: String,
    pub subtrahend: String,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    /// Union of the operands' flagged cells.
    pub flagged: Vec<[usize; 2]>,
}

impl DiffGrid {
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.spec.n_t + j
    }
}

/// Fraction of budget-flagged cells above which a sweep fails outright.
const FLAGGED_CELL_BUDGET: f64 = 0.01;

/// Cheapest valid evaluator for one cell: closed form at rest, Doppler
/// closed form for inertial motion, quadrature for acceleration.
pub(crate) fn eval_cell(
    traj: Trajectory,
    e_bar: f64,
    t_bar: f64,
    rel_tol: f64,
) -> Result<CoherenceResult> {
    match traj {
        Trajectory::Rest => coherence_rest_closed_form(e_bar, t_bar),
        Trajectory::ConstantVelocity { upsilon } => {
            coherence_velocity_closed_form(e_bar, t_bar, upsilon)
        }
        Trajectory::UniformAcceleration { .. } => coherence_numeric(traj, e_bar, t_bar, rel_tol),
    }
}

/// Evaluate C/g on every grid cell, in parallel over cells.
///
/// Each cell is a pure function of its coordinates, and results are placed
/// by index, so the output is bit-identical for any worker count (run the
/// call inside a sized rayon pool to pin the parallelism degree). Cells
/// whose quadrature exhausts its budget keep their best estimate and are
/// listed in `meta.flagged`; more than 1% flagged fails the whole sweep.
pub fn sweep_grid(traj: Trajectory, spec: &GridSpec, rel_tol: f64) -> Result<SweepGrid> {
    spec.validate()?;
    traj.validate()?;
    // Closed-form cells ignore the tolerance, so check it here or a rest
    // sweep would record a nonsense value in its meta.
    crate::qfield::check_rel_tol(rel_tol)?;
    let start = Instant::now();
    let es = spec.e_coords();
    let ts = spec.t_coords();
    let n_t = spec.n_t;

    let cells: Vec<Result<(f64, f64, bool)>> = (0..spec.cells())
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n_t, idx % n_t);
            match eval_cell(traj, es[i], ts[j], rel_tol) {
                Ok(r) => Ok((r.c_over_g, r.err_estimate, false)),
                Err(Error::QuadratureBudget {
                    value,
                    err_estimate,
                    ..
                }) => Ok((value, err_estimate, true)),
                Err(e) => Err(e),
            }
        })
        .collect();

    let mut values = Vec::with_capacity(spec.cells());
    let mut errors = Vec::with_capacity(spec.cells());
    let mut flagged = Vec::new();
    for (idx, cell) in cells.into_iter().enumerate() {
        let (v, e, failed) = cell?;
        values.push(v);
        errors.push(e);
        if failed {
            flagged.push([idx / n_t, idx % n_t]);
        }
    }

    if flagged.len() as f64 > FLAGGED_CELL_BUDGET * spec.cells() as f64 {
        return Err(Error::TooManyFlagged {
            flagged: flagged.len(),
            total: spec.cells(),
            context: format!("trajectory {}, rel_tol {rel_tol}", traj.tag()),
        });
    }

    Ok(SweepGrid {
        spec: *spec,
        trajectory: traj,
        values,
        errors,
        meta: SweepMeta {
            rel_tol,
            flagged,
            wall_seconds: start.elapsed().as_secs_f64(),
        },
    })
}

/// a − b pointwise, with error bounds summed. The specs must be identical.
pub fn diff_grid(a: &SweepGrid, b: &SweepGrid) -> Result<DiffGrid> {
    if a.spec != b.spec {
        return Err(Error::GridMismatch(format!(
            "minuend spec {:?} differs from subtrahend spec {:?}",
            a.spec, b.spec
        )));
    }
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x - y)
        .collect();
    let errors = a
        .errors
        .iter()
        .zip(&b.errors)
        .map(|(x, y)| x + y)
        .collect();
    let mut flagged: Vec<[usize; 2]> = a
        .meta
        .flagged
        .iter()
        .chain(&b.meta.flagged)
        .copied()
        .collect();
    flagged.sort_unstable();
    flagged.dedup();
    Ok(DiffGrid {
        spec: a.spec,
        minuend: a.trajectory.tag(),
        subtrahend: b.trajectory.tag(),
        values,
        errors,
        flagged,
    })
}
