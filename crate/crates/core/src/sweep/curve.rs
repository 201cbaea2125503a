use super::{eval_cell, GridSpec, Spacing, SweepMeta};
use crate::error::Error;
use crate::qfield::Trajectory;
use crate::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// C/g against T̄ at fixed Ē for a list of trajectories; the data behind a
/// decoherence plot. `values`/`errors` are row-major with the T̄ sample as
/// the row: index = sample · n_trajectories + column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveTable {
    pub e_bar: f64,
    pub t_samples: Vec<f64>,
    pub trajectories: Vec<Trajectory>,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub meta: SweepMeta,
}

impl CurveTable {
    pub fn idx(&self, sample: usize, column: usize) -> usize {
        sample * self.trajectories.len() + column
    }

    pub fn value(&self, sample: usize, column: usize) -> f64 {
        self.values[self.idx(sample, column)]
    }
}

/// Sample C/g on `n` linearly spaced T̄ points over [t_bar_min, t_bar_max],
/// one column per trajectory in input order, in parallel over samples.
///
/// Columns use the same cheapest-valid evaluator rule as grids. Per-point
/// quadrature failures keep their best estimate and land in `meta.flagged`
/// as [sample, column].
pub fn decoherence_curve(
    trajs: &[Trajectory],
    e_bar: f64,
    t_bar_min: f64,
    t_bar_max: f64,
    n: usize,
    rel_tol: f64,
) -> Result<CurveTable> {
    if trajs.is_empty() {
        return Err(Error::domain(
            "decoherence_curve needs at least one trajectory",
        ));
    }
    for t in trajs {
        t.validate()?;
    }
    if !(e_bar > 0.0 && e_bar.is_finite()) {
        return Err(Error::domain(format!("e_bar must be > 0, got {e_bar}")));
    }
    if !(t_bar_min > 0.0 && t_bar_min.is_finite() && t_bar_max.is_finite() && t_bar_min < t_bar_max)
    {
        return Err(Error::domain(format!(
            "curve needs 0 < t_bar_min < t_bar_max, got [{t_bar_min}, {t_bar_max}]"
        )));
    }
    if n < 2 {
        return Err(Error::domain(format!("curve needs n ≥ 2 samples, got {n}")));
    }
    crate::qfield::check_rel_tol(rel_tol)?;

    let start = Instant::now();
    let t_samples: Vec<f64> = (0..n)
        .map(|i| GridSpec::coord(t_bar_min, t_bar_max, n, i, Spacing::Linear))
        .collect();

    let rows: Vec<Result<Vec<(f64, f64, bool)>>> = t_samples
        .par_iter()
        .map(|&t_bar| {
            trajs
                .iter()
                .map(|&traj| match eval_cell(traj, e_bar, t_bar, rel_tol) {
                    Ok(r) => Ok((r.c_over_g, r.err_estimate, false)),
                    Err(Error::QuadratureBudget {
                        value,
                        err_estimate,
                        ..
                    }) => Ok((value, err_estimate, true)),
                    Err(e) => Err(e),
                })
                .collect()
        })
        .collect();

    let mut values = Vec::with_capacity(n * trajs.len());
    let mut errors = Vec::with_capacity(n * trajs.len());
    let mut flagged = Vec::new();
    for (sample, row) in rows.into_iter().enumerate() {
        for (column, cell) in row?.into_iter().enumerate() {
            let (v, e, failed) = cell;
            values.push(v);
            errors.push(e);
            if failed {
                flagged.push([sample, column]);
            }
        }
    }

    Ok(CurveTable {
        e_bar,
        t_samples,
        trajectories: trajs.to_vec(),
        values,
        errors,
        meta: SweepMeta {
            rel_tol,
            flagged,
            wall_seconds: start.elapsed().as_secs_f64(),
        },
    })
}
