use super::DiffGrid;
use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// One grid cell whose difference value cleared the detection predicate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwellingCell {
    pub i: usize,
    pub j: usize,
    pub e_bar: f64,
    pub t_bar: f64,
    pub diff: f64,
}

/// A 4-connected component of detected cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwellingComponent {
    /// Member cells, row-major.
    pub cells: Vec<[usize; 2]>,
    /// Inclusive index bounds [min, max] along the Ē axis.
    pub i_range: [usize; 2],
    /// Inclusive index bounds [min, max] along the T̄ axis.
    pub j_range: [usize; 2],
    /// The member with the largest difference (first such in row-major
    /// order on ties).
    pub max_cell: SwellingCell,
}

impl SwellingComponent {
    /// Does any member cell satisfy the predicate on its coordinates?
    pub fn any_cell<F: Fn(f64, f64) -> bool>(&self, es: &[f64], ts: &[f64], pred: F) -> bool {
        self.cells.iter().any(|&[i, j]| pred(es[i], ts[j]))
    }
}

/// Cells where a moving detector beats the static one by more than the
/// threshold, grouped into connected regions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwellingReport {
    pub threshold: f64,
    /// Every detected cell, row-major. Detection is conservative: a cell
    /// qualifies only when diff > threshold + its combined error bound, so
    /// quadrature noise near zero cannot fabricate a region.
    pub cells: Vec<SwellingCell>,
    /// 4-neighbor connected components in row-major discovery order.
    pub components: Vec<SwellingComponent>,
}

/// Extract swelling regions from a difference map.
///
/// The predicate is exactly `diff[i,j] > threshold + err[i,j]`; components
/// are found by breadth-first flood fill over 4-neighbors, seeded in
/// row-major order, so output ordering is deterministic.
pub fn swelling_regions(d: &DiffGrid, threshold: f64) -> Result<SwellingReport> {
    if !(threshold >= 0.0 && threshold.is_finite()) {
        return Err(Error::domain(format!(
            "threshold must be ≥ 0, got {threshold}"
        )));
    }
    let (n_e, n_t) = (d.spec.n_e, d.spec.n_t);
    let es = d.spec.e_coords();
    let ts = d.spec.t_coords();
    let detected: Vec<bool> = d
        .values
        .iter()
        .zip(&d.errors)
        .map(|(&v, &e)| v > threshold + e)
        .collect();

    let make_cell = |i: usize, j: usize| SwellingCell {
        i,
        j,
        e_bar: es[i],
        t_bar: ts[j],
        diff: d.values[i * n_t + j],
    };

    let cells: Vec<SwellingCell> = (0..n_e)
        .flat_map(|i| (0..n_t).map(move |j| (i, j)))
        .filter(|&(i, j)| detected[i * n_t + j])
        .map(|(i, j)| make_cell(i, j))
        .collect();

    let mut visited = vec![false; n_e * n_t];
    let mut components = Vec::new();
    for si in 0..n_e {
        for sj in 0..n_t {
            let start = si * n_t + sj;
            if !detected[start] || visited[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = VecDeque::new();
            visited[start] = true;
            queue.push_back((si, sj));
            while let Some((i, j)) = queue.pop_front() {
                members.push([i, j]);
                let mut try_push = |ni: usize, nj: usize| {
                    let idx = ni * n_t + nj;
                    if detected[idx] && !visited[idx] {
                        visited[idx] = true;
                        queue.push_back((ni, nj));
                    }
                };
                if i > 0 {
                    try_push(i - 1, j);
                }
                if i + 1 < n_e {
                    try_push(i + 1, j);
                }
                if j > 0 {
                    try_push(i, j - 1);
                }
                if j + 1 < n_t {
                    try_push(i, j + 1);
                }
            }
            members.sort_unstable();
            let i_range = [
                members.iter().map(|c| c[0]).min().unwrap(),
                members.iter().map(|c| c[0]).max().unwrap(),
            ];
            let j_range = [
                members.iter().map(|c| c[1]).min().unwrap(),
                members.iter().map(|c| c[1]).max().unwrap(),
            ];
            let mut max_cell = make_cell(members[0][0], members[0][1]);
            for &[i, j] in &members[1..] {
                let cand = make_cell(i, j);
                if cand.diff > max_cell.diff {
                    max_cell = cand;
                }
            }
            components.push(SwellingComponent {
                cells: members,
                i_range,
                j_range,
                max_cell,
            });
        }
    }

    Ok(SwellingReport {
        threshold,
        cells,
        components,
    })
}
