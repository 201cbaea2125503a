//! Acceptance gate. Each test is one release criterion with its tolerance
//! pinned; libtest prints one pass/fail line per criterion. Runtime is
//! dominated by the accelerated-trajectory sweeps.
//!
//! Run with `cargo test -p cohex-core --test acceptance`.

mod refdata;

use cohex_core::qfield::{kernel_value, KERNEL_AT_ZERO};
use cohex_core::{
    bessel_i_scaled, coherence_accelerated, coherence_numeric, coherence_rest_closed_form,
    coherence_velocity_closed_form, decoherence_curve, diff_grid, field_kernel, gamma_real,
    sweep_grid, swelling_regions, GridSpec, Spacing, SweepGrid, Trajectory,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn grid(e_min: f64, e_max: f64, t_min: f64, t_max: f64, n_e: usize, n_t: usize) -> GridSpec {
    GridSpec {
        e_bar_min: e_min,
        e_bar_max: e_max,
        t_bar_min: t_min,
        t_bar_max: t_max,
        n_e,
        n_t,
        spacing: Spacing::Linear,
    }
}

// For a vanishingly short window every trajectory family must report the
// same C/g: √(4π)·8^(1/4)/Γ(3/4) ≈ 4.8651, independent of Ē.
#[test]
fn a01_short_time_value_universal_across_trajectories() {
    const TARGET: f64 = 4.8651;
    let t_bar = 1e-3;
    for e_bar in [0.25, 1.0, 4.0] {
        let rest = coherence_rest_closed_form(e_bar, t_bar).unwrap().c_over_g;
        let moving = coherence_velocity_closed_form(e_bar, t_bar, 0.8)
            .unwrap()
            .c_over_g;
        let accel = coherence_accelerated(e_bar, t_bar, 2.0, 1e-6)
            .unwrap()
            .c_over_g;
        for (tag, c) in [("rest", rest), ("v0.8", moving), ("a2", accel)] {
            assert!(
                (c - TARGET).abs() < 0.01,
                "{tag} at Ē={e_bar}: C/g={c}, want {TARGET}±0.01"
            );
        }
    }
}

#[test]
fn a02_rest_quadrature_matches_closed_form_on_grid() {
    let spec = grid(0.1, 5.0, 0.1, 5.0, 20, 20);
    let mut worst = 0.0f64;
    for &e in &spec.e_coords() {
        for &t in &spec.t_coords() {
            let closed = coherence_rest_closed_form(e, t).unwrap().c_over_g;
            let numeric = coherence_numeric(Trajectory::Rest, e, t, 1e-8)
                .unwrap()
                .c_over_g;
            worst = worst.max(rel(numeric, closed));
        }
    }
    assert!(worst < 1e-6, "worst relative deviation {worst}");
}

#[test]
fn a03_doppler_identity_for_inertial_motion() {
    for ups in [0.5, 0.8] {
        let traj = Trajectory::constant_velocity(ups).unwrap();
        for e in [0.5, 1.0, 2.0] {
            for t in [0.5, 1.0, 2.0] {
                let closed = coherence_velocity_closed_form(e, t, ups).unwrap().c_over_g;
                let numeric = coherence_numeric(traj, e, t, 1e-7).unwrap().c_over_g;
                assert!(
                    rel(numeric, closed) < 1e-5,
                    "(Ē={e}, T̄={t}, υ={ups}): numeric {numeric} vs closed {closed}"
                );
            }
        }
    }
}

// Swelling must show up in both expected quadrants: short windows at high
// energy and long windows at low energy.
#[test]
fn a04_swelling_regions_in_both_quadrants() {
    let spec = grid(0.1, 5.0, 0.1, 5.0, 80, 80);
    let rest = sweep_grid(Trajectory::Rest, &spec, 1e-5).unwrap();
    let es = spec.e_coords();
    let ts = spec.t_coords();
    for traj in [
        Trajectory::constant_velocity(0.8).unwrap(),
        Trajectory::uniform_acceleration(2.0).unwrap(),
    ] {
        let moving = sweep_grid(traj, &spec, 1e-5).unwrap();
        let d = diff_grid(&moving, &rest).unwrap();
        let report = swelling_regions(&d, 0.0).unwrap();
        let hi_e_short_t = report
            .components
            .iter()
            .any(|c| c.any_cell(&es, &ts, |e, t| e > 1.0 && t < 1.0));
        let lo_e_long_t = report
            .components
            .iter()
            .any(|c| c.any_cell(&es, &ts, |e, t| e < 1.0 && t > 1.0));
        assert!(
            hi_e_short_t,
            "{}: no swelling component with Ē > 1, T̄ < 1",
            traj.tag()
        );
        assert!(
            lo_e_long_t,
            "{}: no swelling component with Ē < 1, T̄ > 1",
            traj.tag()
        );
    }
}

#[test]
fn a05_acceleration_vanishing_limit_is_continuous() {
    let c0 = coherence_rest_closed_form(1.0, 1.0).unwrap().c_over_g;
    let ca = coherence_accelerated(1.0, 1.0, 1e-3, 1e-8).unwrap().c_over_g;
    assert!(rel(ca, c0) < 1e-3, "C_a={ca} vs C₀={c0}");
}

#[test]
fn a06_rest_coherence_decays_monotonically() {
    for e_bar in [0.25, 1.0, 4.0] {
        let mut prev = f64::INFINITY;
        for k in 0..100 {
            let t = 0.05 + (5.0 - 0.05) * k as f64 / 99.0;
            let c = coherence_rest_closed_form(e_bar, t).unwrap().c_over_g;
            assert!(c < prev, "Ē={e_bar}: not decreasing at T̄={t}");
            prev = c;
        }
    }
}

// At low energy the moving curves must cross above the rest curve
// somewhere, by more than the summed error bounds.
#[test]
fn a07_moving_detector_retains_more_coherence_somewhere() {
    let trajs = [
        Trajectory::Rest,
        Trajectory::constant_velocity(0.8).unwrap(),
        Trajectory::uniform_acceleration(2.0).unwrap(),
    ];
    let table = decoherence_curve(&trajs, 0.25, 0.5, 5.0, 46, 1e-6).unwrap();
    let crossed = (0..46).any(|s| {
        let rest = table.value(s, 0);
        let rest_err = table.errors[table.idx(s, 0)];
        [1, 2].iter().all(|&col| {
            let c = table.value(s, col);
            let err = table.errors[table.idx(s, col)];
            c - rest > rest_err + err
        })
    });
    assert!(crossed, "no sampled T̄ where both moving curves exceed rest");
}

#[test]
fn a08_special_functions_meet_accuracy_targets() {
    for &(z, want) in refdata::BESSEL_SCALED_QUARTER_REF.iter() {
        let got = bessel_i_scaled(-0.25, z).unwrap();
        assert!(rel(got, want) < 1e-10, "I₋₁/₄ at z={z}: {got} vs {want}");
    }
    for &(x, want) in refdata::GAMMA_REF.iter() {
        let got = gamma_real(x).unwrap();
        assert!(rel(got, want) < 1e-12, "Γ at x={x}: {got} vs {want}");
    }
}

#[test]
fn a09_sweeps_are_bit_identical_across_worker_counts() {
    let spec = grid(0.1, 5.0, 0.1, 5.0, 40, 40);
    let run = |workers: usize, traj: Trajectory| -> SweepGrid {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .unwrap()
            .install(|| sweep_grid(traj, &spec, 1e-5).unwrap())
    };
    for traj in [
        Trajectory::Rest,
        Trajectory::constant_velocity(0.8).unwrap(),
        Trajectory::uniform_acceleration(2.0).unwrap(),
    ] {
        let single = run(1, traj);
        let multi = run(4, traj);
        let same = single
            .values
            .iter()
            .zip(multi.values.iter())
            .all(|(a, b)| a.to_bits() == b.to_bits())
            && single
                .errors
                .iter()
                .zip(multi.errors.iter())
                .all(|(a, b)| a.to_bits() == b.to_bits())
            && single.meta.flagged == multi.meta.flagged;
        assert!(same, "{}: 1-worker and 4-worker sweeps differ", traj.tag());
    }
}

#[test]
fn a10_kernel_evenness_scale_invariance_and_origin_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let y = rng.gen_range(-1e4f64..1e4);
        let even_dev = (kernel_value(y) - kernel_value(-y)).abs() / kernel_value(y).abs();
        assert!(even_dev < 1e-8, "evenness broken at y={y}");

        let e = 10f64.powf(rng.gen_range(-2.0..2.0));
        let s = rng.gen_range(-50f64..50.0);
        let c = 10f64.powf(rng.gen_range(-1.0..1.0));
        let a = field_kernel(c * e, s).unwrap();
        let b = field_kernel(e, c * s).unwrap();
        assert!(rel(a, b) < 1e-8, "scale invariance broken at e={e}, s={s}, c={c}");
    }
    let g0 = gamma_real(0.25).unwrap() * 2f64.powf(0.25) / (2.0 * std::f64::consts::PI.sqrt());
    assert!((kernel_value(0.0) - g0).abs() < 1e-9);
    assert!((KERNEL_AT_ZERO - g0).abs() < 1e-9);
    assert!((KERNEL_AT_ZERO - 1.21628).abs() < 1e-5);
}
