//! Structural integrator properties: time reversibility, momentum
//! conservation, the symplecticity probe and the leap-frog order check.

use std::sync::Arc;

use dynamics::{total_energy, Gravity, PhaseState, Split, SystemModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitting::{builders, Propagator, SplittingScheme};

/// Equal-mass pair on a circular orbit: coeff 1, separation 1, so each body
/// moves at sqrt(2)/2.
fn two_body_circular() -> (PhaseState<2>, SystemModel<2>) {
    let v = 2.0_f64.sqrt() / 2.0;
    let state = PhaseState::new(
        vec![[-0.5, 0.0], [0.5, 0.0]],
        vec![[0.0, -v], [0.0, v]],
        vec![1.0, 1.0],
    )
    .unwrap();
    let mut model = SystemModel::new(2);
    model
        .set_pair(0, 1, Arc::new(Gravity::new(1.0)), Split::Fast)
        .unwrap();
    (state, model)
}

fn random_three_body(rng: &mut ChaCha8Rng) -> (PhaseState<2>, SystemModel<2>) {
    let positions = vec![
        [0.0, 0.0],
        [1.0 + rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1)],
        [rng.gen_range(-0.1..0.1) - 0.5, 1.0 + rng.gen_range(-0.1..0.1)],
    ];
    let velocities = (0..3)
        .map(|_| [rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)])
        .collect();
    let masses = (0..3).map(|_| rng.gen_range(0.5..1.5)).collect();
    let state = PhaseState::new(positions, velocities, masses).unwrap();
    let mut model = SystemModel::new(3);
    for (i, j, split) in [(0, 1, Split::Slow), (0, 2, Split::Slow), (1, 2, Split::Fast)] {
        model
            .set_pair(i, j, Arc::new(Gravity::new(rng.gen_range(0.3..1.0))), split)
            .unwrap();
    }
    (state, model)
}

fn rel_inf_distance<const D: usize>(a: &PhaseState<D>, b: &PhaseState<D>) -> f64 {
    let mut err: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..a.len() {
        for k in 0..D {
            err = err.max((a.positions()[i][k] - b.positions()[i][k]).abs());
            err = err.max((a.velocities()[i][k] - b.velocities()[i][k]).abs());
            scale = scale.max(a.positions()[i][k].abs());
            scale = scale.max(a.velocities()[i][k].abs());
        }
    }
    err / scale
}

#[test]
fn reversibility_round_trip_over_100_steps() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for scheme in builders::all_builders(3) {
        let (initial, model) = random_three_body(&mut rng);
        let mut state = initial.clone();
        let mut prop = Propagator::new(&model);
        for _ in 0..100 {
            prop.step(&scheme, &mut state, 0.01).unwrap();
        }
        state.negate_velocities();
        for _ in 0..100 {
            prop.step(&scheme, &mut state, 0.01).unwrap();
        }
        state.negate_velocities();
        let err = rel_inf_distance(&state, &initial);
        assert!(err <= 1e-9, "{}: reversibility error {err:.3e}", scheme.name());
    }
}

#[test]
fn one_step_reversal_for_palindromic_schemes() {
    let (initial, model) = two_body_circular();
    for scheme in builders::all_builders(2) {
        let mut state = initial.clone();
        let mut prop = Propagator::new(&model);
        prop.step(&scheme, &mut state, 0.05).unwrap();
        state.negate_velocities();
        prop.step(&scheme, &mut state, 0.05).unwrap();
        state.negate_velocities();
        let err = rel_inf_distance(&state, &initial);
        assert!(err <= 1e-9, "{}: one-step reversal {err:.3e}", scheme.name());
    }
}

#[test]
fn momentum_conserved_over_1000_steps() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for scheme in builders::all_builders(2) {
        let (mut state, model) = random_three_body(&mut rng);
        let p0 = state.total_momentum();
        let p0_scale = p0.iter().fold(0.0_f64, |m, &x| m.max(x.abs()));
        assert!(p0_scale > 1e-3, "fixture should carry net momentum");
        let mut prop = Propagator::new(&model);
        for _ in 0..1000 {
            prop.step(&scheme, &mut state, 0.002).unwrap();
        }
        let p1 = state.total_momentum();
        for k in 0..2 {
            assert!(
                (p1[k] - p0[k]).abs() <= 1e-12 * p0_scale,
                "{}: momentum drift {:.3e}",
                scheme.name(),
                (p1[k] - p0[k]).abs() / p0_scale
            );
        }
    }
}

/// One-step Jacobian in (q, p) coordinates by central differences.
fn one_step_jacobian<const D: usize>(
    scheme: &SplittingScheme,
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    h: f64,
    fd_step: f64,
) -> Vec<Vec<f64>> {
    let n = state.len();
    let dim = 2 * n * D;
    let read = |s: &PhaseState<D>| -> Vec<f64> {
        let mut z = Vec::with_capacity(dim);
        for r in s.positions() {
            z.extend_from_slice(r);
        }
        for (i, v) in s.velocities().iter().enumerate() {
            for k in 0..D {
                z.push(s.masses()[i] * v[k]);
            }
        }
        z
    };
    let perturbed = |coord: usize, delta: f64| -> Vec<f64> {
        let mut s = state.clone();
        if coord < n * D {
            s.positions_mut()[coord / D][coord % D] += delta;
        } else {
            let c = coord - n * D;
            let m = s.masses()[c / D];
            s.velocities_mut()[c / D][c % D] += delta / m;
        }
        let mut prop = Propagator::new(model);
        prop.step(scheme, &mut s, h).unwrap();
        read(&s)
    };
    let mut jac = vec![vec![0.0; dim]; dim];
    for col in 0..dim {
        let plus = perturbed(col, fd_step);
        let minus = perturbed(col, -fd_step);
        for (row, jac_row) in jac.iter_mut().enumerate() {
            jac_row[col] = (plus[row] - minus[row]) / (2.0 * fd_step);
        }
    }
    jac
}

/// Largest entry of `J^T Omega J - Omega` for the canonical two-form.
fn symplectic_residual(jac: &[Vec<f64>]) -> f64 {
    let dim = jac.len();
    let half = dim / 2;
    let omega = |r: usize, c: usize| -> f64 {
        if r < half && c == r + half {
            1.0
        } else if r >= half && c == r - half {
            -1.0
        } else {
            0.0
        }
    };
    let mut worst: f64 = 0.0;
    for r in 0..dim {
        for c in 0..dim {
            // (J^T Omega J)[r][c] = sum_ab J[a][r] Omega[a][b] J[b][c]
            let mut acc = 0.0;
            for a in 0..dim {
                let b = if a < half { a + half } else { a - half };
                acc += jac[a][r] * omega(a, b) * jac[b][c];
            }
            worst = worst.max((acc - omega(r, c)).abs());
        }
    }
    worst
}

#[test]
fn one_step_jacobian_is_symplectic() {
    let (state, model) = two_body_circular();
    for scheme in builders::all_builders(2) {
        let jac = one_step_jacobian(&scheme, &state, &model, 0.01, 1e-6);
        let residual = symplectic_residual(&jac);
        assert!(
            residual <= 1e-5,
            "{}: symplectic residual {residual:.3e}",
            scheme.name()
        );
    }
}

/// Eccentric bound pair. A circular orbit would be too forgiving here: the
/// quadratic error term is rotation invariant and cancels along the orbit.
fn two_body_eccentric() -> (PhaseState<2>, SystemModel<2>) {
    let (mut state, model) = two_body_circular();
    for v in state.velocities_mut() {
        v[0] *= 1.25;
        v[1] *= 1.25;
    }
    (state, model)
}

#[test]
fn leapfrog_energy_error_scales_quadratically() {
    let (state0, model) = two_body_eccentric();
    let scheme = builders::leapfrog();
    let t_end = 2.0_f64;
    let mut errors = Vec::new();
    for &h in &[0.02_f64, 0.01, 0.005] {
        let steps = (t_end / h).round() as u64;
        let mut state = state0.clone();
        let mut prop = Propagator::new(&model);
        let trajectory = prop
            .integrate(&scheme, &mut state, h, steps, 1, false)
            .unwrap();
        errors.push(trajectory.max_rel_energy_error());
    }
    for pair in errors.windows(2) {
        let slope = (pair[0] / pair[1]).log2();
        assert!(
            (slope - 2.0).abs() <= 0.3,
            "halving slope {slope:.3} outside 2 +/- 0.3"
        );
    }
}

#[test]
fn identical_runs_are_bit_identical() {
    let (state0, model) = two_body_circular();
    let scheme = builders::nested_force_gradient(5).unwrap();
    let run = || {
        let mut state = state0.clone();
        let mut prop = Propagator::new(&model);
        let t = prop
            .integrate(&scheme, &mut state, 0.01, 200, 10, true)
            .unwrap();
        (state, t, prop.counters())
    };
    let (s1, t1, c1) = run();
    let (s2, t2, c2) = run();
    assert_eq!(s1, s2);
    assert_eq!(t1, t2);
    assert_eq!(c1, c2);
}

#[test]
fn energy_stays_bounded_on_circular_orbit() {
    let (mut state, model) = two_body_circular();
    let mut prop = Propagator::new(&model);
    let trajectory = prop
        .integrate(&builders::leapfrog(), &mut state, 0.01, 5000, 1, false)
        .unwrap();
    let e0 = trajectory.initial_energy;
    assert!((total_energy(&state, &model).unwrap() - e0).abs() / e0.abs() < 1e-3);
    assert!(trajectory.max_rel_energy_error() < 1e-3);
}

#[test]
fn integrate_error_carries_the_failing_step() {
    // Two bodies drifting into exact coincidence after one unit drift.
    let state = PhaseState::new(
        vec![[0.0, 0.0], [1.0, 0.0]],
        vec![[0.5, 0.0], [-0.5, 0.0]],
        vec![1.0, 1.0],
    )
    .unwrap();
    let mut model = SystemModel::new(2);
    model
        .set_pair(0, 1, Arc::new(Gravity::new(1.0)), Split::Slow)
        .unwrap();
    let free_flight = splitting::SplittingScheme::new(
        "free-flight",
        vec![splitting::Stage::drift(num_rational::Rational64::from_integer(1))],
        1,
    )
    .unwrap();
    let mut working = state;
    let mut prop = Propagator::new(&model);
    let err = prop
        .integrate(&free_flight, &mut working, 1.0, 3, 1, false)
        .unwrap_err();
    assert_eq!(err.step, 1);
    assert!(err.to_string().contains("step 1"), "{err}");
}

#[test]
fn concurrent_integrations_match_serial_runs() {
    let (state0, model) = two_body_circular();
    let scheme = builders::omelyan5_fg();
    let serial: Vec<PhaseState<2>> = (1..=4)
        .map(|k| {
            let mut state = state0.clone();
            let mut prop = Propagator::new(&model);
            prop.integrate(&scheme, &mut state, 0.01 * k as f64, 50, 0, false)
                .unwrap();
            state
        })
        .collect();
    let parallel: Vec<PhaseState<2>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=4)
            .map(|k| {
                let state0 = &state0;
                let model = &model;
                let scheme = &scheme;
                scope.spawn(move || {
                    let mut state = state0.clone();
                    let mut prop = Propagator::new(model);
                    prop.integrate(scheme, &mut state, 0.01 * k as f64, 50, 0, false)
                        .unwrap();
                    state
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(serial, parallel);
}
