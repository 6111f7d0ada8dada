//! Finite-difference oracle checks for the analytic force-gradient and the
//! global force identities, on randomized 2- and 3-body configurations.

use std::sync::Arc;

use dynamics::fd::force_jacobian_fd;
use dynamics::vec;
use dynamics::{
    force_gradient, forces, Gravity, HarmonicField, PhaseState, Split, Subset, SystemModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Defining contraction `g_{i,a} = 2 sum_{j,b} (f_{j,b}/m_j) df_{i,a}/dr_{j,b}`
/// with the Jacobian taken by central differences. Independent of the
/// closed-form route under test.
fn fd_contraction<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Vec<[f64; D]> {
    let n = state.len();
    let f = forces(state, model, which).unwrap().forces;
    let jac = force_jacobian_fd(state, model, which).unwrap();
    let masses = state.masses();
    let mut g = vec![[0.0; D]; n];
    for i in 0..n {
        for alpha in 0..D {
            let mut acc = 0.0;
            for j in 0..n {
                for beta in 0..D {
                    acc += f[j][beta] / masses[j] * jac[i * D + alpha][j * D + beta];
                }
            }
            g[i][alpha] = 2.0 * acc;
        }
    }
    g
}

fn random_system(rng: &mut ChaCha8Rng, n: usize) -> (PhaseState<2>, SystemModel<2>) {
    let positions: Vec<[f64; 2]> = loop {
        let candidate: Vec<[f64; 2]> = (0..n)
            .map(|_| [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)])
            .collect();
        let mut ok = true;
        for i in 0..n {
            for j in (i + 1)..n {
                if vec::norm(vec::sub(candidate[i], candidate[j])) < 0.4 {
                    ok = false;
                }
            }
        }
        if ok {
            break candidate;
        }
    };
    let velocities = (0..n)
        .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
        .collect();
    let masses = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    let state = PhaseState::new(positions, velocities, masses).unwrap();
    let mut model = SystemModel::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let split = if rng.gen_bool(0.5) {
                Split::Fast
            } else {
                Split::Slow
            };
            model
                .set_pair(i, j, Arc::new(Gravity::new(rng.gen_range(0.2..2.0))), split)
                .unwrap();
        }
    }
    (state, model)
}

fn rel_inf_err<const D: usize>(a: &[[f64; D]], b: &[[f64; D]]) -> f64 {
    let diff: Vec<[f64; D]> = a.iter().zip(b).map(|(x, y)| vec::sub(*x, *y)).collect();
    let scale = vec::max_abs(a).max(vec::max_abs(b));
    if scale == 0.0 {
        0.0
    } else {
        vec::max_abs(&diff) / scale
    }
}

#[test]
fn force_gradient_matches_fd_contraction_on_random_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for case in 0..24 {
        let n = if case % 2 == 0 { 2 } else { 3 };
        let (state, model) = random_system(&mut rng, n);
        for which in [Subset::Full, Subset::Fast, Subset::Slow] {
            let analytic = force_gradient(&state, &model, which).unwrap();
            let oracle = fd_contraction(&state, &model, which);
            assert!(
                rel_inf_err(&analytic, &oracle) <= 1e-6,
                "case {case} subset {which}: rel err {}",
                rel_inf_err(&analytic, &oracle)
            );
        }
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn force_gradient_matches_fd_contraction_in_harmonic_field() {
    let k = 1.1;
    let r = [0.8, -0.6];
    let state = PhaseState::<2>::new(vec![r], vec![[0.2, 0.1]], vec![1.0]).unwrap();
    let mut model = SystemModel::new(1);
    model.set_external_all(Arc::new(HarmonicField { stiffness: k }));
    let analytic = force_gradient(&state, &model, Subset::Full).unwrap();
    let oracle = fd_contraction(&state, &model, Subset::Full);
    assert!(rel_inf_err(&analytic, &oracle) <= 1e-6);
    for a in 0..2 {
        assert!((analytic[0][a] - 2.0 * k * k * r[a]).abs() <= 1e-12);
    }
}

#[test]
fn newtons_third_law_on_random_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let (state, model) = random_system(&mut rng, 3);
        let f = forces(&state, &model, Subset::Full).unwrap().forces;
        let mut sum = [0.0; 2];
        for fi in &f {
            sum = vec::add(sum, *fi);
        }
        assert!(vec::max_abs(&[sum]) <= 1e-13 * vec::max_abs(&f));
    }
}

#[test]
fn force_gradient_translation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (state, model) = random_system(&mut rng, 3);
        let g = force_gradient(&state, &model, Subset::Full).unwrap();
        let mut sum = [0.0; 2];
        for gi in &g {
            sum = vec::add(sum, *gi);
        }
        assert!(vec::max_abs(&[sum]) <= 1e-10 * vec::max_abs(&g));
    }
}

#[test]
fn subset_additivity_on_random_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let (state, model) = random_system(&mut rng, 3);
        let full = forces(&state, &model, Subset::Full).unwrap().forces;
        let fast = forces(&state, &model, Subset::Fast).unwrap().forces;
        let slow = forces(&state, &model, Subset::Slow).unwrap().forces;
        for i in 0..3 {
            for k in 0..2 {
                assert_eq!(full[i][k], fast[i][k] + slow[i][k]);
            }
        }
    }
}
