//! Finite-difference oracles for the analytic derivatives.
//!
//! These routines exist to check the library's closed-form expressions and
//! are not used on any integration path. Steps are fixed so that tolerances
//! quoted in tests are reproducible: `1e-5 * r` for radial potentials,
//! `1e-5 * max(1, |r|)` for fields, and `1e-6 * max(1, position scale)` for
//! the force Jacobian.

use crate::error::DynamicsError;
use crate::forces::forces;
use crate::model::{Subset, SystemModel};
use crate::potential::{ExternalField, PairPotential};
use crate::state::PhaseState;

/// Central-difference Jacobian of the subset forces,
/// `J[(i*D + alpha)][(j*D + beta)] = d f_{i,alpha} / d r_{j,beta}`.
pub fn force_jacobian_fd<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Result<Vec<Vec<f64>>, DynamicsError> {
    let n = state.len();
    let dim = n * D;
    let h = 1e-6 * state.position_scale().max(1.0);
    let mut jac = vec![vec![0.0; dim]; dim];
    let mut probe = state.clone();
    for j in 0..n {
        for beta in 0..D {
            let original = probe.positions()[j][beta];
            probe.positions_mut()[j][beta] = original + h;
            let plus = forces(&probe, model, which)?.forces;
            probe.positions_mut()[j][beta] = original - h;
            let minus = forces(&probe, model, which)?.forces;
            probe.positions_mut()[j][beta] = original;
            for i in 0..n {
                for alpha in 0..D {
                    jac[i * D + alpha][j * D + beta] =
                        (plus[i][alpha] - minus[i][alpha]) / (2.0 * h);
                }
            }
        }
    }
    Ok(jac)
}

/// Worst relative error of `dphi`/`d2phi` against central differences of
/// `phi` over the sampled radii.
pub fn pair_potential_consistency(potential: &dyn PairPotential, radii: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for &r in radii {
        let h = 1e-5 * r;
        let fd1 = (potential.phi(r + h) - potential.phi(r - h)) / (2.0 * h);
        let fd2 = (potential.dphi(r + h) - potential.dphi(r - h)) / (2.0 * h);
        worst = worst.max(rel_err(potential.dphi(r), fd1));
        worst = worst.max(rel_err(potential.d2phi(r), fd2));
    }
    worst
}

/// Worst relative error of `grad`/`hessian` against central differences of
/// `u`, plus the Hessian asymmetry, over the sampled points.
pub fn external_field_consistency<const D: usize>(
    field: &dyn ExternalField<D>,
    points: &[[f64; D]],
) -> f64 {
    let mut worst: f64 = 0.0;
    for point in points {
        let scale = point.iter().fold(1.0_f64, |m, &x| m.max(x.abs()));
        let h = 1e-5 * scale;
        let grad = field.grad(point);
        let hess = field.hessian(point);
        for a in 0..D {
            let mut plus = *point;
            plus[a] += h;
            let mut minus = *point;
            minus[a] -= h;
            let fd_grad = (field.u(&plus) - field.u(&minus)) / (2.0 * h);
            worst = worst.max(rel_err(grad[a], fd_grad));
            let gp = field.grad(&plus);
            let gm = field.grad(&minus);
            for b in 0..D {
                let fd_hess = (gp[b] - gm[b]) / (2.0 * h);
                worst = worst.max(rel_err(hess[b][a], fd_hess));
                worst = worst.max(rel_err(hess[a][b], hess[b][a]));
            }
        }
    }
    worst
}

fn rel_err(analytic: f64, reference: f64) -> f64 {
    let denom = analytic.abs().max(reference.abs());
    if denom == 0.0 {
        0.0
    } else {
        (analytic - reference).abs() / denom
    }
}
