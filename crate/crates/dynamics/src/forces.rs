//! Energies, forces and the force-gradient vector field.
//!
//! Fast and slow contributions are accumulated separately and combined with
//! a single addition per component, so `FULL` results equal the sum of the
//! `FAST` and `SLOW` results bit for bit.

use crate::error::DynamicsError;
use crate::model::{Split, Subset, SystemModel};
use crate::state::PhaseState;
use crate::vec;

/// Forces on every particle for one subset of the potential.
#[derive(Clone, Debug)]
pub struct ForceReport<const D: usize> {
    pub forces: Vec<[f64; D]>,
    pub which: Subset,
}

fn check_compatible<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
) -> Result<(), DynamicsError> {
    if state.len() != model.n() {
        return Err(DynamicsError::ModelStateMismatch {
            model_n: model.n(),
            state_n: state.len(),
        });
    }
    Ok(())
}

fn separation<const D: usize>(
    positions: &[[f64; D]],
    i: usize,
    j: usize,
) -> Result<([f64; D], f64), DynamicsError> {
    let d = vec::sub(positions[i], positions[j]);
    let r = vec::norm(d);
    if r == 0.0 {
        return Err(DynamicsError::CoincidentParticles { i, j });
    }
    Ok((d, r))
}

/// Total energy `T + V`: kinetic plus all pair potentials plus external
/// field terms.
pub fn total_energy<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
) -> Result<f64, DynamicsError> {
    Ok(state.kinetic_energy() + potential_energy(state, model, Subset::Full)?)
}

/// Potential energy of one subset. External field terms belong to the slow
/// part.
pub fn potential_energy<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Result<f64, DynamicsError> {
    check_compatible(state, model)?;
    let positions = state.positions();
    let mut fast = 0.0;
    let mut slow = 0.0;
    for ((i, j), pair) in model.pairs() {
        if !which.includes(pair.split) {
            continue;
        }
        let (_, r) = separation(positions, i, j)?;
        let phi = pair.potential.phi(r);
        match pair.split {
            Split::Fast => fast += phi,
            Split::Slow => slow += phi,
        }
    }
    if which.includes_external() {
        for (i, position) in positions.iter().enumerate() {
            if let Some(field) = model.external(i) {
                slow += field.u(position);
            }
        }
    }
    Ok(match which {
        Subset::Full => fast + slow,
        Subset::Fast => fast,
        Subset::Slow => slow,
    })
}

/// Per-split force accumulators: `(fast, slow)`.
type ForceParts<const D: usize> = (Vec<[f64; D]>, Vec<[f64; D]>);

/// Pair-interaction forces accumulated per split, before any external-field
/// contribution. Both accumulators always cover the same pair iteration, so
/// restricting the subset never reorders a sum.
fn pair_force_parts<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Result<ForceParts<D>, DynamicsError> {
    let n = state.len();
    let positions = state.positions();
    let mut fast = vec![[0.0; D]; n];
    let mut slow = vec![[0.0; D]; n];
    for ((i, j), pair) in model.pairs() {
        if !which.includes(pair.split) {
            continue;
        }
        let (d, r) = separation(positions, i, j)?;
        let s = pair.potential.dphi(r) / r;
        let acc = match pair.split {
            Split::Fast => &mut fast,
            Split::Slow => &mut slow,
        };
        for k in 0..D {
            let t = s * d[k];
            acc[i][k] -= t;
            acc[j][k] += t;
        }
    }
    Ok((fast, slow))
}

/// Forces `f_i = -sum_j phi'(r_ij) (r_i - r_j)/r_ij - du/dr_i` restricted
/// to the requested subset.
pub fn forces<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Result<ForceReport<D>, DynamicsError> {
    check_compatible(state, model)?;
    let (fast, mut slow) = pair_force_parts(state, model, which)?;
    if which.includes_external() {
        let positions = state.positions();
        for i in 0..state.len() {
            if let Some(field) = model.external(i) {
                let g = field.grad(&positions[i]);
                for k in 0..D {
                    slow[i][k] -= g[k];
                }
            }
        }
    }
    let forces = match which {
        Subset::Full => fast
            .iter()
            .zip(&slow)
            .map(|(a, b)| vec::add(*a, *b))
            .collect(),
        Subset::Fast => fast,
        Subset::Slow => slow,
    };
    Ok(ForceReport { forces, which })
}

/// Force-gradient vectors
///
/// ```text
/// g_i = -2 sum_j [ (w_i - w_j) phi'/r + (r_ij/r^3)(r phi'' - phi')(r_ij . (w_i - w_j)) ] + h_i
/// ```
///
/// where `w_i` is the pair part of the acceleration built from this subset's
/// forces only, `r_ij = r_i - r_j`, and `h_i = (2/m_i) H_u(r_i) grad u(r_i)`
/// is the external-field part (slow subset only).
pub fn force_gradient<const D: usize>(
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    which: Subset,
) -> Result<Vec<[f64; D]>, DynamicsError> {
    check_compatible(state, model)?;
    let n = state.len();
    let positions = state.positions();
    let masses = state.masses();

    let (fast, slow) = pair_force_parts(state, model, which)?;
    let mut w = vec![[0.0; D]; n];
    for i in 0..n {
        let f = match which {
            Subset::Full => vec::add(fast[i], slow[i]),
            Subset::Fast => fast[i],
            Subset::Slow => slow[i],
        };
        w[i] = vec::scale(1.0 / masses[i], f);
    }

    let mut g = vec![[0.0; D]; n];
    for ((i, j), pair) in model.pairs() {
        if !which.includes(pair.split) {
            continue;
        }
        let (d, r) = separation(positions, i, j)?;
        let dw = vec::sub(w[i], w[j]);
        let p1 = pair.potential.dphi(r);
        let p2 = pair.potential.d2phi(r);
        let radial = (r * p2 - p1) / (r * r * r);
        let proj = vec::dot(d, dw);
        for k in 0..D {
            let t = 2.0 * (dw[k] * p1 / r + d[k] * radial * proj);
            g[i][k] -= t;
            g[j][k] += t;
        }
    }

    if which.includes_external() {
        for i in 0..n {
            if let Some(field) = model.external(i) {
                let grad = field.grad(&positions[i]);
                let hess = field.hessian(&positions[i]);
                for alpha in 0..D {
                    let mut contraction = 0.0;
                    for beta in 0..D {
                        contraction += grad[beta] * hess[alpha][beta];
                    }
                    g[i][alpha] += 2.0 / masses[i] * contraction;
                }
            }
        }
    }

    Ok(g)
}
