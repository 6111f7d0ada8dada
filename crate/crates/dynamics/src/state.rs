//! Positions, velocities and masses of an N-particle system.

use crate::error::DynamicsError;

/// Phase-space point of `N` particles in `D` spatial dimensions.
///
/// Positions are in AU, velocities in AU/mo and masses in SU. Masses are
/// fixed at construction; positions and velocities are freely mutable so
/// integrators can advance the state in place.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseState<const D: usize> {
    positions: Vec<[f64; D]>,
    velocities: Vec<[f64; D]>,
    masses: Vec<f64>,
}

impl<const D: usize> PhaseState<D> {
    pub fn new(
        positions: Vec<[f64; D]>,
        velocities: Vec<[f64; D]>,
        masses: Vec<f64>,
    ) -> Result<Self, DynamicsError> {
        if positions.len() != velocities.len() || positions.len() != masses.len() {
            return Err(DynamicsError::MismatchedLengths {
                positions: positions.len(),
                velocities: velocities.len(),
                masses: masses.len(),
            });
        }
        for (index, &m) in masses.iter().enumerate() {
            if !m.is_finite() {
                return Err(DynamicsError::NonFinite {
                    field: "mass",
                    index,
                });
            }
            if m <= 0.0 {
                return Err(DynamicsError::NonPositiveMass { index, value: m });
            }
        }
        for (index, r) in positions.iter().enumerate() {
            if r.iter().any(|x| !x.is_finite()) {
                return Err(DynamicsError::NonFinite {
                    field: "position",
                    index,
                });
            }
        }
        for (index, v) in velocities.iter().enumerate() {
            if v.iter().any(|x| !x.is_finite()) {
                return Err(DynamicsError::NonFinite {
                    field: "velocity",
                    index,
                });
            }
        }
        Ok(Self {
            positions,
            velocities,
            masses,
        })
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    pub fn positions(&self) -> &[[f64; D]] {
        &self.positions
    }

    pub fn velocities(&self) -> &[[f64; D]] {
        &self.velocities
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn positions_mut(&mut self) -> &mut [[f64; D]] {
        &mut self.positions
    }

    pub fn velocities_mut(&mut self) -> &mut [[f64; D]] {
        &mut self.velocities
    }

    pub fn kinetic_energy(&self) -> f64 {
        self.masses
            .iter()
            .zip(&self.velocities)
            .map(|(&m, v)| 0.5 * m * crate::vec::dot(*v, *v))
            .sum()
    }

    pub fn total_momentum(&self) -> [f64; D] {
        let mut p = [0.0; D];
        for (&m, v) in self.masses.iter().zip(&self.velocities) {
            crate::vec::axpy(&mut p, m, *v);
        }
        p
    }

    pub fn negate_velocities(&mut self) {
        for v in &mut self.velocities {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }

    /// `r += tau * v` for every particle.
    pub fn drift(&mut self, tau: f64) {
        for (r, v) in self.positions.iter_mut().zip(&self.velocities) {
            for k in 0..D {
                r[k] += tau * v[k];
            }
        }
    }

    /// `v += duration * f / m` for every particle: apply an impulse given
    /// as a per-particle generalized force times a duration.
    pub fn apply_force_impulse(&mut self, duration: f64, forces: &[[f64; D]]) {
        for ((v, &m), f) in self
            .velocities
            .iter_mut()
            .zip(&self.masses)
            .zip(forces)
        {
            for k in 0..D {
                v[k] += duration * f[k] / m;
            }
        }
    }

    /// Largest absolute position component; the length scale used by the
    /// finite-difference oracles.
    pub fn position_scale(&self) -> f64 {
        crate::vec::max_abs(&self.positions)
    }
}
