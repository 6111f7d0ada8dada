//! Sun-Earth-Moon system in AU / SU / mo units.

use std::sync::Arc;

use dynamics::{Gravity, PhaseState, Split, SystemModel};

/// Physical parameters of the Sun-Earth-Moon problem.
///
/// Initial speeds are applied along +x, perpendicular to the +y position
/// axis, giving the near-circular orbits the listed speeds imply.
#[derive(Clone, Copy, Debug)]
pub struct ThreeBodySetup {
    /// Gravitational constant, AU^3 / (SU mo^2).
    pub g: f64,
    /// Masses of Sun, Earth, Moon in SU.
    pub masses: [f64; 3],
    /// Initial positions in AU.
    pub positions: [[f64; 2]; 3],
    /// Initial speeds in AU/mo, directed along +x.
    pub speeds: [f64; 3],
}

impl Default for ThreeBodySetup {
    fn default() -> Self {
        Self {
            g: 0.2662,
            masses: [1.0, 3.0e-6, 0.0369e-6],
            positions: [[0.0, 0.0], [0.0, 1.0167138], [0.0, 1.0191138]],
            speeds: [0.0, 0.5160, 0.5337],
        }
    }
}

impl ThreeBodySetup {
    /// Build the phase state and interaction model. The Earth-Moon pair is
    /// the fast part `V1` (lunar month timescale); the two Sun pairs are the
    /// slow part `V2` (annual timescale).
    pub fn build(&self) -> (PhaseState<2>, SystemModel<2>) {
        let velocities = self.speeds.iter().map(|&s| [s, 0.0]).collect();
        let state = PhaseState::new(
            self.positions.to_vec(),
            velocities,
            self.masses.to_vec(),
        )
        .expect("parameters are finite and positive");
        let mut model = SystemModel::new(3);
        for (i, j, split) in [
            (0usize, 1usize, Split::Slow),
            (0, 2, Split::Slow),
            (1, 2, Split::Fast),
        ] {
            let coeff = self.g * self.masses[i] * self.masses[j];
            model
                .set_pair(i, j, Arc::new(Gravity::new(coeff)), split)
                .expect("indices in range");
        }
        (state, model)
    }
}

/// The default Sun-Earth-Moon system.
pub fn build_sun_earth_moon() -> (PhaseState<2>, SystemModel<2>) {
    ThreeBodySetup::default().build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sun_starts_at_origin_at_rest() {
        let (state, _) = build_sun_earth_moon();
        assert_eq!(state.positions()[0], [0.0, 0.0]);
        assert_eq!(state.velocities()[0], [0.0, 0.0]);
    }

    #[test]
    fn earth_moon_separation() {
        let (state, _) = build_sun_earth_moon();
        let sep = (state.positions()[2][1] - state.positions()[1][1]).abs();
        assert!((sep - 0.0024).abs() < 1e-15);
    }

    #[test]
    fn split_assignment() {
        let (_, model) = build_sun_earth_moon();
        assert_eq!(model.pair(1, 2).unwrap().split, Split::Fast);
        assert_eq!(model.pair(0, 1).unwrap().split, Split::Slow);
        assert_eq!(model.pair(0, 2).unwrap().split, Split::Slow);
        assert!(!model.has_external());
    }
}
