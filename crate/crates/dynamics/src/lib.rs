//! Physical state, potentials, forces and force-gradient vector fields for
//! N-particle systems with pairwise interactions and optional external fields.
//!
//! The potential is split into a fast part `V1` and a slow part `V2` by
//! labelling every interacting pair; all force-type evaluations can be
//! restricted to either part or run on the full potential. Finite-difference
//! oracles for the analytic derivatives live in [`fd`].

pub mod error;
pub mod fd;
pub mod forces;
pub mod model;
pub mod potential;
pub mod state;
pub mod vec;

pub use error::DynamicsError;
pub use forces::{force_gradient, forces, potential_energy, total_energy, ForceReport};
pub use model::{PairInteraction, Split, Subset, SystemModel};
pub use potential::{ExternalField, Gravity, HarmonicField, PairPotential, Spring};
pub use state::PhaseState;
