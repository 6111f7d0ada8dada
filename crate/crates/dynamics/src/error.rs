use thiserror::Error;

/// Errors raised by state construction and force/energy evaluation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error(
        "state field lengths disagree: {positions} positions, {velocities} velocities, {masses} masses"
    )]
    MismatchedLengths {
        positions: usize,
        velocities: usize,
        masses: usize,
    },

    #[error("mass of particle {index} must be strictly positive, got {value}")]
    NonPositiveMass { index: usize, value: f64 },

    #[error("non-finite {field} entry for particle {index}")]
    NonFinite { field: &'static str, index: usize },

    #[error("particles {i} and {j} are coincident on an active pair")]
    CoincidentParticles { i: usize, j: usize },

    #[error("invalid pair ({i}, {j}): {reason}")]
    InvalidPair {
        i: usize,
        j: usize,
        reason: &'static str,
    },

    #[error("particle index {index} out of range for {n} particles")]
    ParticleOutOfRange { index: usize, n: usize },

    #[error("model describes {model_n} particles but state holds {state_n}")]
    ModelStateMismatch { model_n: usize, state_n: usize },
}
