use dynamics::DynamicsError;
use thiserror::Error;

/// Errors from scheme construction and validation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemeError {
    #[error("scheme `{name}` has no stages")]
    Empty { name: String },

    #[error("scheme `{name}`: drift coefficients sum to {got}, expected 0 or 1")]
    DriftSum { name: String, got: String },

    #[error("scheme `{name}`: {subset} kick coefficients sum to {got}, expected 0 or 1")]
    KickSum {
        name: String,
        subset: &'static str,
        got: String,
    },

    #[error("scheme `{name}` advances no coordinate: all stage sums are zero")]
    NoMotion { name: String },

    #[error("inner loop repetition count must be at least 1")]
    InvalidRepetitions,

    #[error("inner loop time fraction {got} outside (0, 1]")]
    InvalidTimeFraction { got: String },

    #[error("inner loops may not be nested")]
    NestedInnerLoop,

    #[error("lambda {got} outside (0, 1/2]")]
    InvalidLambda { got: String },

    #[error("scheme text parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

/// A dynamics failure while advancing a trajectory, tagged with the step at
/// which it occurred (step 0 is the initial sample).
#[derive(Debug, Error, Clone, PartialEq)]
#[error("integration failed at step {step}: {source}")]
pub struct IntegrateError {
    pub step: u64,
    #[source]
    pub source: DynamicsError,
}
