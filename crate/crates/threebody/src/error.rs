use splitting::IntegrateError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LabError {
    #[error("step {h} does not divide t_end {t_end} within rounding")]
    NonIntegralSteps { h: f64, t_end: f64 },

    #[error("step grid needs at least {needed} values, got {got}")]
    GridTooSmall { needed: usize, got: usize },

    #[error("step grid must be sorted in descending order")]
    GridNotDescending,

    #[error("non-positive step size {h}")]
    NonPositiveStep { h: f64 },

    #[error(transparent)]
    Integrate(#[from] IntegrateError),
}
