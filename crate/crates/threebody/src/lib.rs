//! Sun-Earth-Moon benchmark: system construction, energy-error series,
//! convergence-order estimation and the weighted cost-vs-accuracy study.

pub mod error;
pub mod experiments;
pub mod setup;

pub use error::LabError;
pub use experiments::{
    convergence_order, cost_accuracy, cost_at_error, energy_error_series, errors_decrease_with_h,
    fit_loglog_window, weighted_cost, ConvergenceReport, CostRow, CostWeights, EnergyErrorSeries,
};
pub use setup::{build_sun_earth_moon, ThreeBodySetup};
