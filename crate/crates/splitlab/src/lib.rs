//! Command-line front end: experiment configuration, execution and
//! CSV / exact-rational report emission.

pub mod config;
pub mod csvfmt;
pub mod run;
pub mod schemes;

pub use config::{Experiment, RunConfig, WeightsConfig};
pub use run::execute;
