//! Stage-sequence representation of splitting integrators.
//!
//! A scheme is an ordered list of drifts, kicks (optionally carrying a
//! force-gradient term) and single-level inner loops for multirate
//! composition. Stage coefficients are exact rationals; they are converted
//! to floating point only when a step is applied. Builders construct the
//! named schemes used throughout: leap-frog, the 5-stage method and its
//! force-gradient variant, and the nested multirate family.

pub mod builders;
pub mod error;
pub mod propagate;
pub mod scheme;
pub mod text;

pub use error::{IntegrateError, SchemeError};
pub use propagate::{EvalCounters, Propagator, Trajectory};
pub use scheme::{SplittingScheme, Stage};

pub use dynamics::{Split, Subset};
