//! Exact-rational truncated noncommutative series over the symbols
//! `{T, V1, V2}`, and the shadow-Hamiltonian machinery built on it.
//!
//! The log of a splitting scheme's stage-exponential product is computed by
//! truncated `exp`/`log` series with arbitrary-precision rational
//! coefficients, grade by grade in powers of the step size. Claimed error
//! expansions are stated as rational combinations of nested commutators and
//! verified by exact subtraction: an empty residual is a proof at the
//! truncation order.

pub mod claims;
pub mod commutator;
pub mod error;
pub mod report;
pub mod scheme;
pub mod series;

pub use commutator::{CommutatorExpr, CommutatorTree};
pub use error::ShadowError;
pub use scheme::SymbolicScheme;
pub use series::{NcSeries, Symbol, Word};
