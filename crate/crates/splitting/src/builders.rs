//! Builders for the named schemes.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::SchemeError;
use crate::scheme::{SplittingScheme, Stage};
use dynamics::Subset;

fn r(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

/// Kick-drift-kick leap-frog on the full potential.
pub fn leapfrog() -> SplittingScheme {
    SplittingScheme::new(
        "leapfrog",
        vec![
            Stage::kick(Subset::Full, r(1, 2), Rational64::zero()),
            Stage::drift(r(1, 1)),
            Stage::kick(Subset::Full, r(1, 2), Rational64::zero()),
        ],
        2,
    )
    .expect("fixed stage list")
}

/// Drift-kick-drift leap-frog, the position-outside orientation.
pub fn leapfrog_drift_outside() -> SplittingScheme {
    SplittingScheme::new(
        "leapfrog-dkd",
        vec![
            Stage::drift(r(1, 2)),
            Stage::kick(Subset::Full, r(1, 1), Rational64::zero()),
            Stage::drift(r(1, 2)),
        ],
        2,
    )
    .expect("fixed stage list")
}

/// Second-order five-stage scheme with kick coefficients {1/6, 2/3, 1/6}.
pub fn omelyan5() -> SplittingScheme {
    SplittingScheme::new(
        "omelyan5",
        vec![
            Stage::kick(Subset::Full, r(1, 6), Rational64::zero()),
            Stage::drift(r(1, 2)),
            Stage::kick(Subset::Full, r(2, 3), Rational64::zero()),
            Stage::drift(r(1, 2)),
            Stage::kick(Subset::Full, r(1, 6), Rational64::zero()),
        ],
        2,
    )
    .expect("fixed stage list")
}

/// The five-stage scheme with the force-gradient term `(1/72) h^3 C` added
/// to the middle kick, which lifts it to fourth order.
pub fn omelyan5_fg() -> SplittingScheme {
    SplittingScheme::new(
        "omelyan5-fg",
        vec![
            Stage::kick(Subset::Full, r(1, 6), Rational64::zero()),
            Stage::drift(r(1, 2)),
            Stage::kick(Subset::Full, r(2, 3), r(1, 72)),
            Stage::drift(r(1, 2)),
            Stage::kick(Subset::Full, r(1, 6), Rational64::zero()),
        ],
        4,
    )
    .expect("fixed stage list")
}

/// Kick-drift-kick leap-frog on the fast potential, used as the inner
/// integrator of every nested scheme.
fn inner_fast_leapfrog() -> SplittingScheme {
    SplittingScheme::new(
        "inner-fast-leapfrog",
        vec![
            Stage::kick(Subset::Fast, r(1, 2), Rational64::zero()),
            Stage::drift(r(1, 1)),
            Stage::kick(Subset::Fast, r(1, 2), Rational64::zero()),
        ],
        2,
    )
    .expect("fixed stage list")
}

fn check_m(m: u32) -> Result<(), SchemeError> {
    if m == 0 {
        Err(SchemeError::InvalidRepetitions)
    } else {
        Ok(())
    }
}

/// Nested leap-frog: slow half-kicks around `M` fast leap-frog substeps
/// covering the whole step.
pub fn nested_leapfrog(m: u32) -> Result<SplittingScheme, SchemeError> {
    check_m(m)?;
    SplittingScheme::new(
        format!("nested-leapfrog(M={m})"),
        vec![
            Stage::kick(Subset::Slow, r(1, 2), Rational64::zero()),
            Stage::InnerLoop {
                inner: inner_fast_leapfrog(),
                repetitions: m,
                time_fraction: r(1, 1),
            },
            Stage::kick(Subset::Slow, r(1, 2), Rational64::zero()),
        ],
        2,
    )
}

/// Five-stage nested integrator: slow kicks with coefficients
/// {lambda, 1-2lambda, lambda} interleaved with two half-step inner loops.
pub fn alike5_nested(lambda: Rational64, m: u32) -> Result<SplittingScheme, SchemeError> {
    check_m(m)?;
    if lambda <= Rational64::zero() || lambda > r(1, 2) {
        return Err(SchemeError::InvalidLambda {
            got: lambda.to_string(),
        });
    }
    let middle = Rational64::from_integer(1) - lambda - lambda;
    SplittingScheme::new(
        format!("alike5(lambda={lambda},M={m})"),
        vec![
            Stage::kick(Subset::Slow, lambda, Rational64::zero()),
            Stage::InnerLoop {
                inner: inner_fast_leapfrog(),
                repetitions: m,
                time_fraction: r(1, 2),
            },
            Stage::kick(Subset::Slow, middle, Rational64::zero()),
            Stage::InnerLoop {
                inner: inner_fast_leapfrog(),
                repetitions: m,
                time_fraction: r(1, 2),
            },
            Stage::kick(Subset::Slow, lambda, Rational64::zero()),
        ],
        2,
    )
}

/// The nested force-gradient scheme: `alike5_nested(1/6, M)` with the slow
/// force-gradient term `(1/72) h^3 [V2,[T,V2]]` added to the middle kick.
pub fn nested_force_gradient(m: u32) -> Result<SplittingScheme, SchemeError> {
    check_m(m)?;
    SplittingScheme::new(
        format!("nested-fg(M={m})"),
        vec![
            Stage::kick(Subset::Slow, r(1, 6), Rational64::zero()),
            Stage::InnerLoop {
                inner: inner_fast_leapfrog(),
                repetitions: m,
                time_fraction: r(1, 2),
            },
            Stage::kick(Subset::Slow, r(2, 3), r(1, 72)),
            Stage::InnerLoop {
                inner: inner_fast_leapfrog(),
                repetitions: m,
                time_fraction: r(1, 2),
            },
            Stage::kick(Subset::Slow, r(1, 6), Rational64::zero()),
        ],
        4,
    )
}

/// Every builder scheme at the given nesting depth, for property sweeps.
pub fn all_builders(m: u32) -> Vec<SplittingScheme> {
    vec![
        leapfrog(),
        leapfrog_drift_outside(),
        omelyan5(),
        omelyan5_fg(),
        nested_leapfrog(m).expect("m >= 1"),
        alike5_nested(r(1, 6), m).expect("valid lambda"),
        nested_force_gradient(m).expect("m >= 1"),
    ]
}
