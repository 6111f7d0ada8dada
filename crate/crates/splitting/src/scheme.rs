//! Scheme and stage types with exact-rational coefficients.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::SchemeError;
use dynamics::Subset;

/// One factor of a splitting-scheme product.
///
/// A `Kick` advances velocities by `b*h` times the subset acceleration plus
/// `c*h^3` times the subset force-gradient field. An `InnerLoop` applies its
/// inner scheme `repetitions` times with step `time_fraction * h / repetitions`.
#[derive(Clone, Debug, PartialEq)]
pub enum Stage {
    Drift {
        a: Rational64,
    },
    Kick {
        subset: Subset,
        b: Rational64,
        c: Rational64,
    },
    InnerLoop {
        inner: SplittingScheme,
        repetitions: u32,
        time_fraction: Rational64,
    },
}

impl Stage {
    pub fn drift(a: Rational64) -> Self {
        Stage::Drift { a }
    }

    pub fn kick(subset: Subset, b: Rational64, c: Rational64) -> Self {
        Stage::Kick { subset, b, c }
    }

    fn reversed(&self) -> Stage {
        match self {
            Stage::InnerLoop {
                inner,
                repetitions,
                time_fraction,
            } => Stage::InnerLoop {
                inner: inner.reversed(),
                repetitions: *repetitions,
                time_fraction: *time_fraction,
            },
            other => other.clone(),
        }
    }
}

/// An ordered stage list with a name and the order of accuracy it is
/// expected to deliver.
///
/// Equality is structural: two schemes are equal when their stage lists
/// are; the name and declared order are metadata.
#[derive(Clone, Debug)]
pub struct SplittingScheme {
    name: String,
    stages: Vec<Stage>,
    declared_order: u32,
}

impl PartialEq for SplittingScheme {
    fn eq(&self, other: &Self) -> bool {
        self.stages == other.stages
    }
}

/// Effective coefficient totals of a stage list, with inner loops weighted
/// by their time fraction. A `FULL` kick counts toward both potential parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StageTotals {
    pub drift: Rational64,
    pub fast_kick: Rational64,
    pub slow_kick: Rational64,
}

fn totals(stages: &[Stage]) -> StageTotals {
    let mut t = StageTotals {
        drift: Rational64::zero(),
        fast_kick: Rational64::zero(),
        slow_kick: Rational64::zero(),
    };
    for stage in stages {
        match stage {
            Stage::Drift { a } => t.drift += a,
            Stage::Kick { subset, b, .. } => match subset {
                Subset::Full => {
                    t.fast_kick += b;
                    t.slow_kick += b;
                }
                Subset::Fast => t.fast_kick += b,
                Subset::Slow => t.slow_kick += b,
            },
            Stage::InnerLoop {
                inner,
                time_fraction,
                ..
            } => {
                let inner_t = totals(&inner.stages);
                t.drift += time_fraction * inner_t.drift;
                t.fast_kick += time_fraction * inner_t.fast_kick;
                t.slow_kick += time_fraction * inner_t.slow_kick;
            }
        }
    }
    t
}

impl SplittingScheme {
    /// Validate and build a scheme. Each coefficient total (drift, fast
    /// kicks, slow kicks) must be exactly 0 or 1: a part the scheme never
    /// touches sums to 0, a part it advances must be advanced by exactly
    /// one unit of time per step.
    pub fn new(
        name: impl Into<String>,
        stages: Vec<Stage>,
        declared_order: u32,
    ) -> Result<Self, SchemeError> {
        let name = name.into();
        if stages.is_empty() {
            return Err(SchemeError::Empty { name });
        }
        for stage in &stages {
            if let Stage::InnerLoop {
                inner,
                repetitions,
                time_fraction,
            } = stage
            {
                if *repetitions == 0 {
                    return Err(SchemeError::InvalidRepetitions);
                }
                if *time_fraction <= Rational64::zero() || *time_fraction > Rational64::one() {
                    return Err(SchemeError::InvalidTimeFraction {
                        got: time_fraction.to_string(),
                    });
                }
                if inner
                    .stages
                    .iter()
                    .any(|s| matches!(s, Stage::InnerLoop { .. }))
                {
                    return Err(SchemeError::NestedInnerLoop);
                }
            }
        }
        let t = totals(&stages);
        let ok = |x: Rational64| x.is_zero() || x.is_one();
        if !ok(t.drift) {
            return Err(SchemeError::DriftSum {
                name,
                got: t.drift.to_string(),
            });
        }
        if !ok(t.fast_kick) {
            return Err(SchemeError::KickSum {
                name,
                subset: "fast",
                got: t.fast_kick.to_string(),
            });
        }
        if !ok(t.slow_kick) {
            return Err(SchemeError::KickSum {
                name,
                subset: "slow",
                got: t.slow_kick.to_string(),
            });
        }
        if t.drift.is_zero() && t.fast_kick.is_zero() && t.slow_kick.is_zero() {
            return Err(SchemeError::NoMotion { name });
        }
        Ok(Self {
            name,
            stages,
            declared_order,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn declared_order(&self) -> u32 {
        self.declared_order
    }

    pub fn totals(&self) -> StageTotals {
        totals(&self.stages)
    }

    fn reversed(&self) -> SplittingScheme {
        SplittingScheme {
            name: self.name.clone(),
            stages: self.stages.iter().rev().map(Stage::reversed).collect(),
            declared_order: self.declared_order,
        }
    }

    /// Structural palindrome test: the stage list equals its reversal.
    pub fn is_palindromic(&self) -> bool {
        self.stages == self.reversed().stages
    }

    /// True if any kick carries a force-gradient coefficient.
    pub fn uses_force_gradient(&self) -> bool {
        fn scan(stages: &[Stage]) -> bool {
            stages.iter().any(|s| match s {
                Stage::Kick { c, .. } => !c.is_zero(),
                Stage::InnerLoop { inner, .. } => scan(&inner.stages),
                Stage::Drift { .. } => false,
            })
        }
        scan(&self.stages)
    }
}
