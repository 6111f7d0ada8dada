//! Applying schemes to states: drifts, kicks, steps and whole trajectories.
//!
//! A [`Propagator`] owns a per-subset memo of the last force and
//! force-gradient evaluation keyed on the exact positions, so adjacent kicks
//! on the same subset (including across step boundaries) evaluate once.
//! Evaluation counters record the logical work for the cost model.

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::IntegrateError;
use crate::scheme::{SplittingScheme, Stage};
use dynamics::{force_gradient, forces, total_energy, DynamicsError, PhaseState, Subset, SystemModel};

/// Counts of logical evaluations. A `FULL` force evaluation computes both
/// potential parts, so it increments the fast and slow counters together.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalCounters {
    pub slow_forces: u64,
    pub fast_forces: u64,
    pub slow_gradients: u64,
    pub fast_gradients: u64,
    pub drifts: u64,
}

#[derive(Clone, Debug, Default)]
struct SubsetMemo<const D: usize> {
    positions: Vec<[f64; D]>,
    forces: Option<Vec<[f64; D]>>,
    gradient: Option<Vec<[f64; D]>>,
}

/// Sampled output of [`Propagator::integrate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<const D: usize> {
    pub h: f64,
    pub steps: u64,
    pub initial_energy: f64,
    /// Sample times, starting at 0 and ending at `steps * h`.
    pub times: Vec<f64>,
    pub energies: Vec<f64>,
    pub states: Option<Vec<PhaseState<D>>>,
}

impl<const D: usize> Trajectory<D> {
    /// Largest relative energy deviation from the initial energy.
    pub fn max_rel_energy_error(&self) -> f64 {
        let e0 = self.initial_energy;
        self.energies
            .iter()
            .map(|&e| ((e - e0) / e0).abs())
            .fold(0.0, f64::max)
    }
}

/// Stepper bound to one system model.
pub struct Propagator<'m, const D: usize> {
    model: &'m SystemModel<D>,
    counters: EvalCounters,
    memo: [SubsetMemo<D>; 3],
}

fn memo_slot(which: Subset) -> usize {
    match which {
        Subset::Full => 0,
        Subset::Fast => 1,
        Subset::Slow => 2,
    }
}

fn to_f64(x: Rational64) -> f64 {
    x.to_f64().expect("rational representable as f64")
}

impl<'m, const D: usize> Propagator<'m, D> {
    pub fn new(model: &'m SystemModel<D>) -> Self {
        Self {
            model,
            counters: EvalCounters::default(),
            memo: Default::default(),
        }
    }

    pub fn model(&self) -> &SystemModel<D> {
        self.model
    }

    pub fn counters(&self) -> EvalCounters {
        self.counters
    }

    pub fn reset_counters(&mut self) {
        self.counters = EvalCounters::default();
    }

    /// `r += tau * v`.
    pub fn drift(&mut self, state: &mut PhaseState<D>, tau: f64) {
        state.drift(tau);
        self.counters.drifts += 1;
    }

    fn count_force(&mut self, which: Subset) {
        match which {
            Subset::Full => {
                self.counters.slow_forces += 1;
                self.counters.fast_forces += 1;
            }
            Subset::Fast => self.counters.fast_forces += 1,
            Subset::Slow => self.counters.slow_forces += 1,
        }
    }

    fn count_gradient(&mut self, which: Subset) {
        match which {
            Subset::Full => {
                self.counters.slow_gradients += 1;
                self.counters.fast_gradients += 1;
            }
            Subset::Fast => self.counters.fast_gradients += 1,
            Subset::Slow => self.counters.slow_gradients += 1,
        }
    }

    fn ensure_forces(
        &mut self,
        which: Subset,
        state: &PhaseState<D>,
    ) -> Result<&[[f64; D]], DynamicsError> {
        let slot = memo_slot(which);
        let fresh = self.memo[slot].positions == state.positions();
        if !fresh {
            self.memo[slot] = SubsetMemo {
                positions: state.positions().to_vec(),
                forces: None,
                gradient: None,
            };
        }
        if self.memo[slot].forces.is_none() {
            let report = forces(state, self.model, which)?;
            self.count_force(which);
            self.memo[slot].forces = Some(report.forces);
        }
        Ok(self.memo[slot].forces.as_deref().expect("just filled"))
    }

    fn ensure_gradient(
        &mut self,
        which: Subset,
        state: &PhaseState<D>,
    ) -> Result<&[[f64; D]], DynamicsError> {
        let slot = memo_slot(which);
        let fresh = self.memo[slot].positions == state.positions();
        if !fresh {
            self.memo[slot] = SubsetMemo {
                positions: state.positions().to_vec(),
                forces: None,
                gradient: None,
            };
        }
        if self.memo[slot].gradient.is_none() {
            let g = force_gradient(state, self.model, which)?;
            self.count_gradient(which);
            self.memo[slot].gradient = Some(g);
        }
        Ok(self.memo[slot].gradient.as_deref().expect("just filled"))
    }

    /// `v += bh * f/m + ch3 * g/m` with forces and gradient from the given
    /// subset. Terms with zero coefficient are neither computed nor counted.
    pub fn kick(
        &mut self,
        state: &mut PhaseState<D>,
        which: Subset,
        bh: f64,
        ch3: f64,
    ) -> Result<(), DynamicsError> {
        if bh != 0.0 {
            let f = self.ensure_forces(which, state)?;
            state.apply_force_impulse(bh, f);
        }
        if ch3 != 0.0 {
            let g = self.ensure_gradient(which, state)?;
            state.apply_force_impulse(ch3, g);
        }
        Ok(())
    }

    fn apply_stages(
        &mut self,
        stages: &[Stage],
        state: &mut PhaseState<D>,
        h: f64,
    ) -> Result<(), DynamicsError> {
        for stage in stages {
            match stage {
                Stage::Drift { a } => {
                    let tau = to_f64(*a) * h;
                    self.drift(state, tau);
                }
                Stage::Kick { subset, b, c } => {
                    let bh = if b.is_zero() { 0.0 } else { to_f64(*b) * h };
                    let ch3 = if c.is_zero() {
                        0.0
                    } else {
                        to_f64(*c) * h * h * h
                    };
                    self.kick(state, *subset, bh, ch3)?;
                }
                Stage::InnerLoop {
                    inner,
                    repetitions,
                    time_fraction,
                } => {
                    let inner_h = to_f64(*time_fraction) * h / f64::from(*repetitions);
                    for _ in 0..*repetitions {
                        self.apply_stages(inner.stages(), state, inner_h)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Advance the state by one step of size `h`.
    pub fn step(
        &mut self,
        scheme: &SplittingScheme,
        state: &mut PhaseState<D>,
        h: f64,
    ) -> Result<(), DynamicsError> {
        self.apply_stages(scheme.stages(), state, h)
    }

    /// Advance `steps` steps, sampling the energy (and optionally the full
    /// state) every `sample_every` steps. The initial and final points are
    /// always sampled. `sample_every == 0` samples endpoints only.
    pub fn integrate(
        &mut self,
        scheme: &SplittingScheme,
        state: &mut PhaseState<D>,
        h: f64,
        steps: u64,
        sample_every: u64,
        record_states: bool,
    ) -> Result<Trajectory<D>, IntegrateError> {
        let initial_energy =
            total_energy(state, self.model).map_err(|source| IntegrateError { step: 0, source })?;
        let mut trajectory = Trajectory {
            h,
            steps,
            initial_energy,
            times: vec![0.0],
            energies: vec![initial_energy],
            states: record_states.then(|| vec![state.clone()]),
        };
        for k in 1..=steps {
            self.step(scheme, state, h)
                .map_err(|source| IntegrateError { step: k, source })?;
            let sampled = k == steps || (sample_every > 0 && k % sample_every == 0);
            if sampled {
                let energy = total_energy(state, self.model)
                    .map_err(|source| IntegrateError { step: k, source })?;
                trajectory.times.push(k as f64 * h);
                trajectory.energies.push(energy);
                if let Some(states) = &mut trajectory.states {
                    states.push(state.clone());
                }
            }
        }
        Ok(trajectory)
    }
}
