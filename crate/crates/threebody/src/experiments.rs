//! Energy-error series, convergence-order fits and the weighted
//! cost-vs-accuracy study.

use dynamics::{PhaseState, SystemModel};
use splitting::{EvalCounters, Propagator, SplittingScheme};

use crate::error::LabError;

/// Cost units per logical evaluation. The defaults make a slow force
/// evaluation the unit, price the fast force at 0.001 of it, and charge a
/// force-gradient evaluation twice the force of its subset (forces plus the
/// Jacobian-vector contraction).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostWeights {
    pub slow_force: f64,
    pub fast_force: f64,
    pub slow_force_gradient: f64,
    pub fast_force_gradient: f64,
    pub drift: f64,
}

impl Default for CostWeights {
    fn default() -> Self {
        Self {
            slow_force: 1.0,
            fast_force: 0.001,
            slow_force_gradient: 2.0,
            fast_force_gradient: 0.002,
            drift: 0.0,
        }
    }
}

/// Weighted cost of a counter snapshot.
pub fn weighted_cost(counters: EvalCounters, weights: &CostWeights) -> f64 {
    counters.slow_forces as f64 * weights.slow_force
        + counters.fast_forces as f64 * weights.fast_force
        + counters.slow_gradients as f64 * weights.slow_force_gradient
        + counters.fast_gradients as f64 * weights.fast_force_gradient
        + counters.drifts as f64 * weights.drift
}

fn steps_for(h: f64, t_end: f64) -> Result<u64, LabError> {
    if h.is_nan() || h <= 0.0 {
        return Err(LabError::NonPositiveStep { h });
    }
    let ratio = t_end / h;
    let steps = ratio.round();
    if (ratio - steps).abs() > 1e-9 * ratio.abs().max(1.0) {
        return Err(LabError::NonIntegralSteps { h, t_end });
    }
    Ok(steps as u64)
}

/// Relative energy error along one run.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyErrorSeries {
    pub scheme: String,
    pub h: f64,
    pub initial_energy: f64,
    /// `(t, |E(t) - E0| / |E0|)` samples.
    pub samples: Vec<(f64, f64)>,
    pub energies: Vec<f64>,
    pub max_rel_err: f64,
}

pub fn energy_error_series<const D: usize>(
    scheme: &SplittingScheme,
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    h: f64,
    t_end: f64,
    sample_every: u64,
) -> Result<EnergyErrorSeries, LabError> {
    let steps = steps_for(h, t_end)?;
    let mut working = state.clone();
    let mut propagator = Propagator::new(model);
    let trajectory = propagator.integrate(scheme, &mut working, h, steps, sample_every, false)?;
    let e0 = trajectory.initial_energy;
    let samples: Vec<(f64, f64)> = trajectory
        .times
        .iter()
        .zip(&trajectory.energies)
        .map(|(&t, &e)| (t, ((e - e0) / e0).abs()))
        .collect();
    let max_rel_err = samples.iter().map(|&(_, e)| e).fold(0.0, f64::max);
    Ok(EnergyErrorSeries {
        scheme: scheme.name().to_string(),
        h,
        initial_energy: e0,
        samples,
        energies: trajectory.energies,
        max_rel_err,
    })
}

/// Least-squares fit of `ln err` against `ln h` over one index window.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindowFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    /// Inclusive index range of the fitted points.
    pub start: usize,
    pub end: usize,
}

fn fit_window(points: &[(f64, f64)], start: usize, end: usize) -> WindowFit {
    let logs: Vec<(f64, f64)> = points[start..=end]
        .iter()
        .map(|&(h, e)| (h.ln(), e.ln()))
        .collect();
    let n = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let rms = (logs
        .iter()
        .map(|&(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    WindowFit {
        slope,
        intercept,
        rms_residual: rms,
        start,
        end,
    }
}

/// Windows whose points sit on a line within this log-space rms are taken
/// as asymptotically clean.
const CONSISTENT_RMS: f64 = 0.15;

/// Pick the steepest consistent window of at least 3 consecutive points;
/// fall back to the straightest window when none qualifies.
pub fn fit_loglog_window(points: &[(f64, f64)]) -> Option<WindowFit> {
    if points.len() < 3 {
        return None;
    }
    let mut candidates = Vec::new();
    for start in 0..points.len() {
        for end in (start + 2)..points.len() {
            candidates.push(fit_window(points, start, end));
        }
    }
    let consistent: Vec<&WindowFit> = candidates
        .iter()
        .filter(|f| f.rms_residual <= CONSISTENT_RMS)
        .collect();
    let chosen = if consistent.is_empty() {
        candidates
            .iter()
            .min_by(|a, b| a.rms_residual.total_cmp(&b.rms_residual))?
    } else {
        consistent
            .into_iter()
            .max_by(|a, b| {
                a.slope
                    .abs()
                    .total_cmp(&b.slope.abs())
                    .then((a.end - a.start).cmp(&(b.end - b.start)))
                    .then(b.start.cmp(&a.start))
            })?
    };
    Some(*chosen)
}

/// Measured order of accuracy: error grid plus the fitted slope.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub scheme: String,
    /// `(h, max rel energy error)`, h descending.
    pub points: Vec<(f64, f64)>,
    pub fit: Option<WindowFit>,
    pub flagged_non_monotone: bool,
}

impl ConvergenceReport {
    /// The measured order `p`: energy errors of an order-`p` scheme scale
    /// as `h^p`, so this is the fitted log-log slope.
    pub fn slope(&self) -> Option<f64> {
        self.fit.map(|f| f.slope)
    }
}

pub fn convergence_order<const D: usize>(
    scheme: &SplittingScheme,
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    h_list: &[f64],
    t_end: f64,
) -> Result<ConvergenceReport, LabError> {
    if h_list.len() < 4 {
        return Err(LabError::GridTooSmall {
            needed: 4,
            got: h_list.len(),
        });
    }
    if !h_list.windows(2).all(|w| w[0] > w[1]) {
        return Err(LabError::GridNotDescending);
    }
    let mut points = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let series = energy_error_series(scheme, state, model, h, t_end, 1)?;
        points.push((h, series.max_rel_err));
    }
    let monotone = errors_decrease_with_h(&points);
    let fit = if monotone { fit_loglog_window(&points) } else { None };
    Ok(ConvergenceReport {
        scheme: scheme.name().to_string(),
        points,
        fit,
        flagged_non_monotone: !monotone,
    })
}

/// True when every refinement strictly reduces the error; anything else is
/// flagged rather than fitted.
pub fn errors_decrease_with_h(points: &[(f64, f64)]) -> bool {
    points.windows(2).all(|w| w[1].1 < w[0].1)
}

/// One row of the cost-vs-accuracy table.
#[derive(Clone, Debug, PartialEq)]
pub struct CostRow {
    pub scheme: String,
    pub h: f64,
    pub weighted_cost: f64,
    pub max_rel_err: f64,
}

/// Run every `(scheme, h)` combination and tabulate logical weighted cost
/// against achieved accuracy.
pub fn cost_accuracy<const D: usize>(
    runs: &[(SplittingScheme, Vec<f64>)],
    state: &PhaseState<D>,
    model: &SystemModel<D>,
    t_end: f64,
    weights: &CostWeights,
) -> Result<Vec<CostRow>, LabError> {
    let mut rows = Vec::new();
    for (scheme, h_list) in runs {
        for &h in h_list {
            let steps = steps_for(h, t_end)?;
            let mut working = state.clone();
            let mut propagator = Propagator::new(model);
            let trajectory = propagator.integrate(scheme, &mut working, h, steps, 1, false)?;
            let e0 = trajectory.initial_energy;
            let max_rel_err = trajectory
                .energies
                .iter()
                .map(|&e| ((e - e0) / e0).abs())
                .fold(0.0, f64::max);
            rows.push(CostRow {
                scheme: scheme.name().to_string(),
                h,
                weighted_cost: weighted_cost(propagator.counters(), weights),
                max_rel_err,
            });
        }
    }
    Ok(rows)
}

/// Log-log interpolated cost of one scheme's rows at a target accuracy.
/// `None` when the target lies outside the achieved error range.
pub fn cost_at_error(rows: &[CostRow], target_err: f64) -> Option<f64> {
    let mut points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.max_rel_err > 0.0 && r.weighted_cost > 0.0)
        .map(|r| (r.max_rel_err, r.weighted_cost))
        .collect();
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    if points.len() < 2 || target_err < points[0].0 || target_err > points.last()?.0 {
        return None;
    }
    let upper = points.iter().position(|&(e, _)| e >= target_err)?;
    if points[upper].0 == target_err || upper == 0 {
        return Some(points[upper].1);
    }
    let (e0, c0) = points[upper - 1];
    let (e1, c1) = points[upper];
    let t = (target_err.ln() - e0.ln()) / (e1.ln() - e0.ln());
    Some((c0.ln() + t * (c1.ln() - c0.ln())).exp())
}
