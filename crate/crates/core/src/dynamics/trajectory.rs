use serde::Serialize;

use crate::construction::BisexualOperator;
use crate::error::Result;
use crate::simplex::{max_abs_diff, nan_max, PopulationState, Tolerance};

/// Maximum number of states kept in a [`Trajectory`].
pub const MAX_STORED_STATES: usize = 10_000;

/// A state space with the max-norm distance used for convergence checks.
pub trait Phase: Clone {
    fn distance(&self, other: &Self) -> f64;
}

impl Phase for f64 {
    fn distance(&self, other: &Self) -> f64 {
        (self - other).abs()
    }
}

impl<const N: usize> Phase for [f64; N] {
    fn distance(&self, other: &Self) -> f64 {
        max_abs_diff(self, other)
    }
}

impl Phase for PopulationState {
    fn distance(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dims(), other.dims());
        nan_max(max_abs_diff(self.x(), other.x()), max_abs_diff(self.y(), other.y()))
    }
}

/// An orbit `s_0, s_1 = f(s_0), ...`, possibly thinned.
///
/// Up to [`MAX_STORED_STATES`] states are stored with their step indices.
/// Once that budget is exceeded the stored states are decimated by powers of
/// two; the initial state and the last iterate reached are always present.
#[derive(Debug, Clone, Serialize)]
pub struct Trajectory<S> {
    pub states: Vec<S>,
    /// Step index of each stored state.
    pub steps: Vec<usize>,
    pub converged: bool,
    /// `s_{t+1}` for the first `t` with `|s_{t+1} - s_t| <= iter_eps`.
    pub limit: Option<S>,
    /// The `t` above, or `max_iters` when the run did not converge.
    pub steps_taken: usize,
}

impl<S> Trajectory<S> {
    pub fn initial(&self) -> &S {
        &self.states[0]
    }

    pub fn last(&self) -> &S {
        self.states.last().expect("trajectory is never empty")
    }

    /// The limit if converged, otherwise the last iterate.
    pub fn endpoint(&self) -> &S {
        self.limit.as_ref().unwrap_or_else(|| self.last())
    }
}

struct Recorder<S> {
    states: Vec<S>,
    steps: Vec<usize>,
    stride: usize,
}

impl<S: Clone> Recorder<S> {
    fn new() -> Self {
        Self {
            states: Vec::new(),
            steps: Vec::new(),
            stride: 1,
        }
    }

    fn record(&mut self, step: usize, s: &S) {
        if !step.is_multiple_of(self.stride) {
            return;
        }
        self.states.push(s.clone());
        self.steps.push(step);
        // One slot is reserved for the final state.
        if self.states.len() >= MAX_STORED_STATES {
            let next = self.stride * 2;
            let mut keep = self.steps.iter().map(|t| t % next == 0);
            self.states.retain(|_| keep.next().unwrap());
            self.steps.retain(|t| t % next == 0);
            self.stride = next;
        }
    }

    fn finish(mut self, step: usize, s: S) -> (Vec<S>, Vec<usize>) {
        if self.steps.last() != Some(&step) {
            self.states.push(s);
            self.steps.push(step);
        }
        (self.states, self.steps)
    }
}

/// Iterates `f` from `s0` until two successive states are within
/// `tol.iter_eps` or `tol.max_iters` steps have been taken.
pub fn iterate_map<S, F>(f: F, s0: S, tol: &Tolerance) -> Trajectory<S>
where
    S: Phase,
    F: Fn(&S) -> S,
{
    let mut rec = Recorder::new();
    let mut current = s0;
    rec.record(0, &current);
    for t in 0..tol.max_iters {
        let next = f(&current);
        let d = current.distance(&next);
        if d <= tol.iter_eps {
            let (states, steps) = rec.finish(t, current);
            return Trajectory {
                states,
                steps,
                converged: true,
                limit: Some(next),
                steps_taken: t,
            };
        }
        current = next;
        if d.is_nan() {
            let (states, steps) = rec.finish(t + 1, current);
            return Trajectory {
                states,
                steps,
                converged: false,
                limit: None,
                steps_taken: t + 1,
            };
        }
        rec.record(t + 1, &current);
    }
    let (states, steps) = rec.finish(tol.max_iters, current);
    Trajectory {
        states,
        steps,
        converged: false,
        limit: None,
        steps_taken: tol.max_iters,
    }
}

/// Trajectory of a bisexual operator.
pub fn iterate(
    op: &BisexualOperator,
    s0: PopulationState,
    tol: &Tolerance,
) -> Result<Trajectory<PopulationState>> {
    op.check_dims(&s0)?;
    Ok(iterate_map(
        |s| op.apply(s).expect("dimensions checked"),
        s0,
        tol,
    ))
}

/// `max_t |functional(s_t) - functional(s_0)|` over the stored states and the limit.
pub fn conserved_quantity_drift<S>(traj: &Trajectory<S>, functional: impl Fn(&S) -> f64) -> f64 {
    let base = functional(traj.initial());
    traj.states
        .iter()
        .chain(traj.limit.iter())
        .map(|s| (functional(s) - base).abs())
        .fold(0.0, nan_max)
}

/// Same as [`conserved_quantity_drift`] but over every one of `steps`
/// iterates, without storing them.
pub fn orbit_drift<S>(
    f: impl Fn(&S) -> S,
    s0: S,
    steps: usize,
    functional: impl Fn(&S) -> f64,
) -> f64 {
    let base = functional(&s0);
    let mut s = s0;
    let mut worst: f64 = 0.0;
    for _ in 0..steps {
        s = f(&s);
        worst = nan_max(worst, (functional(&s) - base).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_start_converges_at_step_zero() {
        let traj = iterate_map(|x: &f64| *x, 0.3, &Tolerance::default());
        assert!(traj.converged);
        assert_eq!(traj.steps_taken, 0);
        assert_eq!(traj.states, vec![0.3]);
        assert_eq!(traj.limit, Some(0.3));
    }

    #[test]
    fn contraction_converges() {
        let traj = iterate_map(|x: &f64| 0.5 * x + 1.0, 0.0, &Tolerance::default());
        assert!(traj.converged);
        assert!((traj.limit.unwrap() - 2.0).abs() < 1e-11);
        // Stored states obey s_{t+1} = f(s_t).
        for w in traj.states.windows(2) {
            assert_eq!(w[1], 0.5 * w[0] + 1.0);
        }
        assert!((traj.last() - traj.limit.unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn non_convergence_is_reported() {
        let tol = Tolerance {
            max_iters: 1000,
            ..Tolerance::default()
        };
        let traj = iterate_map(|x: &f64| 1.0 - x, 0.2, &tol);
        assert!(!traj.converged);
        let blown = iterate_map(|x: &[f64; 2]| [x[0] * 1e300, 0.0], [1e10, 0.0], &tol);
        assert!(!blown.converged);
        assert!(blown.steps_taken < 10);
        assert!(traj.limit.is_none());
        assert_eq!(traj.steps_taken, 1000);
        assert_eq!(*traj.steps.last().unwrap(), 1000);
    }

    #[test]
    fn thinning_keeps_first_and_last() {
        let tol = Tolerance {
            max_iters: 123_457,
            ..Tolerance::default()
        };
        let traj = iterate_map(|x: &f64| x + 1.0, 0.0, &tol);
        assert!(traj.states.len() <= MAX_STORED_STATES);
        assert_eq!(traj.steps[0], 0);
        assert_eq!(*traj.steps.last().unwrap(), 123_457);
        for (s, t) in traj.states.iter().zip(&traj.steps) {
            assert_eq!(*s, *t as f64);
        }
        assert!(traj.steps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn short_runs_are_not_thinned() {
        let tol = Tolerance {
            max_iters: 500,
            ..Tolerance::default()
        };
        let traj = iterate_map(|x: &f64| x + 1.0, 0.0, &tol);
        assert_eq!(traj.states.len(), 501);
    }

    #[test]
    fn drift_of_constant_functional_is_zero() {
        let traj = iterate_map(|x: &f64| 0.9 * x, 1.0, &Tolerance::default());
        assert_eq!(conserved_quantity_drift(&traj, |_| 3.0), 0.0);
        assert!(conserved_quantity_drift(&traj, |x| *x) > 0.99);
        assert_eq!(orbit_drift(|x: &f64| 0.9 * x, 1.0, 100, |_| 1.0), 0.0);
    }
}
