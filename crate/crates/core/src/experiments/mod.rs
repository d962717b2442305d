//! Monte Carlo experiments on `G(n, p)`.
//!
//! Every experiment is a pure function of its parameters and master seed.
//! Trial `i` samples with `seed.for_trial(i)`; trials fan out over a rayon
//! pool of `workers` threads and are collected in index order before any
//! aggregation, so the worker count never changes the output.

mod concentration;
mod events;
mod independence;
mod moments;
mod report;

use std::fmt;
use std::time::Duration;

use rayon::prelude::*;

pub use concentration::{run_concentration, ConcentrationSummary, ModeOutcome, TrialRecord};
pub use events::{run_events, EventRecord, EventSummary};
pub use independence::{run_independence, IndependenceSummary};
pub use moments::{run_moments, MomentReport};
pub use report::{format_sig, write_csv, write_report};

use crate::error::{Error, Result};
use crate::sampler::{classify_p, ProbabilityWindow, Seed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExperimentKind {
    Concentration,
    Moments,
    Events,
    Independence,
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExperimentKind::Concentration => "concentration",
            ExperimentKind::Moments => "moments",
            ExperimentKind::Events => "events",
            ExperimentKind::Independence => "independence",
        })
    }
}

#[derive(Debug, Clone)]
pub enum ReportBody {
    Concentration {
        trials: Vec<TrialRecord>,
        summary: ConcentrationSummary,
    },
    Moments(Vec<MomentReport>),
    Events {
        trials: Vec<EventRecord>,
        summary: EventSummary,
    },
    Independence(IndependenceSummary),
}

/// Outcome of one experiment run.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub kind: ExperimentKind,
    /// Resolved parameters, echoed into the report preamble.
    pub parameters: Vec<(String, String)>,
    /// Window classification for each `(n, p)` involved.
    pub windows: Vec<ProbabilityWindow>,
    pub notes: Vec<String>,
    /// Wall-clock time; not part of the determinism contract.
    pub duration: Duration,
    pub body: ReportBody,
}

impl ExperimentReport {
    pub fn concentration(&self) -> Option<(&[TrialRecord], &ConcentrationSummary)> {
        match &self.body {
            ReportBody::Concentration { trials, summary } => Some((trials, summary)),
            _ => None,
        }
    }

    pub fn moments(&self) -> Option<&[MomentReport]> {
        match &self.body {
            ReportBody::Moments(rows) => Some(rows),
            _ => None,
        }
    }

    pub fn events(&self) -> Option<(&[EventRecord], &EventSummary)> {
        match &self.body {
            ReportBody::Events { trials, summary } => Some((trials, summary)),
            _ => None,
        }
    }

    pub fn independence(&self) -> Option<&IndependenceSummary> {
        match &self.body {
            ReportBody::Independence(s) => Some(s),
            _ => None,
        }
    }
}

/// Runs `trial(i)` for `i in 0..trials` on `workers` threads, results in
/// index order.
fn run_trials<T, F>(trials: usize, workers: usize, trial: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("cannot start {workers} workers: {e}")))?;
    pool.install(|| (0..trials as u64).into_par_iter().map(&trial).collect())
}

fn require_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    Ok(())
}

/// Window flags plus a note when the run sits outside the strong window.
fn window_notes(n: usize, p: f64, notes: &mut Vec<String>) -> Option<ProbabilityWindow> {
    match classify_p(n, p) {
        Ok(w) => {
            if !w.strong_ok {
                notes.push(format!(
                    "n={n} p={p}: outside the strong window [{}, {}] ({}); results are informational",
                    format_sig(w.strong_lower),
                    format_sig(w.strong_upper),
                    w.regime()
                ));
            }
            Some(w)
        }
        Err(_) => {
            notes.push(format!("n={n}: too small to classify p, window degenerate"));
            None
        }
    }
}

fn base_parameters(seed: Seed, workers: usize, trials: usize) -> Vec<(String, String)> {
    vec![
        ("seed".into(), seed.to_string()),
        ("trials".into(), trials.to_string()),
        ("workers".into(), workers.to_string()),
    ]
}

/// Mean and sample standard deviation.
fn mean_sd(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let count = values.clone().count();
    if count == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.clone().sum::<f64>() / count as f64;
    if count < 2 {
        return (mean, 0.0);
    }
    let var = values.map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1) as f64;
    (mean, var.sqrt())
}

/// Whether the empirical mean of `T` sits within four standard errors of
/// `n · P(vertex odd)`.
fn mean_consistent(mean: f64, sd: f64, trials: usize, expected: f64) -> bool {
    let tol = 4.0 * sd / (trials as f64).sqrt();
    (mean - expected).abs() <= tol.max(1e-9)
}
