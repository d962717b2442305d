use std::time::Instant;

use crate::editors::{eulerize, EditMode};
use crate::error::{Error, Result};
use crate::sampler::{odd_degree_prob, sample_gnp, Seed};

use super::{
    base_parameters, mean_consistent, mean_sd, require_trials, run_trials, window_notes,
    ExperimentKind, ExperimentReport, ReportBody,
};

/// Result of one eulerize run inside a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeOutcome {
    /// Plan length, `None` when the mode is infeasible for the sample.
    pub achieved: Option<usize>,
    pub repair_ops: usize,
}

/// Per-sample observations of the three edit numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: Seed,
    pub n: usize,
    pub p: f64,
    /// Number of odd-degree vertices.
    pub odd_count: usize,
    pub edit: ModeOutcome,
    pub ext: ModeOutcome,
    pub red: ModeOutcome,
    /// All three counts present and inside `n/4 ± n^(1/2+η)`.
    pub in_window: bool,
}

impl TrialRecord {
    pub fn outcome(&self, mode: EditMode) -> ModeOutcome {
        match mode {
            EditMode::Edit => self.edit,
            EditMode::Extend => self.ext,
            EditMode::Reduce => self.red,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationSummary {
    pub window_lower: f64,
    pub window_upper: f64,
    pub in_window_fraction: f64,
    /// Fraction with `achieved_edit = T/2` and no repair ops.
    pub edit_at_lower_bound_fraction: f64,
    /// Indexed edit, extend, reduce.
    pub feasible_fraction: [f64; 3],
    pub mean_achieved: [f64; 3],
    pub mean_repair_ops: [f64; 3],
    pub mean_odd_count: f64,
    pub sd_odd_count: f64,
    /// `n · P(vertex odd)` from the closed form.
    pub expected_odd_count: f64,
    pub mean_consistent: bool,
}

fn observe(g: &crate::graph::Graph, mode: EditMode) -> Result<ModeOutcome> {
    match eulerize(g, mode) {
        Ok((_, plan)) => Ok(ModeOutcome {
            achieved: Some(plan.achieved()),
            repair_ops: plan.repair_ops,
        }),
        Err(e) if e.is_infeasible() => Ok(ModeOutcome {
            achieved: None,
            repair_ops: 0,
        }),
        Err(e) => Err(e),
    }
}

/// Samples `trials` graphs and eulerizes each in all three modes, checking
/// the counts against the window `n/4 ± n^(1/2+η)`.
pub fn run_concentration(
    n: usize,
    p: f64,
    trials: usize,
    eta: f64,
    seed: Seed,
    workers: usize,
) -> Result<ExperimentReport> {
    require_trials(trials)?;
    if eta.is_nan() || eta <= 0.0 {
        return Err(Error::invalid(format!("eta must be positive, got {eta}")));
    }
    crate::sampler::check_probability(p)?;
    let started = Instant::now();

    let center = n as f64 / 4.0;
    let half_width = (n as f64).powf(0.5 + eta);
    let (lower, upper) = (center - half_width, center + half_width);

    let records = run_trials(trials, workers, |i| {
        let trial_seed = seed.for_trial(i);
        let g = sample_gnp(n, p, trial_seed)?;
        let edit = observe(&g, EditMode::Edit)?;
        let ext = observe(&g, EditMode::Extend)?;
        let red = observe(&g, EditMode::Reduce)?;
        let inside = |o: ModeOutcome| {
            o.achieved
                .is_some_and(|k| (lower..=upper).contains(&(k as f64)))
        };
        Ok(TrialRecord {
            trial: i,
            seed: trial_seed,
            n,
            p,
            odd_count: g.odd_count(),
            edit,
            ext,
            red,
            in_window: inside(edit) && inside(ext) && inside(red),
        })
    })?;

    let count = trials as f64;
    let fraction = |f: &dyn Fn(&TrialRecord) -> bool| records.iter().filter(|r| f(r)).count() as f64 / count;
    let per_mode = |f: &dyn Fn(&TrialRecord, EditMode) -> f64| {
        EditMode::ALL.map(|mode| records.iter().map(|r| f(r, mode)).sum::<f64>() / count)
    };
    let mean_achieved = EditMode::ALL.map(|mode| {
        let ks: Vec<f64> = records
            .iter()
            .filter_map(|r| r.outcome(mode).achieved)
            .map(|k| k as f64)
            .collect();
        mean_sd(ks.iter().copied()).0
    });
    let (mean_t, sd_t) = mean_sd(records.iter().map(|r| r.odd_count as f64));
    let expected = n as f64 * odd_degree_prob(n.max(1), p)?;

    let summary = ConcentrationSummary {
        window_lower: lower,
        window_upper: upper,
        in_window_fraction: fraction(&|r| r.in_window),
        edit_at_lower_bound_fraction: fraction(&|r| {
            r.edit.achieved == Some(r.odd_count / 2) && r.edit.repair_ops == 0
        }),
        feasible_fraction: per_mode(&|r, m| r.outcome(m).achieved.is_some() as u8 as f64),
        mean_achieved,
        mean_repair_ops: per_mode(&|r, m| r.outcome(m).repair_ops as f64),
        mean_odd_count: mean_t,
        sd_odd_count: sd_t,
        expected_odd_count: expected,
        mean_consistent: mean_consistent(mean_t, sd_t, trials, expected),
    };

    let mut notes = Vec::new();
    let windows = window_notes(n, p, &mut notes).into_iter().collect();
    if lower <= 0.0 {
        notes.push(format!(
            "concentration window [{}, {}] reaches below zero at this n",
            super::format_sig(lower),
            super::format_sig(upper)
        ));
    }
    let mut parameters = vec![
        ("n".into(), n.to_string()),
        ("p".into(), p.to_string()),
        ("eta".into(), eta.to_string()),
    ];
    parameters.extend(base_parameters(seed, workers, trials));

    Ok(ExperimentReport {
        kind: ExperimentKind::Concentration,
        parameters,
        windows,
        notes,
        duration: started.elapsed(),
        body: ReportBody::Concentration {
            trials: records,
            summary,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_at_triangle_scale() {
        let report = run_concentration(3, 0.5, 20, 0.1, Seed(1), 1).unwrap();
        let (trials, summary) = report.concentration().unwrap();
        assert_eq!(trials.len(), 20);
        assert!(!report.windows[0].strong_ok);
        assert!(!report.notes.is_empty());
        assert!(summary.in_window_fraction >= 0.0);
        for r in trials {
            for mode in EditMode::ALL {
                if let Some(k) = r.outcome(mode).achieved {
                    assert!(k >= r.odd_count / 2);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(run_concentration(10, 0.5, 0, 0.1, Seed(1), 1).is_err());
        assert!(run_concentration(10, 0.5, 5, 0.0, Seed(1), 1).is_err());
        assert!(run_concentration(10, 1.5, 5, 0.1, Seed(1), 1).is_err());
    }
}
