use std::time::Instant;

use crate::editors::{plan_extend, plan_reduce};
use crate::error::{Error, Result};
use crate::oracle::{max_clique_exact, MAX_CLIQUE_N};
use crate::sampler::{check_probability, sample_gnp, Seed};

use super::{
    base_parameters, require_trials, run_trials, window_notes, ExperimentKind, ExperimentReport,
    ReportBody,
};

/// Structural events observed on one sample `H` and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub trial: u64,
    pub seed: Seed,
    pub odd_count: usize,
    /// `H` is connected.
    pub e_con: bool,
    /// `|T − n/2| ≤ n^(1/2+ε)`.
    pub e_odd: bool,
    /// Every vertex pair of `H` has a common neighbor.
    pub e_good_h: bool,
    /// Every vertex pair of the complement has a common neighbor.
    pub e_good_hc: bool,
    /// Clique numbers of `H` and its complement at most `2√n ln n`; only
    /// computed in exact-clique runs.
    pub e_cliq: Option<bool>,
    pub clique_h: Option<usize>,
    pub clique_hc: Option<usize>,
    /// Leftover odd clique of the addition planner, `None` if it failed.
    pub residual_x: Option<usize>,
    /// Leftover odd set of the removal planner, `None` if it failed.
    pub residual_y: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EventSummary {
    pub freq_con: f64,
    pub freq_odd: f64,
    pub freq_good_h: f64,
    pub freq_good_hc: f64,
    pub freq_cliq: Option<f64>,
    /// `2√n ln n`
    pub clique_bound: f64,
    /// The bound is at least `n`, so the clique event cannot fail.
    pub clique_bound_trivial: bool,
    pub odd_window: (f64, f64),
    pub mean_residual_x: f64,
    pub max_residual_x: usize,
    pub mean_residual_y: f64,
    pub max_residual_y: usize,
}

/// Frequencies of connectivity, odd-count concentration, universal common
/// neighbors and (optionally) the clique bound over `trials` samples.
pub fn run_events(
    n: usize,
    p: f64,
    trials: usize,
    eps: f64,
    seed: Seed,
    exact_clique: bool,
    workers: usize,
) -> Result<ExperimentReport> {
    require_trials(trials)?;
    check_probability(p)?;
    if exact_clique && n > MAX_CLIQUE_N {
        return Err(Error::invalid(format!(
            "exact clique checks limited to n <= {MAX_CLIQUE_N}, got {n}"
        )));
    }
    let started = Instant::now();
    let half_width = (n as f64).powf(0.5 + eps);
    let center = n as f64 / 2.0;
    let clique_bound = 2.0 * (n as f64).sqrt() * (n as f64).ln();

    let records = run_trials(trials, workers, |i| {
        let trial_seed = seed.for_trial(i);
        let g = sample_gnp(n, p, trial_seed)?;
        let gc = g.complement();
        let odd_count = g.odd_count();
        let (clique_h, clique_hc) = if exact_clique {
            (Some(max_clique_exact(&g)?), Some(max_clique_exact(&gc)?))
        } else {
            (None, None)
        };
        Ok(EventRecord {
            trial: i,
            seed: trial_seed,
            odd_count,
            e_con: g.is_connected(),
            e_odd: (odd_count as f64 - center).abs() <= half_width,
            e_good_h: g.every_pair_has_common_neighbor(),
            e_good_hc: gc.every_pair_has_common_neighbor(),
            e_cliq: clique_h
                .zip(clique_hc)
                .map(|(a, b)| a as f64 <= clique_bound && b as f64 <= clique_bound),
            clique_h,
            clique_hc,
            residual_x: plan_extend(&g).ok().map(|plan| plan.residual.len()),
            residual_y: plan_reduce(&g).ok().map(|plan| plan.residual.len()),
        })
    })?;

    let count = trials as f64;
    let freq = |f: fn(&EventRecord) -> bool| records.iter().filter(|r| f(r)).count() as f64 / count;
    let residual_stats = |f: fn(&EventRecord) -> Option<usize>| {
        let values: Vec<usize> = records.iter().filter_map(f).collect();
        let mean = if values.is_empty() {
            f64::NAN
        } else {
            values.iter().sum::<usize>() as f64 / values.len() as f64
        };
        (mean, values.into_iter().max().unwrap_or(0))
    };
    let (mean_residual_x, max_residual_x) = residual_stats(|r| r.residual_x);
    let (mean_residual_y, max_residual_y) = residual_stats(|r| r.residual_y);

    let summary = EventSummary {
        freq_con: freq(|r| r.e_con),
        freq_odd: freq(|r| r.e_odd),
        freq_good_h: freq(|r| r.e_good_h),
        freq_good_hc: freq(|r| r.e_good_hc),
        freq_cliq: exact_clique.then(|| freq(|r| r.e_cliq == Some(true))),
        clique_bound,
        clique_bound_trivial: clique_bound >= n as f64,
        odd_window: (center - half_width, center + half_width),
        mean_residual_x,
        max_residual_x,
        mean_residual_y,
        max_residual_y,
    };

    let mut notes = Vec::new();
    let windows = window_notes(n, p, &mut notes).into_iter().collect();
    if exact_clique && summary.clique_bound_trivial {
        notes.push(format!(
            "clique bound {} >= n = {n}: the clique event holds trivially",
            super::format_sig(clique_bound)
        ));
    }
    if !exact_clique {
        notes.push("clique event skipped; residual sizes x and y reported instead".into());
    }
    let mut parameters = vec![
        ("n".into(), n.to_string()),
        ("p".into(), p.to_string()),
        ("eps".into(), eps.to_string()),
        ("exact_clique".into(), exact_clique.to_string()),
    ];
    parameters.extend(base_parameters(seed, workers, trials));

    Ok(ExperimentReport {
        kind: ExperimentKind::Events,
        parameters,
        windows,
        notes,
        duration: started.elapsed(),
        body: ReportBody::Events {
            trials: records,
            summary,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_large_exact_clique() {
        assert!(run_events(65, 0.5, 1, 0.1, Seed(1), true, 1).is_err());
        assert!(run_events(65, 0.5, 1, 0.1, Seed(1), false, 1).is_ok());
    }

    #[test]
    fn trivial_clique_bound_at_twenty() {
        let r = run_events(20, 0.5, 30, 0.1, Seed(5), true, 2).unwrap();
        let (_, s) = r.events().unwrap();
        assert!(s.clique_bound_trivial);
        assert_eq!(s.freq_cliq, Some(1.0));
    }

    #[test]
    fn certain_graphs() {
        let r = run_events(10, 1.0, 3, 0.1, Seed(5), true, 1).unwrap();
        let (trials, s) = r.events().unwrap();
        assert_eq!(s.freq_con, 1.0);
        assert_eq!(s.freq_good_h, 1.0);
        assert_eq!(s.freq_good_hc, 0.0);
        assert_eq!(trials[0].clique_h, Some(10));
        assert_eq!(trials[0].clique_hc, Some(1));
    }
}
