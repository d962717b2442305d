use std::time::Instant;

use crate::error::{Error, Result};
use crate::sampler::{check_probability, odd_degree_prob, sample_gnp, ProbabilityWindow, Seed};

use super::{
    base_parameters, mean_consistent, mean_sd, require_trials, run_trials, window_notes,
    ExperimentKind, ExperimentReport, ReportBody,
};

/// Empirical mean and `q`-th central moment of the odd-vertex count.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentReport {
    pub n: usize,
    pub p: f64,
    pub q: u32,
    pub trials: usize,
    pub mu_hat: f64,
    /// `n / 2`, the asymptotic mean.
    pub half_n: f64,
    /// `n · P(vertex odd)`, the exact mean.
    pub expected_mean: f64,
    pub sd: f64,
    pub mean_consistent: bool,
    /// `mean((T − μ̂)^q)`
    pub moment_q: f64,
    /// `moment_q / n^(q/2)`
    pub ratio: f64,
    /// `μ̂ / n`
    pub nu: f64,
    pub window: Option<ProbabilityWindow>,
}

/// Samples the odd-vertex count `T` for each `n` in `n_list` and reports its
/// empirical mean and normalized `q`-th central moment. `q` must be even
/// and at least 2.
pub fn run_moments(
    n_list: &[usize],
    p: f64,
    q: u32,
    trials: usize,
    seed: Seed,
    workers: usize,
) -> Result<ExperimentReport> {
    if q < 2 || q % 2 == 1 {
        return Err(Error::invalid(format!(
            "moment order must be an even integer q >= 2, got {q}"
        )));
    }
    require_trials(trials)?;
    check_probability(p)?;
    let started = Instant::now();
    let mut notes = Vec::new();
    let mut windows = Vec::new();
    let mut rows = Vec::with_capacity(n_list.len());

    for &n in n_list {
        let stream = seed.derive(n as u64);
        let counts = run_trials(trials, workers, |i| {
            Ok(sample_gnp(n, p, stream.for_trial(i))?.odd_count() as f64)
        })?;
        let (mu_hat, sd) = mean_sd(counts.iter().copied());
        let moment_q = counts.iter().map(|t| (t - mu_hat).powi(q as i32)).sum::<f64>() / trials as f64;
        let expected_mean = n as f64 * odd_degree_prob(n.max(1), p)?;
        let window = window_notes(n, p, &mut notes);
        windows.extend(window);
        rows.push(MomentReport {
            n,
            p,
            q,
            trials,
            mu_hat,
            half_n: n as f64 / 2.0,
            expected_mean,
            sd,
            mean_consistent: mean_consistent(mu_hat, sd, trials, expected_mean),
            moment_q,
            ratio: moment_q / (n as f64).powf(q as f64 / 2.0),
            nu: mu_hat / n as f64,
            window,
        });
    }

    let list: Vec<String> = n_list.iter().map(|n| n.to_string()).collect();
    let mut parameters = vec![
        ("n".into(), list.join(",")),
        ("p".into(), p.to_string()),
        ("q".into(), q.to_string()),
    ];
    parameters.extend(base_parameters(seed, workers, trials));

    Ok(ExperimentReport {
        kind: ExperimentKind::Moments,
        parameters,
        windows,
        notes,
        duration: started.elapsed(),
        body: ReportBody::Moments(rows),
    })
}
