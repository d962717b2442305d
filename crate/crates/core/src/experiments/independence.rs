use std::time::Instant;

use crate::error::{Error, Result};
use crate::oracle::{exact_parity_stats, MAX_ENUMERATION_N};
use crate::sampler::{check_probability, sample_gnp, Seed};

use super::{base_parameters, require_trials, run_trials, window_notes, ExperimentKind, ExperimentReport, ReportBody};

/// Joint versus product odd-degree frequencies of vertices `0..b`.
#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceSummary {
    pub n: usize,
    pub p: f64,
    pub b: usize,
    pub trials: usize,
    /// Fraction of samples where vertices `0..b` are all odd.
    pub joint_hat: f64,
    /// Product of the per-vertex odd fractions.
    pub product_hat: f64,
    /// `joint_hat − product_hat`
    pub deviation: f64,
    /// Delta-method standard error of `deviation`.
    pub stderr: f64,
    /// Exact `joint − product` by enumeration, for `n ≤ 6`.
    pub exact_deviation: Option<f64>,
    /// Per-vertex odd fractions.
    pub marginals: Vec<f64>,
}

pub fn run_independence(
    n: usize,
    p: f64,
    b: usize,
    trials: usize,
    seed: Seed,
    workers: usize,
) -> Result<ExperimentReport> {
    if b < 1 || b > n {
        return Err(Error::invalid(format!("b = {b} outside 1..={n}")));
    }
    require_trials(trials)?;
    check_probability(p)?;
    let started = Instant::now();

    let parities = run_trials(trials, workers, |i| {
        let g = sample_gnp(n, p, seed.for_trial(i))?;
        Ok((0..b).map(|v| g.degree(v) % 2 == 1).collect::<Vec<bool>>())
    })?;

    let count = trials as f64;
    let marginals: Vec<f64> = (0..b)
        .map(|v| parities.iter().filter(|row| row[v]).count() as f64 / count)
        .collect();
    let joint_hat = parities.iter().filter(|row| row.iter().all(|&o| o)).count() as f64 / count;
    let product_hat: f64 = marginals.iter().product();

    // deviation = J − Π m_i; its linearization per sample is
    // Z = Π T_i − Σ_i (Π_{j≠i} m_j) T_i.
    let leave_one_out: Vec<f64> = (0..b)
        .map(|i| (0..b).filter(|&j| j != i).map(|j| marginals[j]).product())
        .collect();
    let z: Vec<f64> = parities
        .iter()
        .map(|row| {
            let all = row.iter().all(|&o| o) as u8 as f64;
            let linear: f64 = row
                .iter()
                .zip(&leave_one_out)
                .map(|(&o, w)| o as u8 as f64 * w)
                .sum();
            all - linear
        })
        .collect();
    let z_mean = z.iter().sum::<f64>() / count;
    let z_var = if trials > 1 {
        z.iter().map(|x| (x - z_mean).powi(2)).sum::<f64>() / (count - 1.0)
    } else {
        0.0
    };

    let exact_deviation = if n <= MAX_ENUMERATION_N {
        let stats = exact_parity_stats(n, p, b)?;
        Some(stats.joint - stats.product)
    } else {
        None
    };

    let summary = IndependenceSummary {
        n,
        p,
        b,
        trials,
        joint_hat,
        product_hat,
        deviation: joint_hat - product_hat,
        stderr: (z_var / count).sqrt(),
        exact_deviation,
        marginals,
    };

    let mut notes = Vec::new();
    let windows = window_notes(n, p, &mut notes).into_iter().collect();
    let mut parameters = vec![
        ("n".into(), n.to_string()),
        ("p".into(), p.to_string()),
        ("b".into(), b.to_string()),
    ];
    parameters.extend(base_parameters(seed, workers, trials));

    Ok(ExperimentReport {
        kind: ExperimentKind::Independence,
        parameters,
        windows,
        notes,
        duration: started.elapsed(),
        body: ReportBody::Independence(summary),
    })
}
