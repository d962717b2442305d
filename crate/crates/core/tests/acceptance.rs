//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use euledit_core::editors::pairing_witnessed;
use euledit_core::experiments::{
    run_concentration, run_events, run_independence, run_moments, write_csv, ExperimentReport,
};
use euledit_core::oracle::{enumerate_graphs, exact_edit_number, exact_edit_number_iddfs, exact_parity_stats};
use euledit_core::{
    eulerize, odd_degree_prob, parity_lower_bound, plan_edit, plan_extend, plan_reduce, sample_gnp,
    EditMode, Error, Graph, OracleValue, Seed,
};

const SEED: Seed = Seed(0x005e_ed0f_e41e);
const WORKERS: usize = 4;

type Check = fn() -> Outcome;
type Run = Box<dyn Fn(usize) -> ExperimentReport>;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

fn choose(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// P(Bin(n - 1, p) is odd) by direct summation.
fn odd_binomial(n: usize, p: f64) -> f64 {
    let trials = (n - 1) as u64;
    (1..=trials)
        .step_by(2)
        .map(|k| choose(trials, k) * p.powi(k as i32) * (1.0 - p).powi((trials - k) as i32))
        .sum()
}

fn exhaustive_oracle() -> Outcome {
    let started = Instant::now();
    let mut graphs = 0;
    let mut lb_violations = 0;
    let mut witnessed = 0;
    let mut witnessed_mismatch = 0;
    let mut successes = 0;
    let mut bad_successes = 0;
    for g in enumerate_graphs(5).unwrap() {
        graphs += 1;
        let lb = parity_lower_bound(&g);
        for mode in EditMode::ALL {
            let exact = exact_edit_number(&g, mode, 10).unwrap();
            if let OracleValue::Exact(k) = exact.value {
                if k < lb {
                    lb_violations += 1;
                }
            }
            if let Ok((h, plan)) = eulerize(&g, mode) {
                successes += 1;
                let circuit_ok = h.euler_circuit().map(|c| c.verify(&h).is_ok()).unwrap_or(false);
                let replay_ok = euledit_core::apply_plan(&g, &plan).map(|r| r == h).unwrap_or(false);
                if !h.is_eulerian() || !circuit_ok || !replay_ok {
                    bad_successes += 1;
                }
            }
        }
        if g.is_connected() {
            let plan = plan_edit(&g);
            if pairing_witnessed(&g, &plan) {
                witnessed += 1;
                let exact = exact_edit_number(&g, EditMode::Edit, 10).unwrap().exact();
                if exact != Some(plan.achieved()) {
                    witnessed_mismatch += 1;
                }
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    Outcome::new(
        graphs == 1024 && lb_violations == 0 && witnessed_mismatch == 0 && bad_successes == 0 && secs < 120.0,
        format!(
            "{graphs} graphs; (a) {lb_violations} bound violations; (b) {witnessed_mismatch} mismatches over {witnessed} witnessed graphs; (c) {bad_successes} bad of {successes} eulerize successes; {secs:.1}s"
        ),
    )
}

fn closed_form_parity() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=5 {
        for p in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let exact = exact_parity_stats(n, p, 1).unwrap().joint;
            let closed = odd_degree_prob(n, p).unwrap();
            let direct = odd_binomial(n, p);
            worst = worst.max((exact - closed).abs()).max((direct - closed).abs());
        }
    }
    let trials = 100_000;
    let odd = (0..trials)
        .filter(|&i| sample_gnp(4, 0.25, SEED.for_trial(i)).unwrap().degree(0) % 2 == 1)
        .count();
    let fraction = odd as f64 / trials as f64;
    let target = 0.4375;
    Outcome::new(
        worst <= 1e-12 && (fraction - target).abs() <= 0.005,
        format!("max closed-form error {worst:.2e}; vertex-0 odd fraction {fraction:.5} vs {target}"),
    )
}

fn moments() -> Outcome {
    let ns = [100, 200, 400];
    let second = run_moments(&ns, 0.5, 2, 5000, SEED, WORKERS).unwrap();
    let fourth = run_moments(&ns, 0.5, 4, 5000, SEED.derive(4), WORKERS).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (r2, r4) in second.moments().unwrap().iter().zip(fourth.moments().unwrap()) {
        let tol = 3.0 * r2.sd / (r2.trials as f64).sqrt();
        let target = r2.n as f64 / 2.0;
        let mean_ok = (r2.mu_hat - target).abs() <= tol;
        let q2_ok = (0.20..=0.30).contains(&r2.ratio);
        let q4_ok = (0.13..=0.25).contains(&r4.ratio);
        ok &= mean_ok && q2_ok && q4_ok;
        parts.push(format!(
            "n={} q2={:.4} q4={:.4} mu={:.2} (|d|={:.3} tol {:.3})",
            r2.n,
            r2.ratio,
            r4.ratio,
            r2.mu_hat,
            (r2.mu_hat - target).abs(),
            tol
        ));
    }
    Outcome::new(ok, parts.join("; "))
}

fn concentration() -> Outcome {
    let started = Instant::now();
    let report = run_concentration(400, 0.5, 300, 0.1, SEED, WORKERS).unwrap();
    let (_, s) = report.concentration().unwrap();
    let secs = started.elapsed().as_secs_f64();
    Outcome::new(
        s.in_window_fraction >= 0.99 && s.edit_at_lower_bound_fraction >= 0.99 && secs < 180.0,
        format!(
            "window [{:.1}, {:.1}]: in-window {:.4}, edit = T/2 without repair {:.4}; {secs:.1}s",
            s.window_lower, s.window_upper, s.in_window_fraction, s.edit_at_lower_bound_fraction
        ),
    )
}

fn events() -> Outcome {
    let report = run_events(200, 0.5, 500, 0.1, SEED, false, WORKERS).unwrap();
    let (_, s) = report.events().unwrap();
    let main_ok = s.freq_con == 1.0 && s.freq_good_h == 1.0 && s.freq_good_hc == 1.0 && s.freq_odd >= 0.99;
    let clique = run_events(40, 0.5, 100, 0.1, SEED, true, WORKERS).unwrap();
    let (_, c) = clique.events().unwrap();
    let flagged = clique.notes.iter().any(|n| n.contains("trivially"));
    let clique_ok = c.freq_cliq == Some(1.0) && c.clique_bound_trivial && flagged;
    Outcome::new(
        main_ok && clique_ok,
        format!(
            "con {} good_h {} good_hc {} odd {}; clique freq {:?} bound {:.1} trivial={} flagged={}",
            s.freq_con, s.freq_good_h, s.freq_good_hc, s.freq_odd, c.freq_cliq, c.clique_bound,
            c.clique_bound_trivial, flagged
        ),
    )
}

fn independence() -> Outcome {
    let large = run_independence(60, 0.5, 2, 100_000, SEED, WORKERS).unwrap();
    let l = large.independence().unwrap();
    let small = run_independence(5, 0.3, 2, 100_000, SEED.derive(5), WORKERS).unwrap();
    let s = small.independence().unwrap();
    let exact = s.exact_deviation.unwrap();
    let large_ok = l.deviation.abs() <= 0.01;
    let small_ok = (s.deviation - exact).abs() <= 3.0 * s.stderr;
    Outcome::new(
        large_ok && small_ok,
        format!(
            "n=60 deviation {:.5}; n=5 deviation {:.5} vs exact {:.5} (3 SE = {:.5})",
            l.deviation,
            s.deviation,
            exact,
            3.0 * s.stderr
        ),
    )
}

fn feasibility() -> Outcome {
    let mut failures = Vec::new();
    let mut parts = Vec::new();

    let k4 = plan_extend(&Graph::complete(4));
    parts.push(format!("extend(K4) {}", if matches!(k4, Err(Error::NotExtendable(_))) { "NotExtendable" } else { "?" }));
    if !matches!(k4, Err(Error::NotExtendable(_))) {
        failures.push("extend(K4)");
    }

    let path = plan_reduce(&Graph::path(3));
    parts.push(format!("reduce(P3) {}", if matches!(path, Err(Error::NotReducible(_))) { "NotReducible" } else { "?" }));
    if !matches!(path, Err(Error::NotReducible(_))) {
        failures.push("reduce(P3)");
    }

    let tri_iso = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let (h, plan) = eulerize(&tri_iso, EditMode::Edit).unwrap();
    let bfs = exact_edit_number(&tri_iso, EditMode::Edit, 10).unwrap().exact();
    let iddfs = exact_edit_number_iddfs(&tri_iso, EditMode::Edit, 10).unwrap().exact();
    parts.push(format!(
        "triangle+isolated achieved {} (oracle {:?}/{:?}, expected 2)",
        plan.achieved(),
        bfs,
        iddfs
    ));
    if !h.is_eulerian() || bfs != Some(plan.achieved()) || iddfs != bfs {
        failures.push("triangle+isolated oracle agreement");
    }
    if plan.achieved() != 2 {
        failures.push("triangle+isolated achieved 2");
    }

    let empty = Graph::new(5);
    let (h, plan) = eulerize(&empty, EditMode::Edit).unwrap();
    let exact = exact_edit_number(&empty, EditMode::Edit, 10).unwrap().exact();
    let spanning_cycle = h == Graph::cycle(5);
    parts.push(format!("empty(5) achieved {} (oracle {:?}) cycle={spanning_cycle}", plan.achieved(), exact));
    if !spanning_cycle || plan.achieved() != 5 || exact != Some(5) {
        failures.push("empty(5)");
    }

    let mut detail = parts.join("; ");
    if !failures.is_empty() {
        detail.push_str(&format!("; failed: {}", failures.join(", ")));
    }
    Outcome::new(failures.is_empty(), detail)
}

fn body(report: &ExperimentReport) -> String {
    let mut out = Vec::new();
    write_csv(report, &mut out).unwrap();
    String::from_utf8(out)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let runs: [(&str, Run); 4] = [
        ("concentration", Box::new(|w| run_concentration(80, 0.5, 40, 0.1, SEED, w).unwrap())),
        ("moments", Box::new(|w| run_moments(&[50, 100], 0.5, 4, 300, SEED, w).unwrap())),
        ("events", Box::new(|w| run_events(30, 0.5, 60, 0.1, SEED, true, w).unwrap())),
        ("independence", Box::new(|w| run_independence(20, 0.3, 3, 2000, SEED, w).unwrap())),
    ];
    let mut differing = Vec::new();
    for (name, run) in &runs {
        if body(&run(1)) != body(&run(4)) {
            differing.push(*name);
        }
    }
    Outcome::new(
        differing.is_empty(),
        if differing.is_empty() {
            "all four experiments byte-identical for workers 1 and 4".to_string()
        } else {
            format!("bodies differ for {}", differing.join(", "))
        },
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("exhaustive oracle equivalence, n = 5", exhaustive_oracle),
        ("closed-form odd-degree probability", closed_form_parity),
        ("odd-count moments at p = 1/2", moments),
        ("concentration at n = 400", concentration),
        ("structural event frequencies", events),
        ("near-independence of parities", independence),
        ("feasibility edge cases", feasibility),
        ("determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
