//! `euledit`: sample graphs, plan Eulerian edits, verify plans, run oracles
//! and Monte Carlo experiments.
//!
//! Exit status is 0 on success, 1 when the answer is "no Eulerian graph is
//! reachable" (or the oracle ran out of budget), and 2 on usage or I/O
//! errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use euledit_core::experiments::{
    run_concentration, run_events, run_independence, run_moments, write_csv, write_report,
    ExperimentReport, ReportBody,
};
use euledit_core::io::{format_edge_list, format_plan, read_graph, read_plan};
use euledit_core::oracle::exact_edit_number;
use euledit_core::{eulerize, sample_gnp, verify_plan, EditMode, EditPlan, OracleValue, Seed};

const DEFAULT_SEED: u64 = 0x5EED_2024;

#[derive(Parser, Debug)]
#[command(name = "euledit", version, about = "Eulerian edit planning for simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample G(n, p) and write it as an edge list.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = probability)]
        p: f64,
        #[arg(long, default_value_t = Seed(DEFAULT_SEED))]
        seed: Seed,
        /// Output path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plan toggles that make a graph Eulerian.
    Eulerize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = EditMode::Edit)]
        mode: EditMode,
        #[arg(long)]
        plan_out: Option<PathBuf>,
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Replay a plan and check that the result is Eulerian.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        plan: PathBuf,
    },
    /// Print an Eulerian circuit.
    Circuit {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact minimum number of toggles, for graphs with at most 11 vertices.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = EditMode::Edit)]
        mode: EditMode,
        /// Maximum search depth.
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
    /// Monte Carlo experiments on G(n, p).
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// Edit numbers of every mode against the window n/4 ± n^(1/2+eta).
    Concentration {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        eta: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Normalized central moments of the odd-vertex count.
    Moments {
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Connectivity, odd-count, common-neighbor and clique events.
    Events {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Compute exact clique numbers (n <= 64).
        #[arg(long)]
        exact_clique: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Joint versus product odd-degree frequencies of the first b vertices.
    Independence {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_parser = probability)]
    p: f64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = Seed(DEFAULT_SEED))]
    seed: Seed,
    /// Report path; stdout if omitted.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Worker threads; the output does not depend on this.
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a decimal number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is outside [0, 1]"))
    }
}

/// Result kinds that map to exit status 1.
#[derive(Debug)]
struct Negative(String);

impl std::fmt::Display for Negative {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Negative {}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn sample(n: usize, p: f64, seed: Seed, out: Option<PathBuf>) -> Result<()> {
    let g = sample_gnp(n, p, seed)?;
    let text = format!("# sample n={n} p={p} seed={seed}\n{}", format_edge_list(&g));
    match out {
        Some(path) => write_text(&path, &text),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn plan_or_negative(result: euledit_core::Result<(euledit_core::Graph, EditPlan)>) -> Result<(euledit_core::Graph, EditPlan)> {
    result.map_err(|e| {
        if e.is_infeasible() {
            anyhow::Error::new(Negative(e.to_string()))
        } else {
            e.into()
        }
    })
}

fn eulerize_cmd(input: &Path, mode: EditMode, plan_out: Option<PathBuf>, graph_out: Option<PathBuf>) -> Result<()> {
    let g = read_graph(input)?;
    println!("# eulerize in={} mode={mode} n={} m={}", input.display(), g.n(), g.m());
    let (h, plan) = plan_or_negative(eulerize(&g, mode))?;
    let text = format_plan(&plan);
    print!("{text}");
    if let Some(path) = plan_out {
        write_text(&path, &text)?;
    }
    if let Some(path) = graph_out {
        write_text(&path, &format_edge_list(&h))?;
    }
    Ok(())
}

fn verify_cmd(input: &Path, plan_path: &Path) -> Result<()> {
    let g = read_graph(input)?;
    let ops = read_plan(plan_path)?;
    println!("# verify in={} plan={}", input.display(), plan_path.display());
    let report = verify_plan(&g, &EditPlan::replay(&g, ops))
        .with_context(|| format!("plan {} does not apply to {}", plan_path.display(), input.display()))?;
    let failed = report
        .failed_condition
        .map_or_else(|| "none".to_string(), |c| c.to_string());
    println!("eulerian={} failed={failed} final_t={}", report.eulerian, report.final_t);
    if report.eulerian {
        Ok(())
    } else {
        Err(Negative(format!("result is not Eulerian ({failed})")).into())
    }
}

fn circuit_cmd(input: &Path) -> Result<()> {
    let g = read_graph(input)?;
    let circuit = g.euler_circuit().map_err(|e| Negative(e.to_string()))?;
    let walk: Vec<String> = circuit.walk().iter().map(|v| v.to_string()).collect();
    println!("# circuit in={} n={} m={}", input.display(), g.n(), g.m());
    println!("{}", walk.join(" "));
    Ok(())
}

fn oracle_cmd(input: &Path, mode: EditMode, budget: usize) -> Result<()> {
    let g = read_graph(input)?;
    println!("# oracle in={} mode={mode} budget={budget}", input.display());
    let result = exact_edit_number(&g, mode, budget)?;
    match result.value {
        OracleValue::Exact(k) => {
            println!("EXACT {k}");
            if let Some(plan) = result.witness {
                for op in plan.ops {
                    println!("{op}");
                }
            }
            Ok(())
        }
        OracleValue::Infeasible => {
            println!("INFEASIBLE");
            Err(Negative(format!("no Eulerian graph reachable in {mode} mode")).into())
        }
        OracleValue::BudgetExhausted => {
            println!("BUDGET_EXHAUSTED");
            Err(Negative(format!("no Eulerian graph within {budget} toggles")).into())
        }
    }
}

fn summary_lines(report: &ExperimentReport) -> Vec<String> {
    match &report.body {
        ReportBody::Concentration { summary: s, .. } => vec![
            format!("in_window_fraction={}", s.in_window_fraction),
            format!("edit_at_lower_bound_fraction={}", s.edit_at_lower_bound_fraction),
            format!("mean_achieved edit={} ext={} red={}", s.mean_achieved[0], s.mean_achieved[1], s.mean_achieved[2]),
        ],
        ReportBody::Moments(rows) => rows
            .iter()
            .map(|r| format!("n={} mu_hat={} ratio={}", r.n, r.mu_hat, r.ratio))
            .collect(),
        ReportBody::Events { summary: s, .. } => vec![format!(
            "con={} odd={} good_h={} good_hc={} cliq={}",
            s.freq_con,
            s.freq_odd,
            s.freq_good_h,
            s.freq_good_hc,
            s.freq_cliq.map_or_else(|| "skipped".into(), |f| f.to_string())
        )],
        ReportBody::Independence(s) => vec![format!("deviation={} stderr={}", s.deviation, s.stderr)],
    }
}

fn experiment_cmd(experiment: Experiment) -> Result<()> {
    let (report, csv) = match experiment {
        Experiment::Concentration { n, eta, common: c } => {
            (run_concentration(n, c.p, c.trials, eta, c.seed, c.workers)?, c.csv)
        }
        Experiment::Moments { n, q, common: c } => (run_moments(&n, c.p, q, c.trials, c.seed, c.workers)?, c.csv),
        Experiment::Events { n, eps, exact_clique, common: c } => (
            run_events(n, c.p, c.trials, eps, c.seed, exact_clique, c.workers)?,
            c.csv,
        ),
        Experiment::Independence { n, b, common: c } => {
            (run_independence(n, c.p, b, c.trials, c.seed, c.workers)?, c.csv)
        }
    };
    match csv {
        Some(path) => {
            write_report(&report, &path)?;
            println!("# wrote {}", path.display());
            for line in summary_lines(&report) {
                println!("{line}");
            }
        }
        None => write_csv(&report, io::stdout().lock())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sample { n, p, seed, out } => sample(n, p, seed, out),
        Command::Eulerize { input, mode, plan_out, graph_out } => eulerize_cmd(&input, mode, plan_out, graph_out),
        Command::Verify { input, plan } => verify_cmd(&input, &plan),
        Command::Circuit { input } => circuit_cmd(&input),
        Command::Oracle { input, mode, budget } => oracle_cmd(&input, mode, budget),
        Command::Experiment(experiment) => experiment_cmd(experiment),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if let Some(negative) = err.downcast_ref::<Negative>() {
                eprintln!("{negative}");
                ExitCode::from(1)
            } else {
                eprintln!("error: {err:#}");
                ExitCode::from(2)
            }
        }
    }
}
