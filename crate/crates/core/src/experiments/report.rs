//! CSV output.
//!
//! A report is a `#`-prefixed preamble (parameters, window flags, notes and
//! wall-clock time) followed by a plain CSV body. Only the body is covered
//! by the determinism contract.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sampler::ProbabilityWindow;

use super::{ExperimentReport, ReportBody};

/// Decimal rendering rounded to 12 significant digits.
pub fn format_sig(x: f64) -> String {
    if x.is_nan() {
        return "NA".into();
    }
    if x.is_infinite() || x == 0.0 {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

fn window_line(w: &ProbabilityWindow) -> String {
    format!(
        "# window n={} p={} regime={} strong_ok={} weak_ok={} strong=[{}, {}] weak=[{}, {}] log={}",
        w.n,
        format_sig(w.p),
        w.regime(),
        w.strong_ok,
        w.weak_ok,
        format_sig(w.strong_lower),
        format_sig(w.strong_upper),
        format_sig(w.weak_lower),
        format_sig(w.weak_upper),
        ProbabilityWindow::LOG_BASE,
    )
}

/// Writes the preamble and CSV body of `report`.
pub fn write_csv<W: Write>(report: &ExperimentReport, out: W) -> io::Result<()> {
    let mut out = out;
    writeln!(out, "# experiment={}", report.kind)?;
    for (key, value) in &report.parameters {
        writeln!(out, "# param {key}={value}")?;
    }
    for w in &report.windows {
        writeln!(out, "{}", window_line(w))?;
    }
    for note in &report.notes {
        writeln!(out, "# note {note}")?;
    }
    writeln!(out, "# duration_ms={}", report.duration.as_millis())?;

    let mut csv = csv::Writer::from_writer(out);
    match &report.body {
        ReportBody::Concentration { trials, summary } => {
            csv.write_record([
                "trial", "seed", "n", "p", "T", "edit", "ext", "red", "repair_edit", "repair_ext",
                "repair_red", "in_window",
            ])?;
            for r in trials {
                csv.write_record([
                    r.trial.to_string(),
                    r.seed.0.to_string(),
                    r.n.to_string(),
                    format_sig(r.p),
                    r.odd_count.to_string(),
                    opt(r.edit.achieved),
                    opt(r.ext.achieved),
                    opt(r.red.achieved),
                    r.edit.repair_ops.to_string(),
                    r.ext.repair_ops.to_string(),
                    r.red.repair_ops.to_string(),
                    flag(r.in_window).to_string(),
                ])?;
            }
            if let Some(first) = trials.first() {
                let [edit, ext, red] = summary.mean_achieved.map(format_sig);
                let [r_edit, r_ext, r_red] = summary.mean_repair_ops.map(format_sig);
                let master = report
                    .parameters
                    .iter()
                    .find(|(k, _)| k == "seed")
                    .map(|(_, v)| v.clone())
                    .unwrap_or_default();
                csv.write_record([
                    "mean".to_string(),
                    master,
                    first.n.to_string(),
                    format_sig(first.p),
                    format_sig(summary.mean_odd_count),
                    edit,
                    ext,
                    red,
                    r_edit,
                    r_ext,
                    r_red,
                    format_sig(summary.in_window_fraction),
                ])?;
            }
        }
        ReportBody::Moments(rows) => {
            csv.write_record(["n", "p", "q", "trials", "mu_hat", "moment_q", "ratio"])?;
            for r in rows {
                csv.write_record([
                    r.n.to_string(),
                    format_sig(r.p),
                    r.q.to_string(),
                    r.trials.to_string(),
                    format_sig(r.mu_hat),
                    format_sig(r.moment_q),
                    format_sig(r.ratio),
                ])?;
            }
        }
        ReportBody::Events { trials, summary } => {
            csv.write_record([
                "trial", "e_con", "e_odd", "e_good_h", "e_good_hc", "e_cliq", "residual_x",
                "residual_y",
            ])?;
            for r in trials {
                csv.write_record([
                    r.trial.to_string(),
                    flag(r.e_con).to_string(),
                    flag(r.e_odd).to_string(),
                    flag(r.e_good_h).to_string(),
                    flag(r.e_good_hc).to_string(),
                    r.e_cliq.map(|b| flag(b).to_string()).unwrap_or_default(),
                    opt(r.residual_x),
                    opt(r.residual_y),
                ])?;
            }
            if !trials.is_empty() {
                csv.write_record([
                    "freq".to_string(),
                    format_sig(summary.freq_con),
                    format_sig(summary.freq_odd),
                    format_sig(summary.freq_good_h),
                    format_sig(summary.freq_good_hc),
                    summary.freq_cliq.map(format_sig).unwrap_or_default(),
                    format_sig(summary.mean_residual_x),
                    format_sig(summary.mean_residual_y),
                ])?;
            }
        }
        ReportBody::Independence(s) => {
            csv.write_record([
                "n", "p", "b", "trials", "joint_hat", "product_hat", "deviation", "stderr",
                "exact_deviation",
            ])?;
            csv.write_record([
                s.n.to_string(),
                format_sig(s.p),
                s.b.to_string(),
                s.trials.to_string(),
                format_sig(s.joint_hat),
                format_sig(s.product_hat),
                format_sig(s.deviation),
                format_sig(s.stderr),
                s.exact_deviation.map(format_sig).unwrap_or_default(),
            ])?;
        }
    }
    csv.flush()
}

/// Writes `report` to `path`, attaching the path to any I/O error.
pub fn write_report(report: &ExperimentReport, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut buf = BufWriter::new(file);
    write_csv(report, &mut buf).map_err(|e| Error::io(path, e))?;
    buf.flush().map_err(|e| Error::io(path, e))
}
