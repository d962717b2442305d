//! Text formats.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with `u < v < n`. Plan: one op per line, `ADD u v` or `DEL u v`.
//! In both, blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::editors::{EditOp, EditPlan};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} {tok:?} is not a non-negative integer")))
}

fn no_trailing<'a>(line: usize, mut toks: impl Iterator<Item = &'a str>) -> Result<()> {
    match toks.next() {
        Some(extra) => Err(Error::parse(line, format!("unexpected trailing token {extra:?}"))),
        None => Ok(()),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing \"n m\" header"))?;
    let mut toks = header.split_whitespace();
    let n = parse_num(hline, toks.next(), "vertex count")?;
    let m = parse_num(hline, toks.next(), "edge count")?;
    no_trailing(hline, toks)?;

    let mut g = Graph::new(n);
    let mut last = hline;
    for (line, body) in lines {
        last = line;
        if g.m() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let mut toks = body.split_whitespace();
        let u = parse_num(line, toks.next(), "endpoint")?;
        let v = parse_num(line, toks.next(), "endpoint")?;
        no_trailing(line, toks)?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at {u}")));
        }
        if !g.insert_edge(u, v) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
    }
    if g.m() != m {
        return Err(Error::parse(
            last,
            format!("header declares {m} edges but {} were listed", g.m()),
        ));
    }
    Ok(g)
}

/// Canonical edge list, edges in lexicographic order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_plan(text: &str) -> Result<Vec<EditOp>> {
    content_lines(text)
        .map(|(line, body)| {
            let mut toks = body.split_whitespace();
            let word = toks.next().unwrap_or_default();
            let u = parse_num(line, toks.next(), "endpoint")?;
            let v = parse_num(line, toks.next(), "endpoint")?;
            no_trailing(line, toks)?;
            if u == v {
                return Err(Error::parse(line, format!("self-loop at {u}")));
            }
            match word {
                "ADD" => Ok(EditOp::add(u, v)),
                "DEL" => Ok(EditOp::remove(u, v)),
                other => Err(Error::parse(line, format!("unknown op {other:?}, expected ADD or DEL"))),
            }
        })
        .collect()
}

/// Plan text with a commented summary header.
pub fn format_plan(plan: &EditPlan) -> String {
    let mut out = format!(
        "# mode={} lower_bound={} achieved={} repair_ops={}\n",
        plan.mode,
        plan.lower_bound,
        plan.achieved(),
        plan.repair_ops
    );
    if !plan.residual.is_empty() {
        let residual: Vec<String> = plan.residual.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "# residual={}", residual.join(","));
    }
    for op in &plan.ops {
        let _ = writeln!(out, "{op}");
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::io(path, format!("line {line}: {message}")),
        other => other,
    })
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_edge_list(g)).map_err(|e| Error::io(path, e))
}

pub fn read_plan(path: impl AsRef<Path>) -> Result<Vec<EditOp>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_plan(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::io(path, format!("line {line}: {message}")),
        other => other,
    })
}
