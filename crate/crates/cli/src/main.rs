//! `hoc`: runs convergence studies, stability scans and price checks from a
//! JSON config and writes a CSV table plus a run manifest next to it.
//!
//! Exit codes: 0 on success, 2 for invalid input (flags, config, parameters,
//! output path), 3 when the numerics fail (solver breakdown, non-finite
//! values).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hoc_core::black_scholes::MarketParams;
use hoc_core::harness::{
    run_basket_convergence, run_manufactured, run_price_check, smoothing_preview, Arm, BasketStudy,
    ConvergenceReport, ManufacturedStudy, PriceCheck,
};
use hoc_core::hoc_stencil::Scheme;
use hoc_core::stability::{scan_stability, ScanConfig};
use hoc_core::Error;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hoc", version, about = "Compact fourth-order schemes for parabolic equations with mixed derivatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON experiment configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// CSV output path; the manifest goes next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for Monte Carlo runs.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Schemes to run.
    #[arg(long, global = true, value_enum, default_value_t = ArmArg::Both)]
    arm: ArmArg,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Basket put convergence against a fine-grid reference.
    Convergence,
    /// Convergence against a manufactured exact solution.
    Manufactured,
    /// Von Neumann scan over frozen coefficients.
    Stability,
    /// Raw and smoothed payoff on a grid.
    SmoothPreview,
    /// PDE price against Monte Carlo.
    McCheck,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Convergence => "convergence",
            Command::Manufactured => "manufactured",
            Command::Stability => "stability",
            Command::SmoothPreview => "smooth-preview",
            Command::McCheck => "mc-check",
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum ArmArg {
    Hoc,
    Baseline,
    Both,
}

impl From<ArmArg> for Arm {
    fn from(a: ArmArg) -> Self {
        match a {
            ArmArg::Hoc => Arm::Hoc,
            ArmArg::Baseline => Arm::Baseline,
            ArmArg::Both => Arm::Both,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PreviewConfig {
    market: MarketParams,
    #[serde(default)]
    bounds: Option<Vec<(f64, f64)>>,
    cells: usize,
}

enum Failure {
    Invalid(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut root = &e;
        while let Error::Step { source, .. } = root {
            root = source;
        }
        match root {
            Error::MaxIterations { .. } | Error::Breakdown { .. } | Error::NonFinite(_) | Error::DegenerateSymbol(_) => {
                Failure::Numerical(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn write(&self, path: &Path) -> Result<(), Failure> {
        let io = |e: csv::Error| Failure::Invalid(format!("writing {}: {e}", path.display()));
        let mut w = csv::Writer::from_path(path).map_err(io)?;
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        w.flush().map_err(|e| Failure::Invalid(format!("writing {}: {e}", path.display())))
    }
}

fn load<T: DeserializeOwned>(path: Option<&Path>) -> Result<(T, Value), Failure> {
    let path = path.ok_or_else(|| Failure::Invalid("--config is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("reading {}: {e}", path.display())))?;
    let raw: Value = serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let cfg = serde_json::from_value(raw.clone()).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok((cfg, raw))
}

fn scheme_name(s: Scheme) -> &'static str {
    match s {
        Scheme::Hoc => "hoc",
        Scheme::Baseline => "baseline",
    }
}

fn convergence_table(r: &ConvergenceReport) -> (Table, Value) {
    let mut t = Table::new(&["scheme", "cells", "h", "dt", "steps", "l2", "linf"]);
    for l in &r.levels {
        t.rows.push(vec![
            scheme_name(l.scheme).into(),
            l.cells.to_string(),
            l.h.to_string(),
            l.dt.to_string(),
            l.steps.to_string(),
            l.l2.to_string(),
            l.linf.to_string(),
        ]);
    }
    let orders: Vec<Value> = r
        .orders
        .iter()
        .map(|o| json!({ "scheme": scheme_name(o.scheme), "l2": o.l2, "linf": o.linf }))
        .collect();
    let timings: Vec<Value> = r
        .levels
        .iter()
        .map(|l| json!({ "scheme": scheme_name(l.scheme), "cells": l.cells, "seconds": l.seconds }))
        .collect();
    for o in &r.orders {
        println!("{} order: l2 {:.3}, linf {:.3}", scheme_name(o.scheme), o.l2, o.linf);
    }
    (t, json!({ "orders": orders, "timings": timings }))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let arm: Arm = cli.arm.into();
    let cfg_path = cli.config.as_deref();
    let out = cli
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", cli.command.name())));
    let start = Instant::now();
    let (table, config, summary) = match cli.command {
        Command::Convergence => {
            let (study, raw): (BasketStudy, _) = load(cfg_path)?;
            let (t, s) = convergence_table(&run_basket_convergence(&study, arm)?);
            (t, raw, s)
        }
        Command::Manufactured => {
            let (study, raw): (ManufacturedStudy, _) = load(cfg_path)?;
            let (t, s) = convergence_table(&run_manufactured(&study, arm)?);
            (t, raw, s)
        }
        Command::Stability => {
            let (scan, raw): (ScanConfig, _) = load(cfg_path)?;
            let mut t = Table::new(&["scheme", "sample", "a", "b12", "b13", "b23", "c1", "c2", "c3", "h", "lambda", "z", "excess"]);
            let mut worst = Vec::new();
            for scheme in arm.schemes() {
                let r = scan_stability(&scan, scheme)?;
                for row in &r.rows {
                    let z: Vec<String> = row.z.iter().map(f64::to_string).collect();
                    let mut rec = vec![scheme_name(scheme).to_string(), row.sample.to_string(), row.a.to_string()];
                    rec.extend(row.b.iter().chain(&row.c).map(f64::to_string));
                    rec.extend([row.h.to_string(), row.lambda.to_string(), z.join(" "), row.excess.to_string()]);
                    t.rows.push(rec);
                }
                println!("{} max(|G|^2 - 1) = {:e} ({} points skipped)", scheme_name(scheme), r.max_excess(), r.skipped);
                worst.push(json!({ "scheme": scheme_name(scheme), "max_excess": r.max_excess(), "skipped": r.skipped }));
            }
            (t, raw, json!({ "worst": worst }))
        }
        Command::SmoothPreview => {
            let (p, raw): (PreviewConfig, _) = load(cfg_path)?;
            let rows = smoothing_preview(&p.market, p.bounds.as_deref(), p.cells)?;
            let dim = p.market.dim();
            let mut header: Vec<String> = vec!["node".into()];
            header.extend((1..=dim).map(|k| format!("x{k}")));
            header.extend(["raw", "smoothed", "in_set"].map(String::from));
            let mut t = Table { header, rows: Vec::new() };
            let mut count = 0;
            for r in &rows {
                let mut rec = vec![r.node.to_string()];
                rec.extend(r.x.iter().map(f64::to_string));
                rec.extend([r.raw.to_string(), r.smoothed.to_string(), r.in_set.to_string()]);
                t.rows.push(rec);
                count += r.in_set as usize;
            }
            println!("{count} of {} nodes smoothed", rows.len());
            (t, raw, json!({ "smoothed_nodes": count }))
        }
        Command::McCheck => {
            let (check, raw): (PriceCheck, _) = load(cfg_path)?;
            let mut t = Table::new(&["scheme", "pde", "mc", "se", "z"]);
            for r in run_price_check(&check, arm, cli.seed)? {
                println!("{}: pde {:.6}, mc {:.6} ± {:.6} ({:+.2} se)", scheme_name(r.scheme), r.pde, r.mc, r.se, r.z);
                t.rows.push(vec![
                    scheme_name(r.scheme).into(),
                    r.pde.to_string(),
                    r.mc.to_string(),
                    r.se.to_string(),
                    r.z.to_string(),
                ]);
            }
            (t, raw, Value::Null)
        }
    };
    table.write(&out)?;
    let manifest = json!({
        "tool": "hoc",
        "version": env!("CARGO_PKG_VERSION"),
        "command": cli.command.name(),
        "config": config,
        "seed": cli.seed,
        "threads": rayon::current_num_threads(),
        "arm": serde_json::to_value(arm).unwrap_or(Value::Null),
        "output": out.display().to_string(),
        "wall_seconds": start.elapsed().as_secs_f64(),
        "summary": summary,
    });
    let mpath = out.with_extension("manifest.json");
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| Failure::Invalid(e.to_string()))?;
    fs::write(&mpath, text).map_err(|e| Failure::Invalid(format!("writing {}: {e}", mpath.display())))?;
    println!("wrote {} and {}", out.display(), mpath.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 || rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            eprintln!("error: cannot start {n} worker threads");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(m)) => {
            eprintln!("numerical failure: {m}");
            ExitCode::from(3)
        }
    }
}
