//! The `wormbound` command line.
//!
//! Every subcommand prints one JSON object on stdout. Exit codes: 0 success,
//! 1 internal error, 2 certification failed, 3 invalid arguments or plan.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{certify_theorem, grid_error_bound, CertifyMethod, BNB_DEFAULT_RESOLUTION};
use crate::configuration::{config_points, in_k1, in_k2, mu, Config, DomainBox, Interval, PARAM_NAMES};
use crate::geometry::convex_hull;
use crate::io::{heatmap_file, surface_rows, write_surface_csv_file, IoError};
use crate::search::{
    conjecture_search, run_plan, run_plan_with_surface, surface_min, PivotParams, SearchError, SearchPlan,
    StageSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_NOT_CERTIFIED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "WORMBOUND_THREADS";

/// Full-grid cell width used when `verify --method grid` gets no `--resolution`.
const GRID_DEFAULT_RESOLUTION: f64 = 2e-4;

#[derive(Debug, Parser)]
#[command(name = "wormbound", version, about = "Hull-area lower bounds for the worm problem")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Grid,
    Bnb,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hull area of one configuration.
    Hull {
        /// x1,y1,alpha,x2,y2,beta; angles in radians or with a `deg` suffix.
        #[arg(long, allow_hyphen_values = true)]
        config: String,
    },
    /// Certify p(alpha, beta) >= target over the K1 angle window.
    Verify {
        #[arg(long)]
        target: f64,
        #[arg(long, value_enum, default_value = "bnb")]
        method: MethodArg,
        /// Cell width (grid) or smallest split width (bnb), radians.
        #[arg(long)]
        resolution: Option<f64>,
        /// Also write the certificate JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grid-search error bound for coordinate step d1 and angle step d2.
    ErrorBound {
        #[arg(long)]
        d1: f64,
        #[arg(long)]
        d2: f64,
    },
    /// Run a JSON search plan.
    Search {
        #[arg(long)]
        plan: PathBuf,
        /// Write the final stage's per-(x2, y2) surface as CSV.
        #[arg(long)]
        surface_out: Option<PathBuf>,
    },
    /// Two-angle pivot search, coarse scan then zoom to the final step.
    Conjecture {
        #[arg(long)]
        coarse: f64,
        #[arg(long = "final")]
        final_step: f64,
    },
    /// Per-cell minimum surface over (x2, y2), written as CSV.
    Surface {
        /// e.g. x1=0.6:0.72,y1=0.14:0.235,alpha=45deg:78deg,x2=...,y2=...,beta=...
        #[arg(long = "box", allow_hyphen_values = true)]
        bbox: String,
        /// nx,ny
        #[arg(long)]
        cells: String,
        #[arg(long)]
        d1: f64,
        #[arg(long)]
        d2: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a surface CSV as an SVG heatmap.
    Heatmap {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<crate::bounds::BoundsError> for Failure {
    fn from(e: crate::bounds::BoundsError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::MalformedRow { .. } | IoError::Empty => Failure::Invalid(e.to_string()),
            IoError::File { .. } | IoError::Write(_) => Failure::Internal(e.to_string()),
        }
    }
}

fn parse_number(text: &str, angle: bool) -> Result<f64, Failure> {
    let t = text.trim();
    let (num, deg) = match t.strip_suffix("deg") {
        Some(n) if angle => (n.trim(), true),
        Some(_) => return Err(Failure::Invalid(format!("`deg` suffix only applies to angles: {t:?}"))),
        None => (t, false),
    };
    let v: f64 = num.parse().map_err(|_| Failure::Invalid(format!("not a number: {t:?}")))?;
    if !v.is_finite() {
        return Err(Failure::Invalid(format!("not finite: {t:?}")));
    }
    Ok(if deg { v.to_radians() } else { v })
}

fn is_angle(k: usize) -> bool {
    PARAM_NAMES[k] == "alpha" || PARAM_NAMES[k] == "beta"
}

/// `x1,y1,alpha,x2,y2,beta`, angles optionally suffixed with `deg`.
pub fn parse_config(text: &str) -> Result<Config, String> {
    parse_config_inner(text).map_err(failure_text)
}

fn parse_config_inner(text: &str) -> Result<Config, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 6 {
        return Err(Failure::Invalid(format!("expected 6 comma-separated values, got {}", parts.len())));
    }
    let mut v = [0.0; 6];
    for (k, p) in parts.iter().enumerate() {
        v[k] = parse_number(p, is_angle(k))?;
    }
    Config::try_from_array(v).map_err(|e| Failure::Invalid(e.to_string()))
}

/// `name=lo:hi` for all six parameters, comma separated, in any order. A lone
/// value `name=v` gives a degenerate interval.
pub fn parse_box(text: &str) -> Result<DomainBox, String> {
    parse_box_inner(text).map_err(failure_text)
}

fn parse_box_inner(text: &str) -> Result<DomainBox, Failure> {
    let mut slots: [Option<Interval>; 6] = [None; 6];
    for item in text.split(',') {
        let (name, range) = item
            .split_once('=')
            .ok_or_else(|| Failure::Invalid(format!("expected name=lo:hi, got {item:?}")))?;
        let k = PARAM_NAMES
            .iter()
            .position(|n| *n == name.trim())
            .ok_or_else(|| Failure::Invalid(format!("unknown parameter {name:?}")))?;
        if slots[k].is_some() {
            return Err(Failure::Invalid(format!("parameter {name:?} given twice")));
        }
        let iv = match range.split_once(':') {
            Some((lo, hi)) => Interval::new(parse_number(lo, is_angle(k))?, parse_number(hi, is_angle(k))?),
            None => Interval::point(parse_number(range, is_angle(k))?),
        };
        slots[k] = Some(iv);
    }
    let mut out = [Interval::point(0.0); 6];
    for (k, s) in slots.iter().enumerate() {
        out[k] = s.ok_or_else(|| Failure::Invalid(format!("missing parameter {}", PARAM_NAMES[k])))?;
    }
    let b = DomainBox::from_intervals(out);
    b.validate().map_err(|e| Failure::Invalid(e.to_string()))?;
    Ok(b)
}

fn parse_cells(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Invalid(format!("expected nx,ny with positive integers, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let nx: usize = a.trim().parse().map_err(|_| bad())?;
    let ny: usize = b.trim().parse().map_err(|_| bad())?;
    if nx == 0 || ny == 0 {
        return Err(bad());
    }
    Ok((nx, ny))
}

fn failure_text(f: Failure) -> String {
    match f {
        Failure::Invalid(s) | Failure::Internal(s) => s,
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn configure_threads() -> Result<(), Failure> {
    let Some(raw) = std::env::var_os(THREADS_ENV) else {
        return Ok(());
    };
    let n = raw
        .to_str()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Invalid(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // A pool built earlier in the same process wins; that only happens in tests.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Output object and exit code for a parsed command.
fn execute(cmd: Command) -> Result<(Value, i32), Failure> {
    match cmd {
        Command::Hull { config } => {
            let c = parse_config_inner(&config)?;
            let hull = convex_hull(&config_points(&c)).map_err(|e| Failure::Invalid(e.to_string()))?;
            let vertices: Vec<[f64; 2]> = hull.vertices().iter().map(|p| [p.x, p.y]).collect();
            Ok((
                json!({
                    "config": to_value(&c)?,
                    "area": mu(&c),
                    "hull": vertices,
                    "in_k1": in_k1(&c),
                    "in_k2": in_k2(&c),
                }),
                EXIT_OK,
            ))
        }
        Command::Verify {
            target,
            method,
            resolution,
            out,
        } => {
            let (m, default) = match method {
                MethodArg::Grid => (CertifyMethod::FullGrid, GRID_DEFAULT_RESOLUTION),
                MethodArg::Bnb => (CertifyMethod::BranchAndBound, BNB_DEFAULT_RESOLUTION),
            };
            let cert = certify_theorem(target, m, resolution.unwrap_or(default))?;
            let value = to_value(&cert)?;
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&cert).map_err(|e| Failure::Internal(e.to_string()))?;
                std::fs::write(&path, text + "\n")
                    .map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
            }
            let code = if cert.is_certified() { EXIT_OK } else { EXIT_NOT_CERTIFIED };
            Ok((value, code))
        }
        Command::ErrorBound { d1, d2 } => Ok((to_value(&grid_error_bound(d1, d2)?)?, EXIT_OK)),
        Command::Search { plan, surface_out } => {
            let text = std::fs::read_to_string(&plan)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", plan.display())))?;
            let plan = SearchPlan::from_json(&text)?;
            let result = match &surface_out {
                Some(path) => {
                    let (r, surface) = run_plan_with_surface(&plan)?;
                    write_surface_csv_file(&surface, path)?;
                    r
                }
                None => run_plan(&plan)?,
            };
            let (d1, d2) = plan.stages.last().map(StageSpec::steps).expect("validated plan");
            let mut value = to_value(&result)?;
            value["error_bound"] = to_value(&grid_error_bound(d1, d2)?)?;
            Ok((value, EXIT_OK))
        }
        Command::Conjecture { coarse, final_step } => {
            let r = conjecture_search(coarse, final_step)?;
            let mut value = to_value(&r)?;
            value["pivot"] = to_value(&PivotParams::fit(&r.best))?;
            Ok((value, EXIT_OK))
        }
        Command::Surface {
            bbox,
            cells,
            d1,
            d2,
            out,
        } => {
            let b = parse_box_inner(&bbox)?;
            let cells = parse_cells(&cells)?;
            let surface = surface_min(b, cells, d1, d2)?;
            write_surface_csv_file(&surface, &out)?;
            let rows = surface_rows(&surface);
            let best = surface.global_min().map(|(i, j, _)| {
                let (x2, y2) = surface.cell_center(i, j);
                rows.iter().find(|r| r.x2 == x2 && r.y2 == y2).copied()
            });
            Ok((
                json!({
                    "cells": rows.len(),
                    "global_min": to_value(&best.flatten())?,
                    "out": out.display().to_string(),
                }),
                EXIT_OK,
            ))
        }
        Command::Heatmap { csv, svg } => {
            if !csv.exists() {
                return Err(Failure::Invalid(format!("{}: no such file", csv.display())));
            }
            let n = heatmap_file(&csv, &svg)?;
            Ok((json!({"cells": n, "svg": svg.display().to_string()}), EXIT_OK))
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`dispatch`] with explicit output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INVALID,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = configure_threads().and_then(|()| execute(cli.command));
    match result {
        Ok((value, code)) => match serde_json::to_string(&value) {
            Ok(text) => {
                if writeln!(out, "{text}").is_err() {
                    return EXIT_INTERNAL;
                }
                code
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INTERNAL
            }
        },
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INTERNAL
        }
    }
}
