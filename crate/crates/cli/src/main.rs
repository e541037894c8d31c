//! Batch front end for the `listdec` library: encode messages, list-decode
//! noisy evaluations, reconstruct polynomials from corrupted grid tables,
//! and sweep decoding success rates over a simulated channel.
//!
//! Exit codes follow one convention across subcommands: 0 when the command
//! produced a (nonempty) result, 1 when a decoder legitimately found no
//! candidates, 2 on invalid input or infeasible parameters. All validation
//! happens before the first byte of output.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use listdec::codec::{run_experiment, EvalOrder, ExperimentConfig, RSCode, EXPERIMENT_CSV_HEADER};
use listdec::decoder::{grid_reconstruct, list_decode, GridInstance, DEFAULT_BUDGET};
use listdec::field::{FieldCtx, FieldElement};
use listdec::poly::UniPoly;

#[derive(Parser)]
#[command(
    name = "listdec",
    version,
    about = "Reed-Solomon coding over prime fields with list decoding beyond the unique radius"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// Evaluate at 0, 1, ..., p-1.
    Natural,
    /// Evaluate at 0 followed by powers of the smallest generator.
    Generator,
}

impl From<OrderArg> for EvalOrder {
    fn from(o: OrderArg) -> EvalOrder {
        match o {
            OrderArg::Natural => EvalOrder::Natural,
            OrderArg::Generator => EvalOrder::Generator,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Encode a message polynomial into a length-p codeword.
    #[command(after_help = "\
Output: the codeword as comma-separated decimal symbols on one line.
Exit codes: 0 on success, 2 on invalid input.")]
    Encode {
        /// Field modulus (prime, at most 2^16).
        #[arg(long)]
        p: u32,
        /// Degree bound for the message polynomial.
        #[arg(long)]
        d: usize,
        /// Message coefficients c0,c1,... (ascending powers; brackets optional).
        #[arg(long)]
        msg: String,
        /// Evaluation-point order.
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
    },
    /// List all polynomials of degree at most d agreeing with at least t points.
    #[command(after_help = "\
Points: --points takes either a file path (one `x,y` pair per line, decimal)
or an inline list `x,y;x,y;...`.
Output: a JSON array of {\"poly\":[c0,...,cd],\"agreements\":n} objects with
coefficients in ascending powers, sorted lexicographically by coefficients.
Exit codes: 0 when candidates were found, 1 when the list is empty, 2 on
invalid input, including a threshold below the admissible minimum.")]
    Listdecode {
        /// Field modulus (prime, at most 2^16).
        #[arg(long)]
        p: u32,
        /// Degree bound for candidate polynomials (at least 1).
        #[arg(long)]
        d: usize,
        /// Agreement threshold.
        #[arg(long)]
        t: usize,
        /// Evaluation points: a file path or inline `x,y;x,y;...`.
        #[arg(long)]
        points: String,
    },
    /// Reconstruct k-variate polynomials from a corrupted grid table.
    #[command(after_help = "\
The table lists values on the grid H^k in row-major order with the last
coordinate varying fastest, so for --H 0,1,2 --k 2 the entries correspond to
(0,0),(0,1),(0,2),(1,0),...
Output: a JSON array of {\"poly\":\"1+x1+2*x2\",\"agreements\":n} objects.
Exit codes: 0 when candidates were found, 1 when the list is empty, 2 on
invalid input or when no interpolation parameters satisfy the completeness
inequality (the message names the failing inequality).")]
    Grid {
        /// Field modulus (prime, at most 2^16).
        #[arg(long)]
        p: u32,
        /// Axis values, comma separated; the grid is their k-fold product.
        #[arg(long = "H")]
        axis: String,
        /// Number of variables.
        #[arg(long)]
        k: usize,
        /// Total-degree bound for candidate polynomials.
        #[arg(long)]
        d: usize,
        /// Agreement threshold over the grid.
        #[arg(long)]
        t: usize,
        /// Table of observed values, comma separated, length |H|^k.
        #[arg(long)]
        table: String,
        /// Cap on the number of candidate roots the search may enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sweep error weights and report decoding success rates as CSV.
    #[command(after_help = "\
For each error weight e = 0..=emax, runs the given number of trials: draw a
random message, corrupt e positions, then compare maximum-likelihood decoding
and list decoding against the transmitted word. Per-trial randomness is
derived from --seed, so equal seeds give byte-identical output.
Output: CSV with header `e,unique_success,list_success,mean_list_size`.
Exit codes: 0 on success, 2 on invalid input.")]
    Experiment {
        /// Field modulus (prime, at most 2^16).
        #[arg(long)]
        p: u32,
        /// Message degree bound (at least 1).
        #[arg(long)]
        d: usize,
        /// Trials per error weight (at least 1).
        #[arg(long)]
        trials: usize,
        /// Master seed for message and corruption randomness.
        #[arg(long)]
        seed: u64,
        /// Largest error weight to sweep.
        #[arg(long)]
        emax: usize,
        /// Evaluation-point order.
        #[arg(long, value_enum, default_value_t = OrderArg::Natural)]
        order: OrderArg,
        /// Cap on brute-force work per decode.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, String> {
    match cmd {
        Cmd::Encode { p, d, msg, order } => cmd_encode(p, d, &msg, order),
        Cmd::Listdecode { p, d, t, points } => cmd_listdecode(p, d, t, &points),
        Cmd::Grid {
            p,
            axis,
            k,
            d,
            t,
            table,
            budget,
        } => cmd_grid(p, &axis, k, d, t, &table, budget),
        Cmd::Experiment {
            p,
            d,
            trials,
            seed,
            emax,
            order,
            budget,
        } => cmd_experiment(p, d, trials, seed, emax, order, budget),
    }
}

fn field(p: u32) -> Result<FieldCtx, String> {
    FieldCtx::new(p).map_err(|e| e.to_string())
}

/// Parses `3,2,0` (optionally wrapped in brackets) into field elements.
fn parse_element_list(ctx: FieldCtx, s: &str) -> Result<Vec<FieldElement>, String> {
    let inner = s
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    if inner.is_empty() {
        return Err("expected a comma-separated list of field elements".to_string());
    }
    inner
        .split(',')
        .map(|tok| ctx.parse_element(tok).map_err(|e| e.to_string()))
        .collect()
}

/// Reads points from a file (one `x,y` per line) or an inline `x,y;x,y` list.
fn parse_points(ctx: FieldCtx, source: &str) -> Result<Vec<(FieldElement, FieldElement)>, String> {
    let entries: Vec<String> = if Path::new(source).exists() {
        fs::read_to_string(source)
            .map_err(|e| format!("cannot read points file {source}: {e}"))?
            .lines()
            .map(str::to_string)
            .collect()
    } else {
        source.split(';').map(str::to_string).collect()
    };
    let mut points = Vec::new();
    for entry in &entries {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (x, y) = entry
            .split_once(',')
            .ok_or_else(|| format!("point `{entry}` is not of the form x,y"))?;
        if y.contains(',') {
            return Err(format!("point `{entry}` has more than two coordinates"));
        }
        points.push((
            ctx.parse_element(x).map_err(|e| e.to_string())?,
            ctx.parse_element(y).map_err(|e| e.to_string())?,
        ));
    }
    if points.is_empty() {
        return Err("no evaluation points given".to_string());
    }
    Ok(points)
}

fn cmd_encode(p: u32, d: usize, msg: &str, order: OrderArg) -> Result<u8, String> {
    let ctx = field(p)?;
    let coeffs = parse_element_list(ctx, msg)?;
    let code = RSCode::new(ctx, d, order.into()).map_err(|e| e.to_string())?;
    let word = code
        .encode(&UniPoly::new(ctx, coeffs))
        .map_err(|e| e.to_string())?;
    println!("{word}");
    Ok(0)
}

#[derive(Serialize)]
struct PolyCandidate {
    poly: Vec<u32>,
    agreements: usize,
}

fn cmd_listdecode(p: u32, d: usize, t: usize, points: &str) -> Result<u8, String> {
    let ctx = field(p)?;
    if d < 1 {
        return Err("--d must be at least 1".to_string());
    }
    let points = parse_points(ctx, points)?;
    let out = list_decode(ctx, &points, d, t).map_err(|e| e.to_string())?;
    let rows: Vec<PolyCandidate> = out
        .candidates
        .iter()
        .map(|(f, agreements)| {
            let mut poly = f.values();
            poly.resize(d + 1, 0);
            PolyCandidate {
                poly,
                agreements: *agreements,
            }
        })
        .collect();
    println!("{}", serde_json::to_string(&rows).expect("serializable"));
    Ok(u8::from(rows.is_empty()))
}

#[derive(Serialize)]
struct GridCandidate {
    poly: String,
    agreements: usize,
}

fn cmd_grid(
    p: u32,
    axis: &str,
    k: usize,
    d: usize,
    t: usize,
    table: &str,
    budget: u64,
) -> Result<u8, String> {
    let ctx = field(p)?;
    if k < 1 {
        return Err("--k must be at least 1".to_string());
    }
    let axis = parse_element_list(ctx, axis)?;
    let table = parse_element_list(ctx, table)?;
    let inst = GridInstance::new(ctx, axis, k, table, d, t).map_err(|e| e.to_string())?;
    let out = grid_reconstruct(&inst, budget).map_err(|e| e.to_string())?;
    let rows: Vec<GridCandidate> = out
        .candidates
        .iter()
        .map(|(f, agreements)| GridCandidate {
            poly: f.to_string(),
            agreements: *agreements,
        })
        .collect();
    println!("{}", serde_json::to_string(&rows).expect("serializable"));
    Ok(u8::from(rows.is_empty()))
}

fn cmd_experiment(
    p: u32,
    d: usize,
    trials: usize,
    seed: u64,
    emax: usize,
    order: OrderArg,
    budget: u64,
) -> Result<u8, String> {
    let ctx = field(p)?;
    if d < 1 {
        return Err("--d must be at least 1".to_string());
    }
    if trials < 1 {
        return Err("--trials must be at least 1".to_string());
    }
    let cfg = ExperimentConfig {
        d,
        trials,
        seed,
        emax,
        order: order.into(),
        budget,
    };
    let rows = run_experiment(ctx, &cfg).map_err(|e| e.to_string())?;
    println!("{EXPERIMENT_CSV_HEADER}");
    for row in &rows {
        println!("{}", row.csv_line());
    }
    Ok(0)
}
