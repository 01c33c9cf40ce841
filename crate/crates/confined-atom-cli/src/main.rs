//! Command-line front end for the confined δ-atom library.
//!
//! Five subcommands cover the quantities the library computes:
//!
//! - `bound` — solve the single bound level of −Zδ(x) with a hard wall at
//!   x = −a and print k_b, the energy, and the normalization amplitude;
//! - `static-sweep` — tabulate the static polarizability α(a) over a
//!   log-spaced grid of wall distances, optionally alongside the isolated
//!   value 5/(4Z⁴) and the same-binding asymptote 5/(4k_b⁴);
//! - `resonance` — follow the complex Stark eigenvalue at one or more field
//!   strengths and report level shift and ionization rate Γ next to their
//!   weak-field closed forms;
//! - `dynamic` — scan the complex dynamic polarizability α(ω + iη) over a
//!   frequency window, one CSV block per wall distance;
//! - `oracle` — diagonalize the same Hamiltonian on a finite-difference grid
//!   and print the spectral-sum observables next to the closed forms, as an
//!   end-to-end cross-check.
//!
//! Everything computes in Hartree atomic units; `bound` additionally shows
//! eV/nm conversions for orientation. Numbers are printed with a fixed
//! `{:.12e}` format and every value is the untouched result of a library
//! call, so output files are bit-stable across runs and machines that agree
//! on IEEE-754 doubles.
//!
//! Sweeps evaluate their grid points in parallel; the env var
//! `CONFINED_ATOM_THREADS` caps the worker count (default: all cores) and
//! results are gathered by index, so the ordering — and therefore the file
//! contents — never depends on scheduling.
//!
//! Exit codes: 0 success, 2 no bound state, 3 numerical failure (all
//! resonance rows failed, or an eigensolver broke down), 64 usage, 74 could
//! not write the output file.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};

use confined_atom::units::{bohr_to_nm, hartree_to_ev};
use confined_atom::{
    asymptotic_ionization_rate, asymptotic_stark_shift, build_hamiltonian, default_box_length,
    dynamic_alpha_oracle, dynamic_polarizability, solve_bound_state, solve_resonance,
    static_alpha_oracle, static_polarizability, trk_sum, weak_field_limit, AtomConfig, BoundState,
    Error, DEFAULT_ETA, DEFAULT_GRID_POINTS, DEFAULT_ROOT_TOL,
};

// ---------------------------------------------------------------------------
// Argument definitions
// ---------------------------------------------------------------------------

/// Bound states, Stark resonances, and polarizabilities of a one-dimensional
/// δ-function atom confined by a hard wall.
#[derive(Parser)]
#[command(name = "confined-atom", version, arg_required_else_help = true)]
struct Cli {
    /// Emit one JSON document (fields mirror the CSV columns) instead of
    /// CSV/plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the bound level at one configuration.
    Bound(BoundArgs),
    /// Sweep the static polarizability over a log-spaced wall-distance grid.
    #[command(name = "static-sweep")]
    StaticSweep(StaticSweepArgs),
    /// Locate the complex Stark resonance at one or more field strengths.
    Resonance(ResonanceArgs),
    /// Scan the dynamic polarizability α(ω + iη) over a frequency window.
    Dynamic(DynamicArgs),
    /// Cross-check closed forms against the grid-diagonalization oracle.
    Oracle(OracleArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("geometry").required(true).args(["a", "isolated"]))]
struct BoundArgs {
    /// Potential strength Z (atomic units, Z > 0).
    #[arg(long = "Z", value_name = "Z", allow_negative_numbers = true)]
    z: f64,

    /// Wall distance a in bohr; the state exists only for 2Za > 1.
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    a: Option<f64>,

    /// Solve the wall-free atom instead (k_b = Z exactly).
    #[arg(long)]
    isolated: bool,
}

#[derive(Args)]
struct StaticSweepArgs {
    /// Potential strength Z (atomic units, Z > 0).
    #[arg(long = "Z", value_name = "Z", allow_negative_numbers = true)]
    z: f64,

    /// Smallest wall distance of the log-spaced grid (bohr).
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    a_min: f64,

    /// Largest wall distance of the log-spaced grid (bohr).
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    a_max: f64,

    /// Number of grid points (≥ 2), spaced geometrically in a.
    #[arg(long, value_name = "N")]
    points: usize,

    /// Append the isolated-atom column alpha_isolated = 5/(4Z⁴).
    #[arg(long)]
    compare_isolated: bool,

    /// Append the same-binding asymptote column alpha_asymptotic = 5/(4k_b⁴).
    #[arg(long)]
    compare_asymptotic: bool,

    /// Output file (CSV, or JSON with --json).
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct ResonanceArgs {
    /// Potential strength Z (atomic units, Z > 0).
    #[arg(long = "Z", value_name = "Z", allow_negative_numbers = true)]
    z: f64,

    /// Wall distance a in bohr.
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    a: f64,

    /// Field strength F (repeatable; F = 0 rows report the zero-field limit).
    #[arg(
        long = "F",
        value_name = "F",
        required = true,
        allow_negative_numbers = true
    )]
    fields: Vec<f64>,

    /// Convergence tolerance on the determinant root.
    #[arg(long, value_name = "TOL", default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct DynamicArgs {
    /// Potential strength Z (atomic units, Z > 0).
    #[arg(long = "Z", value_name = "Z", allow_negative_numbers = true)]
    z: f64,

    /// Wall distance a in bohr (repeatable; one output block per value).
    #[arg(long, value_name = "A", required = true, allow_negative_numbers = true)]
    a: Vec<f64>,

    /// Lowest drive frequency ω (atomic units).
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    omega_min: f64,

    /// Highest drive frequency ω (atomic units).
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    omega_max: f64,

    /// Number of frequency points (linear grid).
    #[arg(long, value_name = "N")]
    points: usize,

    /// Lorentzian broadening η that keeps the response off the branch cut.
    #[arg(long, value_name = "ETA", default_value_t = DEFAULT_ETA)]
    eta: f64,

    /// Output file (CSV, or JSON with --json).
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    /// Potential strength Z (atomic units, Z > 0).
    #[arg(long = "Z", value_name = "Z", allow_negative_numbers = true)]
    z: f64,

    /// Wall distance a in bohr.
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    a: f64,

    /// Number of finite-difference grid points.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,

    /// Box length L in bohr (default: wide enough for the bound tail).
    #[arg(long, value_name = "L", allow_negative_numbers = true)]
    box_length: Option<f64>,

    /// Also compare the dynamic polarizability at this ω (repeatable).
    #[arg(long, value_name = "W", allow_negative_numbers = true)]
    omega: Vec<f64>,

    /// Broadening η for the dynamic rows.
    #[arg(long, value_name = "ETA", default_value_t = DEFAULT_ETA)]
    eta: f64,
}

// ---------------------------------------------------------------------------
// Failure → exit code mapping
// ---------------------------------------------------------------------------

/// A command failure carrying the exit code contract:
/// 2 physical, 3 numerical, 64 usage, 74 I/O.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 64,
            message: message.into(),
        }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }

    fn io(err: anyhow::Error) -> Self {
        Self {
            code: 74,
            message: format!("{err:#}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NoBoundState => 2,
            // Bad argument values that clap cannot see are still usage errors.
            Error::InvalidConfig(_)
            | Error::GridMustContainOrigin
            | Error::StaticFieldScalingUndefined
            | Error::OnBranchCut
            | Error::DegenerateChannel
            | Error::ArgumentOutOfRange
            | Error::CoefficientIndexUnsupported => 64,
            _ => 3,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };

    init_thread_pool();

    let outcome = match &cli.command {
        Command::Bound(args) => cmd_bound(args, cli.json),
        Command::StaticSweep(args) => cmd_static_sweep(args, cli.json),
        Command::Resonance(args) => cmd_resonance(args, cli.json),
        Command::Dynamic(args) => cmd_dynamic(args, cli.json),
        Command::Oracle(args) => cmd_oracle(args, cli.json),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Honor `CONFINED_ATOM_THREADS` before any sweep touches rayon.
fn init_thread_pool() {
    if let Ok(raw) = std::env::var("CONFINED_ATOM_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n > 0 {
                // Ignore the error if a pool already exists (tests, reentry).
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Shared output plumbing
// ---------------------------------------------------------------------------

/// Fixed-precision scientific format used for every CSV number.
fn fe(x: f64) -> String {
    format!("{x:.12e}")
}

/// Provenance header: the canonical flag string reconstructing this run.
fn provenance(subcommand: &str, flags: &str) -> String {
    format!("# confined-atom {subcommand} {flags}\n")
}

fn columns_line(columns: &[&str]) -> String {
    format!("# columns: {}\n", columns.join(","))
}

fn write_output(path: &PathBuf, content: &str) -> CmdResult {
    fs::write(path, content)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::io)
}

fn print_json(doc: &Value) {
    // Serialization of a finite-float tree cannot fail.
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("serialize JSON")
    );
}

fn solve(cfg: &AtomConfig) -> Result<BoundState, Failure> {
    solve_bound_state(cfg, DEFAULT_ROOT_TOL).map_err(Failure::from)
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

fn cmd_bound(args: &BoundArgs, json: bool) -> CmdResult {
    let cfg = if args.isolated {
        AtomConfig::isolated(args.z)
    } else {
        // The geometry group guarantees `a` is present here.
        AtomConfig::new(args.z, args.a.expect("clap enforces the geometry group"))
    }
    .map_err(Failure::from)?;

    let bs = solve(&cfg)?;

    if json {
        print_json(&json!({
            "command": "bound",
            "z": cfg.z(),
            "a": cfg.wall_distance(),
            "isolated": cfg.is_isolated(),
            "k_b": bs.k_b(),
            "energy": bs.energy(),
            "energy_ev": hartree_to_ev(bs.energy()),
            "norm_a": bs.norm_a(),
        }));
        return Ok(());
    }

    match cfg.wall_distance() {
        Some(a) => {
            println!(
                "config: Z = {}, wall at a = {} bohr ({} nm)",
                cfg.z(),
                a,
                bohr_to_nm(a)
            );
            println!("bound state: yes (2Za > 1 holds)");
        }
        None => {
            println!("config: Z = {}, isolated (no wall)", cfg.z());
            println!("bound state: yes (an isolated attractive delta always binds)");
        }
    }
    println!("k_b    = {} bohr^-1", fe(bs.k_b()));
    println!(
        "energy = {} hartree ({} eV)",
        fe(bs.energy()),
        fe(hartree_to_ev(bs.energy()))
    );
    println!("A      = {} bohr^-1/2", fe(bs.norm_a()));
    Ok(())
}

// ---------------------------------------------------------------------------
// static-sweep
// ---------------------------------------------------------------------------

struct SweepRow {
    a: f64,
    k_b: f64,
    alpha: f64,
    alpha_asymptotic: f64,
}

fn cmd_static_sweep(args: &StaticSweepArgs, json: bool) -> CmdResult {
    if args.points < 2 {
        return Err(Failure::usage(format!(
            "--points must be >= 2, got {}",
            args.points
        )));
    }
    if !(args.a_min > 0.0 && args.a_max > args.a_min) {
        return Err(Failure::usage(format!(
            "need 0 < --a-min < --a-max, got a_min = {}, a_max = {}",
            args.a_min, args.a_max
        )));
    }
    // Validate Z once up front so a bad value fails before the sweep.
    AtomConfig::new(args.z, args.a_min).map_err(Failure::from)?;

    // The isolated comparison column is constant across the sweep.
    let alpha_isolated = if args.compare_isolated {
        let iso = AtomConfig::isolated(args.z).map_err(Failure::from)?;
        let bs = solve(&iso)?;
        Some(static_polarizability(&bs, &iso))
    } else {
        None
    };

    let grid = log_grid(args.a_min, args.a_max, args.points);
    let outcomes: Vec<Result<SweepRow, f64>> = grid
        .par_iter()
        .map(|&a| {
            let cfg = AtomConfig::new(args.z, a).expect("validated above");
            match solve_bound_state(&cfg, DEFAULT_ROOT_TOL) {
                Ok(bs) => Ok(SweepRow {
                    a,
                    k_b: bs.k_b(),
                    alpha: static_polarizability(&bs, &cfg),
                    // α from the weak-field shift at unit field: Δε = −½αF².
                    alpha_asymptotic: -2.0 * asymptotic_stark_shift(&bs, 1.0),
                }),
                Err(_) => Err(a),
            }
        })
        .collect();

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(a) => {
                eprintln!("note: skipped a = {} (no bound state: 2Za <= 1)", fe(a));
                skipped.push(a);
            }
        }
    }

    let mut columns = vec!["a", "k_b", "alpha"];
    if args.compare_isolated {
        columns.push("alpha_isolated");
    }
    if args.compare_asymptotic {
        columns.push("alpha_asymptotic");
    }

    let mut flags = format!(
        "--Z {} --a-min {} --a-max {} --points {}",
        args.z, args.a_min, args.a_max, args.points
    );
    if args.compare_isolated {
        flags.push_str(" --compare-isolated");
    }
    if args.compare_asymptotic {
        flags.push_str(" --compare-asymptotic");
    }
    let _ = write!(flags, " --out {}", args.out.display());

    if json {
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                obj.insert("a".into(), json!(row.a));
                obj.insert("k_b".into(), json!(row.k_b));
                obj.insert("alpha".into(), json!(row.alpha));
                if let Some(iso) = alpha_isolated {
                    obj.insert("alpha_isolated".into(), json!(iso));
                }
                if args.compare_asymptotic {
                    obj.insert("alpha_asymptotic".into(), json!(row.alpha_asymptotic));
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": "static-sweep",
            "z": args.z,
            "a_min": args.a_min,
            "a_max": args.a_max,
            "points": args.points,
            "columns": columns,
            "rows": json_rows,
            "skipped": skipped,
        });
        let body = serde_json::to_string_pretty(&doc).expect("serialize JSON");
        write_output(&args.out, &format!("{body}\n"))?;
    } else {
        let mut out = provenance("static-sweep", &flags);
        out.push_str(&columns_line(&columns));
        for row in &rows {
            let _ = write!(out, "{},{},{}", fe(row.a), fe(row.k_b), fe(row.alpha));
            if let Some(iso) = alpha_isolated {
                let _ = write!(out, ",{}", fe(iso));
            }
            if args.compare_asymptotic {
                let _ = write!(out, ",{}", fe(row.alpha_asymptotic));
            }
            out.push('\n');
        }
        write_output(&args.out, &out)?;
    }

    eprintln!("wrote {} rows to {}", rows.len(), args.out.display());
    Ok(())
}

/// Geometric grid from `lo` to `hi` with exact endpoints.
fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let ratio = hi / lo;
    (0..points)
        .map(|i| {
            if i == points - 1 {
                hi
            } else {
                lo * ratio.powf(i as f64 / (points - 1) as f64)
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// resonance
// ---------------------------------------------------------------------------

struct ResonanceRow {
    f: f64,
    re_shift: f64,
    gamma: f64,
    asymptotic_shift: f64,
    asymptotic_gamma: f64,
    converged: bool,
    error: Option<String>,
}

fn cmd_resonance(args: &ResonanceArgs, json: bool) -> CmdResult {
    let cfg = AtomConfig::new(args.z, args.a).map_err(Failure::from)?;
    let bs = solve(&cfg)?;

    let f_cap = weak_field_limit(&bs);
    for &f in &args.fields {
        if f > f_cap {
            eprintln!(
                "warning: F = {f} exceeds the narrow-resonance regime (0.3 k_b^3 = {}); \
                 the eigenvalue is an analytic continuation, not a decay rate",
                fe(f_cap)
            );
        }
    }

    let rows: Vec<ResonanceRow> = args
        .fields
        .par_iter()
        .map(|&f| {
            if f == 0.0 {
                // Zero-field limit: no shift, no decay; exact by definition.
                return ResonanceRow {
                    f,
                    re_shift: 0.0,
                    gamma: 0.0,
                    asymptotic_shift: 0.0,
                    asymptotic_gamma: 0.0,
                    converged: true,
                    error: None,
                };
            }
            let asymptotic_shift = asymptotic_stark_shift(&bs, f);
            let asymptotic_gamma = asymptotic_ionization_rate(&bs, &cfg, f);
            match solve_resonance(&cfg, f, None, args.tol) {
                Ok(res) => ResonanceRow {
                    f,
                    re_shift: res.stark_shift,
                    gamma: res.gamma,
                    asymptotic_shift,
                    asymptotic_gamma,
                    converged: res.converged,
                    error: None,
                },
                Err(err) => ResonanceRow {
                    f,
                    re_shift: f64::NAN,
                    gamma: f64::NAN,
                    asymptotic_shift,
                    asymptotic_gamma,
                    converged: false,
                    error: Some(err.to_string()),
                },
            }
        })
        .collect();

    for row in &rows {
        if let Some(err) = &row.error {
            eprintln!("note: F = {} failed: {err}", row.f);
        } else if !row.converged {
            eprintln!("note: F = {} did not converge; row flagged", row.f);
        }
    }

    let fields_flags: String = args
        .fields
        .iter()
        .map(|f| format!(" --F {f}"))
        .collect::<Vec<_>>()
        .concat();
    let flags = format!(
        "--Z {} --a {}{} --tol {}",
        args.z, args.a, fields_flags, args.tol
    );
    let columns = [
        "f",
        "re_shift",
        "gamma",
        "asymptotic_shift",
        "asymptotic_gamma",
        "converged",
    ];

    if json {
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|row| {
                json!({
                    "f": row.f,
                    "re_shift": row.re_shift,
                    "gamma": row.gamma,
                    "asymptotic_shift": row.asymptotic_shift,
                    "asymptotic_gamma": row.asymptotic_gamma,
                    "converged": row.converged,
                })
            })
            .collect();
        print_json(&json!({
            "command": "resonance",
            "z": args.z,
            "a": args.a,
            "tol": args.tol,
            "columns": columns.as_slice(),
            "rows": json_rows,
        }));
    } else {
        print!("{}", provenance("resonance", &flags));
        print!("{}", columns_line(&columns));
        for row in &rows {
            println!(
                "{},{},{},{},{},{}",
                fe(row.f),
                fe(row.re_shift),
                fe(row.gamma),
                fe(row.asymptotic_shift),
                fe(row.asymptotic_gamma),
                row.converged
            );
        }
    }

    let all_failed = rows.iter().all(|row| row.error.is_some() || !row.converged);
    if all_failed {
        return Err(Failure::numerical("all resonance rows failed"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// dynamic
// ---------------------------------------------------------------------------

fn cmd_dynamic(args: &DynamicArgs, json: bool) -> CmdResult {
    if args.points == 0 {
        return Err(Failure::usage("--points must be >= 1"));
    }
    if args.points > 1 && !(args.omega_max > args.omega_min) {
        return Err(Failure::usage(format!(
            "need --omega-min < --omega-max, got {} and {}",
            args.omega_min, args.omega_max
        )));
    }
    if !(args.eta.is_finite() && args.eta >= 0.0) {
        return Err(Failure::usage(format!(
            "--eta must be finite and >= 0, got {}",
            args.eta
        )));
    }

    let omegas = linear_grid(args.omega_min, args.omega_max, args.points);

    // Solve each wall distance once; report and drop unbound ones.
    let mut blocks: Vec<(f64, AtomConfig, BoundState)> = Vec::new();
    for &a in &args.a {
        let cfg = AtomConfig::new(args.z, a).map_err(Failure::from)?;
        match solve_bound_state(&cfg, DEFAULT_ROOT_TOL) {
            Ok(bs) => blocks.push((a, cfg, bs)),
            Err(Error::NoBoundState) => {
                eprintln!("note: skipped a = {a} (no bound state: 2Za <= 1)");
            }
            Err(err) => return Err(Failure::from(err)),
        }
    }

    // Flatten (block, omega) pairs so rayon balances the whole sweep.
    let tasks: Vec<(usize, f64)> = (0..blocks.len())
        .flat_map(|bi| omegas.iter().map(move |&w| (bi, w)))
        .collect();
    let values: Vec<Complex64> = tasks
        .par_iter()
        .map(|&(bi, omega)| {
            let (_, cfg, bs) = &blocks[bi];
            dynamic_polarizability(bs, cfg, omega, args.eta)
        })
        .collect::<Result<_, _>>()
        .map_err(Failure::from)?;

    let a_flags: String = args
        .a
        .iter()
        .map(|a| format!(" --a {a}"))
        .collect::<Vec<_>>()
        .concat();
    let flags = format!(
        "--Z {}{} --omega-min {} --omega-max {} --points {} --eta {} --out {}",
        args.z,
        a_flags,
        args.omega_min,
        args.omega_max,
        args.points,
        args.eta,
        args.out.display()
    );
    let columns = ["a", "omega", "re_alpha", "im_alpha"];

    if json {
        let json_blocks: Vec<Value> = blocks
            .iter()
            .enumerate()
            .map(|(bi, (a, _, _))| {
                let rows: Vec<Value> = omegas
                    .iter()
                    .enumerate()
                    .map(|(wi, &omega)| {
                        let alpha = values[bi * omegas.len() + wi];
                        json!({
                            "a": a,
                            "omega": omega,
                            "re_alpha": alpha.re,
                            "im_alpha": alpha.im,
                        })
                    })
                    .collect();
                json!({ "a": a, "rows": rows })
            })
            .collect();
        let doc = json!({
            "command": "dynamic",
            "z": args.z,
            "a": args.a,
            "omega_min": args.omega_min,
            "omega_max": args.omega_max,
            "points": args.points,
            "eta": args.eta,
            "columns": columns.as_slice(),
            "blocks": json_blocks,
        });
        let body = serde_json::to_string_pretty(&doc).expect("serialize JSON");
        write_output(&args.out, &format!("{body}\n"))?;
    } else {
        let mut out = provenance("dynamic", &flags);
        out.push_str(&columns_line(&columns));
        for (bi, (a, _, _)) in blocks.iter().enumerate() {
            if bi > 0 {
                out.push('\n'); // blank line separates blocks for plotting tools
            }
            for (wi, &omega) in omegas.iter().enumerate() {
                let alpha = values[bi * omegas.len() + wi];
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    fe(*a),
                    fe(omega),
                    fe(alpha.re),
                    fe(alpha.im)
                );
            }
        }
        write_output(&args.out, &out)?;
    }

    eprintln!(
        "wrote {} blocks x {} points to {}",
        blocks.len(),
        omegas.len(),
        args.out.display()
    );
    Ok(())
}

/// Linear grid with exact endpoints; a single point sits at `lo`.
fn linear_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    (0..points)
        .map(|i| {
            if i == points - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn cmd_oracle(args: &OracleArgs, json: bool) -> CmdResult {
    let cfg = AtomConfig::new(args.z, args.a).map_err(Failure::from)?;
    let bs = solve(&cfg)?;
    let box_length = args.box_length.unwrap_or_else(|| default_box_length(&bs));

    let mut model = build_hamiltonian(&cfg, box_length, args.grid_points).map_err(Failure::from)?;
    model.diagonalize().map_err(Failure::from)?;

    // (quantity, omega, oracle value, closed-form reference)
    let mut rows: Vec<(&str, f64, Complex64, Complex64)> = vec![
        (
            "ground_energy",
            0.0,
            Complex64::new(model.ground_energy().map_err(Failure::from)?, 0.0),
            Complex64::new(bs.energy(), 0.0),
        ),
        (
            "alpha_static",
            0.0,
            Complex64::new(static_alpha_oracle(&model).map_err(Failure::from)?, 0.0),
            Complex64::new(static_polarizability(&bs, &cfg), 0.0),
        ),
        (
            "trk_sum",
            0.0,
            Complex64::new(trk_sum(&model).map_err(Failure::from)?, 0.0),
            Complex64::new(1.0, 0.0),
        ),
    ];
    for &omega in &args.omega {
        let oracle = dynamic_alpha_oracle(&model, omega, args.eta).map_err(Failure::from)?;
        let exact = dynamic_polarizability(&bs, &cfg, omega, args.eta).map_err(Failure::from)?;
        rows.push(("alpha_dynamic", omega, oracle, exact));
    }

    let omega_flags: String = args
        .omega
        .iter()
        .map(|w| format!(" --omega {w}"))
        .collect::<Vec<_>>()
        .concat();
    let flags = format!(
        "--Z {} --a {} --grid-points {} --box-length {}{} --eta {}",
        args.z, args.a, args.grid_points, box_length, omega_flags, args.eta
    );
    let columns = [
        "quantity",
        "omega",
        "oracle_re",
        "oracle_im",
        "reference_re",
        "reference_im",
    ];

    if json {
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|(quantity, omega, oracle, reference)| {
                json!({
                    "quantity": quantity,
                    "omega": omega,
                    "oracle_re": oracle.re,
                    "oracle_im": oracle.im,
                    "reference_re": reference.re,
                    "reference_im": reference.im,
                })
            })
            .collect();
        print_json(&json!({
            "command": "oracle",
            "z": args.z,
            "a": args.a,
            "grid_points": args.grid_points,
            "box_length": box_length,
            "eta": args.eta,
            "columns": columns.as_slice(),
            "rows": json_rows,
        }));
    } else {
        print!("{}", provenance("oracle", &flags));
        print!("{}", columns_line(&columns));
        for (quantity, omega, oracle, reference) in &rows {
            println!(
                "{quantity},{},{},{},{},{}",
                fe(*omega),
                fe(oracle.re),
                fe(oracle.im),
                fe(reference.re),
                fe(reference.im)
            );
        }
    }
    Ok(())
}
