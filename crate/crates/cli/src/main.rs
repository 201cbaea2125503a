//! `cohex`: evaluate the coherence a moving two-level detector extracts
//! from a coherent scalar field, from single points up to grid sweeps,
//! difference maps, swelling-region reports, and decoherence curves.
//!
//! All physics happens in the library crate; this binary owns argument
//! handling, the optional TOML config file, file formats, and generated
//! plot scripts. Summaries go to stdout, warnings and timings to stderr,
//! so captured output stays deterministic for identical inputs.

mod config;
mod plot;
mod serialize;

use clap::{Args, Parser, Subcommand};
use cohex_core::{
    coherence_accelerated, coherence_rest_closed_form, coherence_velocity_closed_form,
    decoherence_curve, diff_grid, sweep_grid, swelling_regions, GridSpec, Method, Spacing,
    Trajectory, REDUCED_FLOOR,
};
use config::FileConfig;
use plot::HeatmapKind;
use serialize::{
    curve_csv, diff_csv, format_value, grid_csv, point_csv, read_diff_json, read_grid_json,
    regions_csv, to_json_string, write_file, CurveDoc, DiffDoc, Format, GridDoc, PointDoc,
    RegionsDoc,
};
use std::path::{Path, PathBuf};

/// Failure categories, one exit code each: usage 2, validation 3,
/// computation 4.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Computation(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Validation(m) => write!(f, "validation: {m}"),
            CliError::Computation(m) => write!(f, "computation: {m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Computation(_) => 4,
        }
    }
}

impl From<cohex_core::Error> for CliError {
    fn from(e: cohex_core::Error) -> Self {
        match &e {
            cohex_core::Error::Domain(_) | cohex_core::Error::GridMismatch(_) => {
                CliError::Validation(e.to_string())
            }
            cohex_core::Error::QuadratureBudget { .. }
            | cohex_core::Error::TooManyFlagged { .. } => CliError::Computation(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cohex",
    version,
    about = "Coherence extracted by a moving detector from a coherent scalar field",
    arg_required_else_help = true
)]
struct Cli {
    /// TOML config file; flags override its keys, keys a command does not
    /// use are ignored.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate C/g at one (Ē, T̄) point.
    Compute(ComputeArgs),
    /// Evaluate C/g over an (Ē, T̄) grid and write it to a file.
    Sweep(SweepArgs),
    /// Subtract one sweep from another, cell by cell.
    Diff(DiffArgs),
    /// Extract swelling regions from a difference map.
    Regions(RegionsArgs),
    /// Sample C/g against T̄ at fixed Ē for one or more trajectories.
    Curve(CurveArgs),
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Reduced field energy Ē = E/Ω.
    #[arg(long)]
    e_bar: Option<f64>,
    /// Reduced interaction width T̄ = ΩT.
    #[arg(long)]
    t_bar: Option<f64>,
    /// Detector velocity υ as a fraction of c; at rest when absent.
    #[arg(long, conflicts_with = "acceleration")]
    velocity: Option<f64>,
    /// Proper acceleration ā = a/Ω; at rest when absent.
    #[arg(long)]
    acceleration: Option<f64>,
    /// Relative quadrature tolerance (default 1e-6).
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Encoding for --out (default csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Also write the result to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for quadrature-backed evaluations.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Detector velocity υ as a fraction of c; at rest when absent.
    #[arg(long, conflicts_with = "acceleration")]
    velocity: Option<f64>,
    /// Proper acceleration ā = a/Ω; at rest when absent.
    #[arg(long)]
    acceleration: Option<f64>,
    /// Ē axis lower edge.
    #[arg(long)]
    e_min: Option<f64>,
    /// Ē axis upper edge.
    #[arg(long)]
    e_max: Option<f64>,
    /// T̄ axis lower edge.
    #[arg(long)]
    t_min: Option<f64>,
    /// T̄ axis upper edge.
    #[arg(long)]
    t_max: Option<f64>,
    /// Points along the Ē axis (≥ 2).
    #[arg(long)]
    n_e: Option<usize>,
    /// Points along the T̄ axis (≥ 2).
    #[arg(long)]
    n_t: Option<usize>,
    /// Space both axes logarithmically instead of linearly.
    #[arg(long)]
    log: bool,
    /// Relative quadrature tolerance (default 1e-5).
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Output encoding (default csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for the grid evaluation.
    #[arg(long)]
    workers: Option<usize>,
    /// Also write a matplotlib script next to the output file.
    #[arg(long)]
    emit_plot_script: bool,
}

#[derive(Args, Debug)]
struct DiffArgs {
    /// Sweep JSON whose values are kept (the moving grid).
    #[arg(value_name = "MINUEND")]
    minuend: PathBuf,
    /// Sweep JSON subtracted from the first (the rest grid).
    #[arg(value_name = "SUBTRAHEND")]
    subtrahend: PathBuf,
    /// Output encoding (default csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a matplotlib script next to the output file.
    #[arg(long)]
    emit_plot_script: bool,
}

#[derive(Args, Debug)]
struct RegionsArgs {
    /// Difference-map JSON produced by `diff --format json`.
    #[arg(value_name = "DIFF")]
    input: PathBuf,
    /// Detection threshold on ΔC/g (default 0); a cell qualifies only when
    /// its value exceeds threshold plus its error bound.
    #[arg(long)]
    threshold: Option<f64>,
    /// Output encoding (default csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// Reduced field energy Ē = E/Ω shared by all columns.
    #[arg(long)]
    e_bar: Option<f64>,
    /// First T̄ sample.
    #[arg(long)]
    t_min: Option<f64>,
    /// Last T̄ sample.
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of T̄ samples (≥ 2).
    #[arg(long)]
    n_t: Option<usize>,
    /// Add a constant-velocity column (repeatable).
    #[arg(long = "velocity", value_name = "UPSILON")]
    velocities: Vec<f64>,
    /// Add a uniform-acceleration column (repeatable).
    #[arg(long = "acceleration", value_name = "A_BAR")]
    accelerations: Vec<f64>,
    /// Relative quadrature tolerance (default 1e-6).
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Output encoding (default csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for the sampling.
    #[arg(long)]
    workers: Option<usize>,
    /// Also write a matplotlib script next to the output file.
    #[arg(long)]
    emit_plot_script: bool,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Compute(args) => run_compute(args, &cfg),
        Command::Sweep(args) => run_sweep(args, &cfg),
        Command::Diff(args) => run_diff(args, &cfg),
        Command::Regions(args) => run_regions(args, &cfg),
        Command::Curve(args) => run_curve(args, &cfg),
    }
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required (flag or config key)")))
}

/// CLI trajectory flags override the config pair as a unit, so a config
/// velocity cannot silently combine with a command-line acceleration.
fn trajectory_from(
    cli_v: Option<f64>,
    cli_a: Option<f64>,
    cfg: &FileConfig,
) -> Result<Trajectory, CliError> {
    let (v, a) = if cli_v.is_some() || cli_a.is_some() {
        (cli_v, cli_a)
    } else {
        (cfg.velocity, cfg.acceleration)
    };
    match (v, a) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--velocity and --acceleration are mutually exclusive".to_string(),
        )),
        (Some(v), None) => Trajectory::constant_velocity(v)
            .map_err(|e| CliError::Validation(format!("--velocity: {e}"))),
        (None, Some(a)) => Trajectory::uniform_acceleration(a)
            .map_err(|e| CliError::Validation(format!("--acceleration: {e}"))),
        (None, None) => Ok(Trajectory::Rest),
    }
}

fn format_from(cli: Option<Format>, cfg: &FileConfig) -> Result<Format, CliError> {
    if let Some(f) = cli {
        return Ok(f);
    }
    match &cfg.format {
        Some(s) => s
            .parse()
            .map_err(|e: String| CliError::Validation(format!("config key format: {e}"))),
        None => Ok(Format::Csv),
    }
}

fn install_workers(cli: Option<usize>, cfg: &FileConfig) -> Result<(), CliError> {
    let Some(w) = cli.or(cfg.workers) else {
        return Ok(());
    };
    if w < 1 {
        return Err(CliError::Validation("--workers must be ≥ 1".to_string()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(w)
        .build_global()
        .map_err(|e| CliError::Computation(format!("thread pool: {e}")))
}

fn warn_clamped(name: &str, v: f64) {
    if v > 0.0 && v < REDUCED_FLOOR {
        eprintln!(
            "warning: {name} = {v:e} lies below the {REDUCED_FLOOR:e} floor; evaluated at the floor"
        );
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed form",
        Method::DopplerClosedForm => "doppler closed form",
        Method::Quadrature => "quadrature",
    }
}

/// Path of the generated plot script: the output path with `_plot.py`
/// appended to its stem.
fn plot_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".to_string());
    out.with_file_name(format!("{stem}_plot.py"))
}

fn png_name(out: &Path) -> String {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".to_string());
    format!("{stem}.png")
}

fn data_file_name(out: &Path) -> String {
    out.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| out.display().to_string())
}

fn run_compute(args: ComputeArgs, cfg: &FileConfig) -> Result<(), CliError> {
    install_workers(args.workers, cfg)?;
    let e_bar = require(args.e_bar.or(cfg.e_bar), "--e-bar")?;
    let t_bar = require(args.t_bar.or(cfg.t_bar), "--t-bar")?;
    let rel_tol = args.rel_tol.or(cfg.rel_tol).unwrap_or(1e-6);
    let traj = trajectory_from(args.velocity, args.acceleration, cfg)?;
    warn_clamped("--e-bar", e_bar);
    warn_clamped("--t-bar", t_bar);

    let result = match traj {
        Trajectory::Rest => coherence_rest_closed_form(e_bar, t_bar),
        Trajectory::ConstantVelocity { upsilon } => {
            coherence_velocity_closed_form(e_bar, t_bar, upsilon)
        }
        Trajectory::UniformAcceleration { a_bar } => {
            coherence_accelerated(e_bar, t_bar, a_bar, rel_tol)
        }
    }?;

    println!(
        "C/g = {} ± {:.3e} ({})",
        format_value(result.c_over_g),
        result.err_estimate,
        method_name(result.method)
    );

    if let Some(out) = args.out.or_else(|| cfg.out.clone()) {
        let format = format_from(args.format, cfg)?;
        let doc = PointDoc {
            e_over_omega: e_bar,
            omega_t: t_bar,
            trajectory: traj,
            c_over_g: result.c_over_g,
            err_estimate: result.err_estimate,
            method: method_name(result.method).replace(' ', "_"),
        };
        let text = match format {
            Format::Csv => point_csv(&doc),
            Format::Json => to_json_string(&doc),
        };
        write_file(&out, &text)?;
    }
    Ok(())
}

fn run_sweep(args: SweepArgs, cfg: &FileConfig) -> Result<(), CliError> {
    install_workers(args.workers, cfg)?;
    let spec = GridSpec {
        e_bar_min: require(args.e_min.or(cfg.e_min), "--e-min")?,
        e_bar_max: require(args.e_max.or(cfg.e_max), "--e-max")?,
        t_bar_min: require(args.t_min.or(cfg.t_min), "--t-min")?,
        t_bar_max: require(args.t_max.or(cfg.t_max), "--t-max")?,
        n_e: require(args.n_e.or(cfg.n_e), "--n-e")?,
        n_t: require(args.n_t.or(cfg.n_t), "--n-t")?,
        spacing: if args.log || cfg.log.unwrap_or(false) {
            Spacing::Log
        } else {
            Spacing::Linear
        },
    };
    let rel_tol = args.rel_tol.or(cfg.rel_tol).unwrap_or(1e-5);
    let traj = trajectory_from(args.velocity, args.acceleration, cfg)?;
    let out = require(args.out.or_else(|| cfg.out.clone()), "--out")?;
    let format = format_from(args.format, cfg)?;
    let emit_plot = args.emit_plot_script || cfg.emit_plot_script.unwrap_or(false);
    warn_clamped("--e-min", spec.e_bar_min);
    warn_clamped("--t-min", spec.t_bar_min);

    let grid = sweep_grid(traj, &spec, rel_tol)?;
    eprintln!("# sweep wall time {:.2}s", grid.meta.wall_seconds);

    let doc = GridDoc::from_grid(&grid);
    let text = match format {
        Format::Csv => grid_csv(&doc),
        Format::Json => to_json_string(&doc),
    };
    write_file(&out, &text)?;

    let mut wrote = format!("wrote {}", out.display());
    if emit_plot {
        let script_path = plot_path(&out);
        let title = format!("C/g, trajectory {}", traj.tag());
        let script = plot::heatmap_script(
            &data_file_name(&out),
            format,
            HeatmapKind::Grid,
            &title,
            &png_name(&out),
        );
        write_file(&script_path, &script)?;
        wrote.push_str(&format!(" and {}", script_path.display()));
    }
    println!(
        "{wrote}: {}x{} cells, {} flagged",
        spec.n_e,
        spec.n_t,
        grid.meta.flagged.len()
    );
    Ok(())
}

fn run_diff(args: DiffArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let minuend = read_grid_json(&args.minuend)?;
    let subtrahend = read_grid_json(&args.subtrahend)?;
    let out = require(args.out.or_else(|| cfg.out.clone()), "--out")?;
    let format = format_from(args.format, cfg)?;
    let emit_plot = args.emit_plot_script || cfg.emit_plot_script.unwrap_or(false);

    let d = diff_grid(&minuend, &subtrahend)?;
    let doc = DiffDoc::from_diff(&d);
    let text = match format {
        Format::Csv => diff_csv(&doc),
        Format::Json => to_json_string(&doc),
    };
    write_file(&out, &text)?;

    let mut wrote = format!("wrote {}", out.display());
    if emit_plot {
        let script_path = plot_path(&out);
        let title = format!("ΔC/g, {} − {}", d.minuend, d.subtrahend);
        let script = plot::heatmap_script(
            &data_file_name(&out),
            format,
            HeatmapKind::Diff,
            &title,
            &png_name(&out),
        );
        write_file(&script_path, &script)?;
        wrote.push_str(&format!(" and {}", script_path.display()));
    }
    println!(
        "{wrote}: {}x{} cells, {} flagged",
        d.spec.n_e,
        d.spec.n_t,
        d.flagged.len()
    );
    Ok(())
}

fn run_regions(args: RegionsArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let d = read_diff_json(&args.input)?;
    let threshold = args.threshold.or(cfg.threshold).unwrap_or(0.0);
    let out = require(args.out.or_else(|| cfg.out.clone()), "--out")?;
    let format = format_from(args.format, cfg)?;

    let report = swelling_regions(&d, threshold)?;
    let n_cells = report.cells.len();
    let n_components = report.components.len();
    let doc = RegionsDoc::new(&d, report);
    let text = match format {
        Format::Csv => regions_csv(&doc),
        Format::Json => to_json_string(&doc),
    };
    write_file(&out, &text)?;

    println!(
        "wrote {}: {n_cells} swelling cells in {n_components} components",
        out.display()
    );
    Ok(())
}

fn run_curve(args: CurveArgs, cfg: &FileConfig) -> Result<(), CliError> {
    install_workers(args.workers, cfg)?;
    let e_bar = require(args.e_bar.or(cfg.e_bar), "--e-bar")?;
    let t_min = require(args.t_min.or(cfg.t_min), "--t-min")?;
    let t_max = require(args.t_max.or(cfg.t_max), "--t-max")?;
    let n = require(args.n_t.or(cfg.n_t), "--n-t")?;
    let rel_tol = args.rel_tol.or(cfg.rel_tol).unwrap_or(1e-6);
    let out = require(args.out.or_else(|| cfg.out.clone()), "--out")?;
    let format = format_from(args.format, cfg)?;
    let emit_plot = args.emit_plot_script || cfg.emit_plot_script.unwrap_or(false);
    warn_clamped("--e-bar", e_bar);
    warn_clamped("--t-min", t_min);

    // The rest column always leads; config scalars contribute one moving
    // column each when no trajectory flags are given.
    let (vs, accs) = if args.velocities.is_empty() && args.accelerations.is_empty() {
        (
            cfg.velocity.into_iter().collect::<Vec<f64>>(),
            cfg.acceleration.into_iter().collect::<Vec<f64>>(),
        )
    } else {
        (args.velocities, args.accelerations)
    };
    let mut trajs = vec![Trajectory::Rest];
    for v in vs {
        trajs.push(
            Trajectory::constant_velocity(v)
                .map_err(|e| CliError::Validation(format!("--velocity: {e}")))?,
        );
    }
    for a in accs {
        trajs.push(
            Trajectory::uniform_acceleration(a)
                .map_err(|e| CliError::Validation(format!("--acceleration: {e}")))?,
        );
    }

    let table = decoherence_curve(&trajs, e_bar, t_min, t_max, n, rel_tol)?;
    eprintln!("# curve wall time {:.2}s", table.meta.wall_seconds);

    let doc = CurveDoc::from_table(&table);
    let text = match format {
        Format::Csv => curve_csv(&doc),
        Format::Json => to_json_string(&doc),
    };
    write_file(&out, &text)?;

    let mut wrote = format!("wrote {}", out.display());
    if emit_plot {
        let script_path = plot_path(&out);
        let tags: Vec<String> = doc.trajectories.iter().map(|t| t.tag()).collect();
        let title = format!("C/g against ΩT at E/Ω = {e_bar}");
        let script = plot::curve_script(
            &data_file_name(&out),
            format,
            &tags,
            &title,
            &png_name(&out),
        );
        write_file(&script_path, &script)?;
        wrote.push_str(&format!(" and {}", script_path.display()));
    }
    println!(
        "{wrote}: {n} samples x {} trajectories, {} flagged",
        doc.trajectories.len(),
        table.meta.flagged.len()
    );
    Ok(())
}
