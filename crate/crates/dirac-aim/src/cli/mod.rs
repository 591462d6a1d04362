//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on parse/validation problems (bad config,
//! bad flag values, malformed grids), 2 on solver failures (no bound
//! state, iteration caps, poles). The `DIRAC_AIM_THREADS` environment
//! variable caps scan concurrency.

pub mod config;
pub mod output;
pub mod tables;

use std::io::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::angular::{angular_wavefunction, ChainReading};
use crate::error::{Error, Result};
use crate::radial::radial_wavefunction;
use crate::spectrum::{BoundState, Solver};

use config::{parse_config, RunConfig};
use output::{fmt_e, fmt_in, fmt_res, provenance_footer, BOUND_STATE_HEADER};

#[derive(Parser)]
#[command(
    name = "dirac-aim",
    about = "Bound-state spectra of the spin-symmetric Dirac equation with \
             deformed Rosen-Morse and Scarf potentials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the bound-state spectrum of a config file.
    Solve(SolveArgs),
    /// Reproduce a built-in reference table.
    Table(TableArgs),
    /// Tabulate the upper radial wavefunction of the lowest bound state.
    Wavefunction(WavefunctionArgs),
    /// Tabulate one angular factor of the lowest bound state.
    Angular(AngularArgs),
    /// Re-solve a config across a list of values of one parameter.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Path to a config file.
    config: String,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// Table id (1, 2, 3, 6, 7 or 8).
    id: u32,
    /// Chain reading: "corrected" or "literal".
    #[arg(long, default_value = "corrected")]
    reading: String,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Also write the full reproduction report (all tables, both
    /// readings) to this path.
    #[arg(long)]
    report: Option<String>,
}

#[derive(Args)]
struct WavefunctionArgs {
    /// Path to a config file.
    config: String,
    /// Radial grid as "r_min,r_max,count".
    #[arg(long)]
    grid: String,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct AngularArgs {
    /// Path to a config file (chain mode).
    config: String,
    /// Axis index (1-based).
    #[arg(long)]
    axis: u8,
    /// Number of interior grid points on (0, pi).
    #[arg(long, default_value_t = 180)]
    points: usize,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to a config file.
    config: String,
    /// Parameter to vary: q, r_e, alpha, M, V0, V1, C_s or n.
    #[arg(long)]
    param: String,
    /// Comma-separated values.
    #[arg(long, value_delimiter = ',')]
    values: Vec<f64>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

/// Run the CLI; returns the process exit code.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version are successes by convention.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Table(a) => cmd_table(a),
        Command::Wavefunction(a) => cmd_wavefunction(a),
        Command::Angular(a) => cmd_angular(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn load(path: &str) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

fn emit(out: Option<&str>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

/// Emit solved states in the reference-table row format (reference column
/// left empty).
fn states_csv(cfg: &RunConfig, states: &[BoundState]) -> String {
    let mut out = String::from(BOUND_STATE_HEADER);
    out.push('\n');
    for (i, s) in states.iter().enumerate() {
        let n_l = s
            .n_i
            .first()
            .map(|&n| fmt_in(n as f64))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},,{},{}\n",
            i + 1,
            fmt_in(cfg.problem.radial.q.q()),
            fmt_in(cfg.problem.r_e),
            s.n,
            n_l,
            fmt_e(s.e),
            fmt_res(s.residual),
            s.admissible
        ));
    }
    out.push_str(&provenance_footer(
        &cfg.source_text,
        cfg.problem.reading,
        cfg.scan.bisect_tol,
        cfg.scan.steps,
    ));
    out
}

fn cmd_solve(a: SolveArgs) -> Result<()> {
    let cfg = load(&a.config)?;
    let solver = Solver::new(cfg.problem.clone())?;
    let states = solver.solve_bound_states(&cfg.scan)?;
    let out_path = a.out.or_else(|| cfg.out_path.clone());
    emit(out_path.as_deref(), &states_csv(&cfg, &states))
}

fn parse_reading(s: &str) -> Result<ChainReading> {
    match s {
        "corrected" => Ok(ChainReading::Corrected),
        "literal" => Ok(ChainReading::LiteralLambda4),
        _ => Err(Error::Parse {
            line: 0,
            msg: format!("unknown chain reading `{s}` (expected corrected|literal)"),
        }),
    }
}

fn cmd_table(a: TableArgs) -> Result<()> {
    let reading = parse_reading(&a.reading)?;
    let csv = tables::run_table(a.id, reading)?;
    emit(a.out.as_deref(), &csv)?;
    if let Some(report_path) = a.report {
        std::fs::write(report_path, tables::reproduction_report()?)?;
    }
    Ok(())
}

/// Parse "r_min,r_max,count".
fn parse_grid(spec: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = spec.split(',').collect();
    let bad = |msg: &str| Error::Parse {
        line: 0,
        msg: format!("grid `{spec}`: {msg}"),
    };
    if parts.len() != 3 {
        return Err(bad("expected r_min,r_max,count"));
    }
    let r_min: f64 = parts[0].trim().parse().map_err(|_| bad("bad r_min"))?;
    let r_max: f64 = parts[1].trim().parse().map_err(|_| bad("bad r_max"))?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad("bad count"))?;
    if count == 0 {
        return Err(Error::EmptyGrid);
    }
    if !(r_min.is_finite() && r_max.is_finite() && r_min < r_max) {
        return Err(bad("need finite r_min < r_max"));
    }
    Ok((r_min, r_max, count))
}

fn lowest_state(cfg: &RunConfig) -> Result<BoundState> {
    let solver = Solver::new(cfg.problem.clone())?;
    let states = solver.solve_bound_states(&cfg.scan)?;
    states.into_iter().next().ok_or(Error::NoBoundState)
}

fn cmd_wavefunction(a: WavefunctionArgs) -> Result<()> {
    let (r_min, r_max, count) = parse_grid(&a.grid)?;
    let cfg = load(&a.config)?;
    let state = lowest_state(&cfg)?;
    let shape = state.shape.as_ref().ok_or(Error::NoBoundState)?;
    let mut out = String::from("r,F\n");
    for i in 0..count {
        let r = if count == 1 {
            r_min
        } else {
            r_min + (r_max - r_min) * i as f64 / (count - 1) as f64
        };
        let f = radial_wavefunction(shape, &cfg.problem.radial, state.n, r)?;
        out.push_str(&format!("{},{:e}\n", fmt_in(r), f));
    }
    out.push_str(&provenance_footer(
        &cfg.source_text,
        cfg.problem.reading,
        cfg.scan.bisect_tol,
        cfg.scan.steps,
    ));
    emit(a.out.as_deref(), &out)
}

fn cmd_angular(a: AngularArgs) -> Result<()> {
    let cfg = load(&a.config)?;
    let state = lowest_state(&cfg)?;
    let chain = state.chain.as_ref().ok_or_else(|| Error::InvalidParameter {
        name: "axis",
        value: a.axis as f64,
        reason: "angular factors require a chain-mode config (no ell_override)",
    })?;
    let sol = chain
        .axes
        .iter()
        .find(|s| s.axis == a.axis)
        .ok_or_else(|| Error::InvalidParameter {
            name: "axis",
            value: a.axis as f64,
            reason: "axis index out of range for this dimension",
        })?;
    if a.points == 0 {
        return Err(Error::EmptyGrid);
    }
    let mut out = String::from("theta,P\n");
    for i in 1..=a.points {
        let theta = std::f64::consts::PI * i as f64 / (a.points + 1) as f64;
        let p = angular_wavefunction(sol, theta)?;
        out.push_str(&format!("{:.6},{:e}\n", theta, p));
    }
    out.push_str(&provenance_footer(
        &cfg.source_text,
        cfg.problem.reading,
        cfg.scan.bisect_tol,
        cfg.scan.steps,
    ));
    emit(a.out.as_deref(), &out)
}

fn apply_param(cfg: &mut RunConfig, param: &str, value: f64) -> Result<()> {
    let r = &mut cfg.problem.radial;
    match param {
        "q" => {
            let q = crate::qdeform::Deformation::new(value)?;
            r.q = q;
            if let crate::spectrum::AngularSpec::Chain(axes) = &mut cfg.problem.angular {
                for ax in axes {
                    ax.scarf.q = q;
                }
            }
        }
        "r_e" => cfg.problem.r_e = value,
        "alpha" => r.alpha = value,
        "M" => {
            r.m = value;
            cfg.scan = crate::spectrum::ScanSettings::default_for_mass(value);
        }
        "V0" => r.v0 = value,
        "V1" => r.v1 = value,
        "C_s" => r.c_s = value,
        "n" => {
            if value < 0.0 || value.fract() != 0.0 {
                return Err(Error::InvalidParameter {
                    name: "n",
                    value,
                    reason: "radial quantum number must be a nonnegative integer",
                });
            }
            r.n = value as u32;
        }
        other => {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "unknown sweep parameter `{other}` \
                     (expected q|r_e|alpha|M|V0|V1|C_s|n)"
                ),
            })
        }
    }
    r.validate()?;
    Ok(())
}

fn cmd_sweep(a: SweepArgs) -> Result<()> {
    if a.values.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let base = load(&a.config)?;
    let mut out = String::from("param,value,n,E,residual,admissible\n");
    for &v in &a.values {
        let mut cfg = base.clone();
        apply_param(&mut cfg, &a.param, v)?;
        let states = Solver::new(cfg.problem.clone())?.solve_bound_states(&cfg.scan)?;
        if states.is_empty() {
            out.push_str(&format!("{},{},,,,\n", a.param, fmt_in(v)));
        }
        for s in &states {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                a.param,
                fmt_in(v),
                s.n,
                fmt_e(s.e),
                fmt_res(s.residual),
                s.admissible
            ));
        }
    }
    out.push_str(&provenance_footer(
        &base.source_text,
        base.problem.reading,
        base.scan.bisect_tol,
        base.scan.steps,
    ));
    emit(a.out.as_deref(), &out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0.1,2.0,5").unwrap(), (0.1, 2.0, 5));
        assert!(matches!(parse_grid("0.1,2.0,0"), Err(Error::EmptyGrid)));
        assert!(parse_grid("2.0,0.1,5").is_err());
        assert!(parse_grid("0.1,2.0").is_err());
    }

    #[test]
    fn reading_names() {
        assert!(matches!(
            parse_reading("corrected"),
            Ok(ChainReading::Corrected)
        ));
        assert!(matches!(
            parse_reading("literal"),
            Ok(ChainReading::LiteralLambda4)
        ));
        assert!(parse_reading("other").is_err());
    }

    #[test]
    fn bad_subcommand_is_usage_error() {
        let code = run(["dirac-aim", "frobnicate"].iter().map(|s| s.to_string()));
        assert_eq!(code, 1);
    }
}
