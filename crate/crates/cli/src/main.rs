//! `pahs`: build photon-added hypergeometric states and their limits, evaluate
//! nonclassicality measures, run parameter sweeps and sample Wigner grids.

mod args;
mod error;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pahs_core::wigner::{wigner_grid, wigner_integral, GridSpec, QuadratureSpec, WLN_LOG_BASE};
use pahs_core::{FamilyParams, MeasureReport, Registry};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use args::{Format, QuadratureArgs, StateArgs};
use error::{CliError, Result};
use table::Table;

/// Environment variable that redirects relative output paths.
const OUTPUT_DIR_ENV: &str = "PAHS_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "pahs",
    version,
    about = "Nonclassicality of photon-added hypergeometric states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print amplitudes, photon-number distribution and mean photon number.
    State {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Evaluate measures on one state.
    Measures {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        /// Comma-separated measure names; all registered measures by default.
        #[arg(long, value_delimiter = ',')]
        measures: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate measures over a list of values of one parameter, one CSV row each.
    Sweep {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        /// Parameter to sweep: L, c, M, eta, k, alpha, n or dim.
        #[arg(long)]
        param: String,
        /// Comma-separated values of the swept parameter.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        values: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        measures: Vec<String>,
        /// Output CSV path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Upper bound on worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Sample the Wigner function on a grid.
    Wigner {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
        p_min: f64,
        #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
        p_max: f64,
        #[arg(long, default_value_t = 101)]
        nx: usize,
        #[arg(long, default_value_t = 101)]
        np: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path; diagnostics go to the same path with a `.json`
        /// extension (`.meta.json` for JSON output).
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    let registry = Registry::builtin();
    match command {
        Command::State { state } => cmd_state(&registry, &state),
        Command::Measures {
            state,
            quadrature,
            measures,
            format,
        } => cmd_measures(&registry, &state, &quadrature, &measures, format),
        Command::Sweep {
            state,
            quadrature,
            param,
            values,
            measures,
            out,
            jobs,
        } => {
            let sweep = Sweep {
                state: &state,
                quadrature: quadrature.spec(),
                param: &param,
                values: &values,
                measures: &measures,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| cmd_sweep(&registry, &sweep, out.as_deref()))
        }
        Command::Wigner {
            state,
            x_min,
            x_max,
            p_min,
            p_max,
            nx,
            np,
            format,
            out,
        } => {
            let grid = GridSpec {
                x_min,
                x_max,
                p_min,
                p_max,
                nx,
                np,
            };
            cmd_wigner(&registry, &state, &grid, format, &out)
        }
    }
}

fn measure_names<'a>(registry: &'a Registry, requested: &'a [String]) -> Result<Vec<&'a str>> {
    if requested.is_empty() {
        return Ok(registry.measure_names());
    }
    requested
        .iter()
        .map(|name| {
            registry
                .measure(name)
                .map(|m| m.name())
                .map_err(CliError::from)
        })
        .collect()
}

#[derive(Serialize)]
struct StateOutput<'a> {
    family: &'a str,
    params: std::collections::BTreeMap<String, pahs_core::ParamValue>,
    dim: usize,
    amplitudes: Vec<[f64; 2]>,
    pnd: Vec<f64>,
    mean_n: f64,
}

fn cmd_state(registry: &Registry, args: &StateArgs) -> Result<()> {
    let family = registry.family(&args.family)?;
    let params = args.params();
    let state = family.build(&params)?;
    let output = StateOutput {
        family: family.name(),
        params: family.resolved(&params)?,
        dim: state.dim(),
        amplitudes: state.amplitudes().iter().map(|c| [c.re, c.im]).collect(),
        pnd: state.photon_number_distribution(),
        mean_n: state.mean_photon_number(),
    };
    write_json(io::stdout().lock(), &output)
}

fn report_json(report: &MeasureReport) -> serde_json::Value {
    json!({
        "family": report.family,
        "params": report.params,
        "measures": report.measures,
        "converged": report.is_converged(),
        "wln_log_base": WLN_LOG_BASE,
    })
}

fn cmd_measures(
    registry: &Registry,
    args: &StateArgs,
    quadrature: &QuadratureArgs,
    requested: &[String],
    format: Format,
) -> Result<()> {
    let names = measure_names(registry, requested)?;
    let family = registry.family(&args.family)?;
    let report = registry.report(&args.family, &args.params(), &names, quadrature.spec())?;
    let stdout = io::stdout().lock();
    match format {
        Format::Json => write_json(stdout, &report_json(&report))?,
        Format::Csv => {
            let table = Table::new(family, None, &names);
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(table.header())?;
            w.write_record(table.row(&report, None))?;
            w.flush().map_err(|e| io_error("<stdout>", e))?;
        }
    }
    if report.is_converged() {
        Ok(())
    } else {
        Err(CliError::Unconverged(1))
    }
}

struct Sweep<'a> {
    state: &'a StateArgs,
    quadrature: QuadratureSpec,
    param: &'a str,
    values: &'a [f64],
    measures: &'a [String],
}

fn cmd_sweep(registry: &Registry, sweep: &Sweep<'_>, out: Option<&Path>) -> Result<()> {
    let names = measure_names(registry, sweep.measures)?;
    let family = registry.family(&sweep.state.family)?;
    if !pahs_core::registry::PARAM_NAMES.contains(&sweep.param) {
        return Err(pahs_core::Error::UnknownName {
            kind: "parameter",
            name: sweep.param.to_string(),
        }
        .into());
    }
    let table = Table::new(family, Some(sweep.param), &names);
    let base = sweep.state.params();

    let rows: Vec<std::result::Result<MeasureReport, pahs_core::Error>> = sweep
        .values
        .par_iter()
        .map(|&value| {
            let mut params: FamilyParams = base.clone();
            params.set(sweep.param, value)?;
            registry.report(family.name(), &params, &names, sweep.quadrature)
        })
        .collect();

    let mut failed = 0;
    let mut unconverged = 0;
    let mut records = vec![table.header()];
    for (value, row) in sweep.values.iter().zip(&rows) {
        let swept = Some((sweep.param, *value));
        match row {
            Ok(report) => {
                if !report.is_converged() {
                    unconverged += 1;
                }
                records.push(table.row(report, swept));
            }
            Err(e) => {
                failed += 1;
                records.push(table.error_row(family.name(), swept, &e.to_string()));
            }
        }
    }

    match out {
        Some(path) => {
            let path = output_path(path);
            let file = create(&path)?;
            write_csv(file, &records)?;
        }
        None => write_csv(io::stdout().lock(), &records)?,
    }

    if failed > 0 {
        Err(CliError::RowsFailed(failed))
    } else if unconverged > 0 {
        Err(CliError::Unconverged(unconverged))
    } else {
        Ok(())
    }
}

fn cmd_wigner(
    registry: &Registry,
    args: &StateArgs,
    spec: &GridSpec,
    format: Format,
    out: &Path,
) -> Result<()> {
    let family = registry.family(&args.family)?;
    let params = args.params();
    let state = family.build(&params)?;
    let grid = wigner_grid(&state, spec)?;
    let quadrature_integral = wigner_integral(&state, &QuadratureSpec::default())?;
    let diagnostics = json!({
        "family": family.name(),
        "params": family.resolved(&params)?,
        "nx": grid.nx,
        "np": grid.np,
        "min": grid.min(),
        "max": grid.max(),
        "grid_integral": grid.integral(),
        "quadrature_integral": quadrature_integral,
    });

    let path = output_path(out);
    let file = create(&path)?;
    let sidecar = match format {
        Format::Csv => {
            let mut w = BufWriter::new(file);
            grid.write_csv(&mut w).map_err(|e| io_error(&path, e))?;
            w.flush().map_err(|e| io_error(&path, e))?;
            path.with_extension("json")
        }
        Format::Json => {
            write_json(file, &json!({ "header": diagnostics, "grid": grid }))?;
            path.with_extension("meta.json")
        }
    };
    write_json(create(&sidecar)?, &diagnostics)
}

fn output_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn create(path: &Path) -> Result<File> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| io_error(parent, e))?;
    }
    File::create(path).map_err(|e| io_error(path, e))
}

fn io_error(path: impl AsRef<Path>, source: io::Error) -> CliError {
    CliError::Io {
        path: path.as_ref().to_path_buf(),
        source,
    }
}

fn write_json<W: Write, T: Serialize>(writer: W, value: &T) -> Result<()> {
    let mut w = BufWriter::new(writer);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w).map_err(|e| io_error("<output>", e))?;
    w.flush().map_err(|e| io_error("<output>", e))
}

fn write_csv<W: Write>(writer: W, records: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for record in records {
        w.write_record(record)?;
    }
    w.flush().map_err(|e| io_error("<output>", e))
}
