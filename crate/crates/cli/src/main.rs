use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use pickbody_cli::commands::{self, Settings};
use pickbody_cli::problem::ProblemFile;
use pickbody_cli::report::Report;
use pickbody_cli::{slice, CliError, ExitStatus};

#[derive(Parser)]
#[command(name = "pickbody", version, about = "Pick interpolation on the unit disc and the polydisc")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Problem file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Tolerance override for the command.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Width of the band around mu = 1 treated as the boundary.
    #[arg(long, global = true)]
    band: Option<f64>,
    /// Grid size for `delta` (per axis) and `slice` (points per axis).
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Solvability and uniqueness from the Pick matrix.
    Diagnose,
    /// Minkowski functional of the Pick body along `alpha`.
    Mu,
    /// The invariant d for `pair`.
    D,
    /// Construct an interpolant.
    Solve,
    /// Upper bound for delta and the graph-disc equality certificate.
    Delta,
    /// Sample mu on a planar slice, as CSV.
    Slice,
    /// Run the property battery.
    Selftest,
}

fn sink(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_report(report: &Report, output: &Option<PathBuf>) -> Result<(), CliError> {
    let mut out = sink(output)?;
    writeln!(out, "{}", report.to_json())?;
    out.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitStatus, CliError> {
    let settings = Settings {
        input: cli.input.as_ref().map(|p| p.display().to_string()),
        tol: cli.tol,
        band: cli.band,
        grid: cli.grid,
        seed: cli.seed,
    };
    settings.validate()?;

    if let Command::Selftest = cli.command {
        let start = Instant::now();
        let report = commands::selftest(&settings);
        if let Some(props) = report.details["properties"].as_array() {
            for p in props {
                let o: pickbody_cli::selftest::PropertyOutcome =
                    serde_json::from_value(p.clone()).expect("outcomes serialize losslessly");
                eprintln!("{}", o.line());
            }
        }
        eprintln!("selftest finished in {:.1} s", start.elapsed().as_secs_f64());
        emit_report(&report, &cli.output)?;
        return Ok(report.exit_status);
    }

    let path = cli.input.as_ref().ok_or_else(|| CliError::Input("--input is required".into()))?;
    let file = ProblemFile::read(path)?;
    if let Command::Slice = cli.command {
        let rows = slice::sample(&file, cli.grid, cli.tol)?;
        slice::write_csv(&rows, sink(&cli.output)?)?;
        return Ok(ExitStatus::Ok);
    }
    let report = match cli.command {
        Command::Diagnose => commands::diagnose(&file, &settings),
        Command::Mu => commands::mu(&file, &settings),
        Command::D => commands::d(&file, &settings),
        Command::Solve => commands::solve(&file, &settings),
        Command::Delta => commands::delta(&file, &settings),
        Command::Slice | Command::Selftest => unreachable!("handled above"),
    }?;
    for d in &report.diagnostics {
        eprintln!("note: {d}");
    }
    emit_report(&report, &cli.output)?;
    Ok(report.exit_status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            return ExitCode::from(if ok { ExitStatus::Ok } else { ExitStatus::InputError }.code());
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_status().code())
        }
    }
}
