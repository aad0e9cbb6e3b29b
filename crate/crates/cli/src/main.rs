use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matsuo_cli::claims::{run_all, run_claim, ClaimOptions};
use matsuo_cli::source::{parse_alpha, parse_field, SpaceSource};
use matsuo_cli::CliError;
use matsuo_core::algebra::{AlgebraJson, AlgebraTable, FusionRules};
use matsuo_core::constructions::{matsuo_algebra, MatsuoSpec};
use matsuo_core::groups::{coset_budget_from_env, todd_coxeter, Presentation, Strategy};
use matsuo_core::Scalar;

#[derive(Parser)]
#[command(
    name = "matsuo",
    version,
    about = "Exact Matsuo and Jordan algebra verification runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SourceArgs {
    /// Named geometry: P3 or P2dual.
    #[arg(long)]
    space: Option<String>,
    /// Group: sym:N, 3sq2, W<k>A<n>, G4 or G5.
    #[arg(long)]
    group: Option<String>,
    /// Root system, for example A4, D5, E6.
    #[arg(long)]
    roots: Option<String>,
}

impl SourceArgs {
    fn source(&self) -> Result<SpaceSource, CliError> {
        SpaceSource::from_flags(self.space.as_deref(), self.group.as_deref(), self.roots.as_deref())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a Matsuo algebra and print its product table as JSON.
    Build {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Print the point-line geometry as JSON.
    Space {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Run a claim and print its verification report.
    Verify {
        /// Claim id; omit with --all.
        claim: Option<String>,
        /// Run every claim and print an array of reports.
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Check every basis element of an algebra JSON file ("-" for stdin) as an axis.
    Axes {
        file: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Enumerate cosets of the trivial subgroup and print the table as CSV.
    Enumerate {
        /// G4, G5, or a presentation file.
        presentation: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Felsch)]
        strategy: StrategyArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("matsuo: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}").map_err(|e| CliError::Failed(e.to_string()))
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Build { source, alpha, field } => {
            let field = parse_field(&field)?;
            let alpha = parse_alpha(&alpha, field)?;
            let space = source.source()?.build()?;
            let spec = MatsuoSpec::new(space, alpha).map_err(|e| CliError::Usage(e.to_string()))?;
            print_json(&matsuo_algebra(&spec).to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Space { source } => {
            print_json(&source.source()?.build()?.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { claim, all, n, field } => {
            if all {
                let reports = run_all()?;
                print_json(&reports)?;
                return Ok(verdict(reports.iter().all(|r| r.pass)));
            }
            let claim = claim.ok_or_else(|| CliError::Usage("give a claim id or --all".into()))?;
            let opts = ClaimOptions {
                n,
                field: field.as_deref().map(parse_field).transpose()?,
            };
            let report = run_claim(&claim, &opts)?;
            print_json(&report)?;
            Ok(verdict(report.pass))
        }
        Command::Axes { file, alpha } => {
            let text = if file == "-" {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(&file).map_err(|e| CliError::Usage(format!("{file}: {e}")))?
            };
            let doc: AlgebraJson = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{file}: {e}")))?;
            let a = AlgebraTable::from_json(&doc).map_err(|e| CliError::Usage(format!("{file}: {e}")))?;
            let alpha = parse_alpha(&alpha, a.field())?;
            let report = axes_report(&a, alpha)?;
            print_json(&report)?;
            Ok(verdict(report.axes == report.dim))
        }
        Command::Enumerate { presentation, strategy } => {
            let p = match presentation.as_str() {
                "G4" => Presentation::g4(),
                "G5" => Presentation::g5(),
                path => {
                    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                    Presentation::parse(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?
                }
            };
            let strategy = match strategy {
                StrategyArg::Hlt => Strategy::Hlt,
                StrategyArg::Felsch => Strategy::Felsch,
            };
            let table = todd_coxeter(&p, &[], coset_budget_from_env(), strategy)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            eprintln!("{} cosets", table.len());
            io::stdout()
                .lock()
                .write_all(table.to_csv().as_bytes())
                .map_err(|e| CliError::Failed(e.to_string()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct AxesReport {
    field: String,
    alpha: Scalar,
    dim: usize,
    axes: usize,
    elements: Vec<AxisEntry>,
}

#[derive(Serialize)]
struct AxisEntry {
    index: usize,
    label: String,
    axis: bool,
    /// Eigenvalue and eigenspace dimension, in the order 1, 0, alpha.
    dims: Vec<(Scalar, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

fn axes_report(a: &AlgebraTable, alpha: Scalar) -> Result<AxesReport, CliError> {
    if alpha.is_zero() || alpha == a.field().one() {
        return Err(CliError::Usage(format!("alpha = {alpha} must differ from 0 and 1")));
    }
    let rules = FusionRules::jordan_type(&alpha);
    let elements: Vec<AxisEntry> = (0..a.dim())
        .map(|i| {
            let (axis, dims, violation) = match a.check_axis(&a.basis(i), &rules) {
                Ok(rep) => (true, rep.dims, None),
                Err(v) => {
                    let dims = match &v {
                        matsuo_core::algebra::AxisViolation::NotDiagonalizable { dims } => dims.clone(),
                        _ => Vec::new(),
                    };
                    (false, dims, Some(v.to_string()))
                }
            };
            AxisEntry {
                index: i,
                label: a.labels()[i].clone(),
                axis,
                dims,
                violation,
            }
        })
        .collect();
    Ok(AxesReport {
        field: a.field().to_string(),
        alpha,
        dim: a.dim(),
        axes: elements.iter().filter(|e| e.axis).count(),
        elements,
    })
}
