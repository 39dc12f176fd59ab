use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use soclelab::group::io::{construct_family, write_cayley};
use soclelab::group::DEFAULT_MAX_ORDER;
use soclelab::Error;
use soclelab_cli::{
    analyze, default_prime, exit_code, init_threads, scan, source::expand_scan_sources,
    ScanOptions, Source, TheoremMode, EXIT_CONSISTENCY, EXIT_INPUT, EXIT_OK,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser)]
#[command(
    name = "soclelab",
    version,
    about = "Socle of the center of modular group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Prime; defaults to the smallest prime dividing |G'| (or |G| when abelian).
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group given as a family expression or a group file.
    Analyze {
        source: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = TheoremMode::Auto)]
        theorems: TheoremMode,
    },
    /// Analyze with every structural check forced.
    Verify {
        source: String,
        #[command(flatten)]
        common: Common,
    },
    /// Scan `builtin`, `synthetic`, directories, files or family expressions.
    Scan {
        #[arg(required = true)]
        sources: Vec<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = TheoremMode::Auto)]
        theorems: TheoremMode,
        /// One row per prime dividing |G|.
        #[arg(long)]
        all_primes: bool,
    },
    /// Write the Cayley table of a family expression.
    Construct {
        spec: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run_analyze(source: &str, common: &Common, mode: TheoremMode) -> Result<i32, Error> {
    let src = Source::resolve(source);
    let loaded = src.load(common.max_order)?;
    let p = match common.p.or(loaded.prime_hint) {
        Some(p) => p,
        None => default_prime(&loaded.group)?,
    };
    let report = analyze(&loaded.group, &src.label(), p, mode)?;
    match common.format {
        Format::Json => emit(&(report.to_json() + "\n")),
        Format::Table => emit(&report.to_table()),
    }
    for m in &report.consistency_failures {
        eprintln!("consistency failure: {m}");
    }
    Ok(if report.consistency_failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_CONSISTENCY
    })
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze {
            source,
            common,
            theorems,
        } => run_analyze(&source, &common, theorems),
        Command::Verify { source, common } => run_analyze(&source, &common, TheoremMode::All),
        Command::Scan {
            sources,
            common,
            theorems,
            all_primes,
        } => {
            let srcs = expand_scan_sources(&sources)?;
            let result = scan(
                &srcs,
                ScanOptions {
                    max_order: common.max_order,
                    mode: theorems,
                    all_primes,
                    p: common.p,
                },
            );
            match common.format {
                Format::Json => emit(&(result.to_json() + "\n")),
                Format::Table => emit(&result.to_table()),
            }
            Ok(if result.summary.consistency_failures == 0 {
                EXIT_OK
            } else {
                EXIT_CONSISTENCY
            })
        }
        Command::Construct {
            spec,
            out,
            max_order,
        } => {
            let g = construct_family(&spec, max_order)?;
            std::fs::write(&out, write_cayley(&g, None))
                .map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            eprintln!("wrote order {} table to {}", g.order(), out.display());
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    init_threads();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_INPUT as u8
            } else {
                EXIT_OK as u8
            });
        }
    };
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
