use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ssp5::curve::{
    branch_set, full_automorphism_type, hasse_witt_matrix, parse_curve, reduced_automorphisms,
};
use ssp5::field::FieldTowerCtx;
use ssp5::genus5::TypeLabel;
use ssp5::report::{
    build_report, load_or_compute_sp, load_or_compute_ssp2, parse_range, parse_tables, parse_types,
    verify_tables, Completeness, Format, RowStatus, TABLES_FIXTURE,
};
use ssp5::Error;

#[derive(Parser)]
#[command(
    name = "ssp5",
    version,
    about = "Superspecial genus-5 hyperelliptic curves with C2³ automorphisms"
)]
struct Cli {
    /// Print timings and cache outcomes to stderr.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Md => Format::Md,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the curves for one prime and print the report.
    Enum {
        #[arg(long)]
        prime: u64,
        /// Comma-separated subset of 4-1,7,9,10,11,12,15.
        #[arg(long)]
        types: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long, env = "SSP5_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute rows of the published tables and compare.
    VerifyTables {
        /// `A..B`, both ends included.
        #[arg(long)]
        range: String,
        /// Defaults to the copy built into the binary.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, env = "SSP5_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Hasse–Witt rank, superspeciality and automorphism group of one curve.
    Oracle {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        curve: String,
    },
    /// List the supersingular j-invariants.
    Ssjlist {
        #[arg(long)]
        prime: u64,
        #[arg(long, env = "SSP5_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Enumerate superspecial genus-2 curves and print the catalog.
    Ssp2 {
        #[arg(long)]
        prime: u64,
        #[arg(long, env = "SSP5_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
}

/// Exit codes: 2 for input errors, 3 when no genus-2 seed is found, 4 for
/// results that fail verification, 1 for anything else.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::RejectedInput(_)
        | Error::Parse(_)
        | Error::NotSquareFree
        | Error::RootsOutsideField { .. }
        | Error::ZeroPolynomial
        | Error::RepeatedPoints
        | Error::CostGuard(_) => 2,
        Error::BootstrapFailure { .. } => 3,
        Error::Integrity(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Enum {
            prime,
            types,
            format,
            cache_dir,
            output,
        } => {
            let types = match types {
                Some(t) => parse_types(&t)?,
                None => TypeLabel::ALL.into_iter().collect::<BTreeSet<_>>(),
            };
            let (doc, info) = build_report(prime, &types, cache_dir.as_deref())?;
            if cli.timings {
                eprintln!("p = {prime}: {info}");
            }
            let text = doc.render(format.into())?;
            out.write_all(text.as_bytes())?;
            if let Some(path) = output {
                write_file(&path, &text)?;
            }
            Ok(if doc.meta.completeness == Completeness::ChecksFailed {
                4
            } else {
                0
            })
        }
        Command::VerifyTables {
            range,
            fixtures,
            cache_dir,
        } => {
            let range = parse_range(&range)?;
            let text = match fixtures {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| {
                    Error::RejectedInput(format!("fixture {}: {e}", path.display()))
                })?,
                None => TABLES_FIXTURE.to_string(),
            };
            let rows = parse_tables(&text)?;
            let mut failed = false;
            verify_tables(&rows, &range, cache_dir.as_deref(), |cmp, doc, info| {
                let checks_ok = doc.meta.checks.all_hold();
                let suffix = if checks_ok { "" } else { " CHECKS_FAILED" };
                let _ = writeln!(out, "{cmp}{suffix}");
                if cli.timings {
                    eprintln!("p = {}: {info}", cmp.p);
                }
                failed |= cmp.status == RowStatus::Mismatch || !checks_ok;
            })?;
            Ok(if failed { 4 } else { 0 })
        }
        Command::Oracle { prime, curve } => {
            let k = FieldTowerCtx::new(prime)?;
            let h = parse_curve(&k, &curve)?;
            let hw = hasse_witt_matrix(&k, &h);
            let rank = hw.rank(&k);
            let g = h.genus();
            let aut = if g == 5 {
                full_automorphism_type(&k, &h)?.label.to_string()
            } else {
                format!(
                    "order {}",
                    2 * reduced_automorphisms(&k, &branch_set(&k, &h)?).len()
                )
            };
            writeln!(
                out,
                "genus={g} hasse_witt_rank={rank} superspecial={} aut={aut}",
                rank == 0
            )?;
            Ok(0)
        }
        Command::Ssjlist { prime, cache_dir } => {
            let k = FieldTowerCtx::new(prime)?;
            let (s, _) = load_or_compute_sp(&k, cache_dir.as_deref())?;
            for line in s.payload_lines(&k) {
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
        Command::Ssp2 { prime, cache_dir } => {
            let k = FieldTowerCtx::new(prime)?;
            let dir = cache_dir.as_deref();
            let (s, _) = load_or_compute_sp(&k, dir)?;
            let (c, _) = load_or_compute_ssp2(&k, &s, dir)?;
            writeln!(out, "# p={prime} jacobians={}", c.len())?;
            for line in c.payload_lines(&k) {
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
