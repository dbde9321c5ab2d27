use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use franel_core::sequences::{multi_power_sum, multi_power_sum_oracle, DEFAULT_ENUMERATION_BUDGET};
use franel_core::{Family, IntModulus, Integer, SequenceRequest, SequenceStore};
use franel_cli::{cache, run_scan, run_verify, CliError, Conjecture, Result, ScanConfig, ScanReport, Suite, VerifyConfig};
use serde_json::json;

#[derive(Parser)]
#[command(name = "franel", version, about = "Exact Franel-number identities, congruences and conjecture scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Franel,
    Powersum,
    Multinomial,
    A002893,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Theorems,
    Lemmas,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureArg {
    Conj1,
    #[value(name = "conj1-odd")]
    Conj1Odd,
    #[value(name = "conj1-even")]
    Conj1Even,
    Conj2,
}

#[derive(clap::Args)]
struct Output {
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Sequence cache to read and update.
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a sequence family.
    Seq {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        count: usize,
        /// Reduce printed values modulo this number.
        #[arg(long)]
        modulus: Option<Integer>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite and emit a report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Upper index bound (default: 200 for identities, 300 for theorems).
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long, default_value_t = franel_cli::suites::DEFAULT_PMAX)]
        pmax: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Omit the timestamp so identical runs give identical bytes.
        #[arg(long)]
        stable: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Search a conjecture's parameter grid for counterexamples.
    Scan {
        #[arg(long, value_enum)]
        conjecture: ConjectureArg,
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long)]
        rmax: Option<u64>,
        #[arg(long)]
        mmax: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        stable: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the multinomial power-sum recurrence with brute-force enumeration.
    Oracle {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        /// Maximum number of compositions to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Seq {
            family,
            m,
            r,
            count,
            modulus,
            format,
            output,
        } => {
            let name = match family {
                FamilyArg::Franel => "franel",
                FamilyArg::Powersum => "powersum",
                FamilyArg::Multinomial => "multinomial",
                FamilyArg::A002893 => "a002893",
            };
            let mut request = SequenceRequest::new(Family::from_parts(name, m, r)?, count)?;
            if let Some(md) = modulus {
                request = request.with_modulus(IntModulus::new(md)?);
            }
            let store = open_store(&output);
            let table = store.table(&request);
            let values: Vec<String> = table.values.iter().map(ToString::to_string).collect();
            let text = match format {
                Format::Plain => values.join(" ") + "\n",
                Format::Csv => {
                    let mut s = String::from("n,value\n");
                    for (i, v) in values.iter().enumerate() {
                        s.push_str(&format!("{i},{v}\n"));
                    }
                    s
                }
                Format::Json => {
                    let doc = json!({
                        "family": request.family.name(),
                        "m": request.family.m(),
                        "r": request.family.r(),
                        "count": count,
                        "modulus": request.modulus.as_ref().map(|m| m.value().to_string()),
                        "values": values,
                    });
                    serde_json::to_string_pretty(&doc).expect("json value serializes") + "\n"
                }
            };
            emit(&output, &text)?;
            close_store(&store, &output)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            nmax,
            pmax,
            jobs,
            stable,
            format,
            output,
        } => {
            let suite = match suite {
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Theorems => Suite::Theorems,
                SuiteArg::Lemmas => Suite::Lemmas,
                SuiteArg::All => Suite::All,
            };
            let config = VerifyConfig {
                suite,
                nmax,
                pmax,
                jobs,
            };
            let store = open_store(&output);
            let report = run_verify(&store, &config)?;
            finish_report(report, stable, format, &output, &store)
        }
        Command::Scan {
            conjecture,
            nmax,
            rmax,
            mmax,
            jobs,
            stable,
            format,
            output,
        } => {
            let conjecture = match conjecture {
                ConjectureArg::Conj1 => Conjecture::Conj1,
                ConjectureArg::Conj1Odd => Conjecture::Conj1Odd,
                ConjectureArg::Conj1Even => Conjecture::Conj1Even,
                ConjectureArg::Conj2 => Conjecture::Conj2,
            };
            if mmax.is_some() && conjecture != Conjecture::Conj2 {
                return Err(CliError::Usage("--mmax only applies to conj2".into()));
            }
            let mut config = ScanConfig::new(conjecture);
            config.nmax = nmax.unwrap_or(config.nmax);
            config.rmax = rmax.unwrap_or(config.rmax);
            config.mmax = mmax.unwrap_or(config.mmax);
            config.jobs = jobs;
            let store = open_store(&output);
            let report = run_scan(&store, &config)?;
            finish_report(report, stable, format, &output, &store)
        }
        Command::Oracle { m, n, r, budget } => {
            let slow: Integer = multi_power_sum_oracle(m, n, r, budget)?;
            let fast: Integer = multi_power_sum(m, n, r)?;
            if fast == slow {
                println!("{fast} == {slow} OK");
                Ok(0)
            } else {
                println!("{fast} != {slow} MISMATCH");
                Ok(1)
            }
        }
    }
}

fn finish_report(
    mut report: ScanReport,
    stable: bool,
    format: Format,
    output: &Output,
    store: &SequenceStore,
) -> Result<u8> {
    if !stable {
        report.generated_at = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
    }
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Plain => report.to_plain(),
    };
    emit(output, &text)?;
    close_store(store, output)?;
    Ok(if report.all_hold() { 0 } else { 1 })
}

fn open_store(output: &Output) -> SequenceStore {
    let store = SequenceStore::new();
    if let Some(path) = &output.cache {
        for w in cache::load_into(&store, path) {
            eprintln!("warning: {w}");
        }
    }
    store
}

fn close_store(store: &SequenceStore, output: &Output) -> Result<()> {
    match &output.cache {
        Some(path) => cache::save(store, path),
        None => Ok(()),
    }
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
