use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dt_wallcross::cli::{
    cmd_cache_clear, cmd_coeff, cmd_omega, cmd_series, cmd_verify, with_jobs, Cache, CliError,
    Format, Method, EXIT_VERIFY_FAILED,
};

#[derive(Parser)]
#[command(
    name = "dtwc",
    version,
    about = "Exact D0-D6 invariants by wall-crossing and closed series"
)]
struct Cli {
    /// Worker threads for wall-crossing sums (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for cached wall-crossing results (overrides DTWC_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Wallcross,
}

#[derive(Subcommand)]
enum Command {
    /// Print the DT(rank) generating series up to q^order.
    Series {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        /// Specialize χ to this integer.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
    },
    /// Print Ω(2, n) for n = 0..=nmax with an integer-valuedness column.
    Omega {
        #[arg(long, alias = "max-n")]
        nmax: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
    },
    /// Run the verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        /// Truncation order of the closed series (default: nmax).
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Show s, u and tree data for a configuration such as "B2,W1,W3".
    Coeff { config: String },
    /// Manage the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Delete every cached entry.
    Clear,
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cache = Cache::configured(cli.cache_dir.as_deref());
    let jobs = cli.jobs;
    match cli.command {
        Command::Series {
            rank,
            order,
            method,
            format,
            chi,
        } => {
            let method = match method {
                MethodArg::Closed => Method::Closed,
                MethodArg::Wallcross => Method::Wallcross,
            };
            let doc = with_jobs(jobs, || {
                cmd_series(rank, order, method, chi, cache.as_ref())
            })??;
            print!("{}", doc.render(format.into()));
        }
        Command::Omega { nmax, format, chi } => {
            let doc = cmd_omega(nmax, chi)?;
            print!("{}", doc.render(format.into()));
        }
        Command::Verify {
            rmax,
            nmax,
            order,
            format,
        } => {
            let report = with_jobs(jobs, || cmd_verify(rmax, nmax, order))??;
            match Format::from(format) {
                Format::Json => println!("{}", report_json(&report)),
                Format::Csv => {
                    println!("name,params,pass,seconds");
                    for c in &report.checks {
                        println!(
                            "{},\"{}\",{},{:.6}",
                            c.name,
                            c.params,
                            c.pass,
                            c.elapsed.as_secs_f64()
                        );
                    }
                }
                Format::Table => println!("{report}"),
            }
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED as u8));
            }
        }
        Command::Coeff { config } => print!("{}", cmd_coeff(&config)?),
        Command::Cache {
            action: CacheAction::Clear,
        } => println!("{}", cmd_cache_clear(cache.as_ref())?),
    }
    Ok(ExitCode::SUCCESS)
}

fn report_json(report: &dt_wallcross::verify::VerificationReport) -> String {
    let checks: Vec<serde_json::Value> = report
        .checks
        .iter()
        .map(|c| {
            serde_json::json!({
                "name": c.name,
                "params": c.params,
                "expected": c.expected.to_string(),
                "actual": c.actual.to_string(),
                "pass": c.pass,
                "seconds": c.elapsed.as_secs_f64(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "pass": report.passed(),
        "checks": checks,
    }))
    .expect("report serializes")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
