//! Command-line front end. Exit codes: 0 success, 1 verification failure or
//! computation error, 2 usage error.

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use qrwe_core::curve_census::{empirical_moment, quartic_census, Flavor};
use qrwe_core::enumerators::QREnum;
use qrwe_core::hecke_traces::{moment_formula, TraceTable};
use qrwe_core::qr_pipeline::{dual_classical, dual_qr, qr_c14, qr_classical_c14};
use qrwe_core::quadratic_forms::{class_number, h_w, hurwitz_hw, Discriminant};
use qrwe_core::rs_codes::{brute_qr, budget_from_env, build_code};
use qrwe_core::util::odd_prime_power;
use qrwe_core::verify::{format_table, run_suite, Suite};
use qrwe_core::{Error, FieldCtx};

#[derive(Parser)]
#[command(name = "qrwe", version, about = "Quadratic-residue weight enumerators of Reed-Solomon codes")]
struct Cli {
    /// Worker threads for censuses and brute force (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format for enumerators and coefficient tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// QR enumerator of C_{1,4} from the closed form.
    C14 {
        #[arg(long)]
        q: u64,
        /// Classical code of length q instead of the projective one.
        #[arg(long)]
        classical: bool,
    },
    /// Dual coefficients with Y/Z degree at most M.
    Dual {
        #[arg(long)]
        q: u64,
        #[arg(long = "max-codim")]
        max_codim: usize,
        #[arg(long)]
        classical: bool,
        /// Print the comparisons with the explicit formulas instead.
        #[arg(long)]
        checks: bool,
    },
    /// Exhaustive QR enumerator of C_{1,h}.
    Brute {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        classical: bool,
        /// Maximum number of codewords (overrides QRWE_BUDGET).
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Trace of T_q on S_k(Γ0(N)).
    Trace {
        #[arg(long, value_parser = ["1", "2", "4"])]
        level: String,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        q: u64,
    },
    /// Weighted 2R-th moment of the trace of Frobenius.
    Moments {
        #[arg(long)]
        q: u64,
        #[arg(long = "R")]
        r: u32,
        #[arg(long, value_parser = ["all", "2tors", "full2tors"], default_value = "all")]
        flavor: String,
        /// Count curves directly instead of using the closed form.
        #[arg(long)]
        empirical: bool,
    },
    /// Class number h(D) and weighted h_w(D).
    Classnum {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Hurwitz-Kronecker class number H_w(Δ).
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Run verification suites and print a pass/fail table.
    Verify {
        #[arg(long, value_parser = ["classnumbers", "traces", "moments", "c14", "duals", "examples", "all"])]
        suite: String,
        #[arg(long)]
        qmax: Option<u64>,
    },
}

fn render_enum(e: &QREnum, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", e.to_json()),
        Format::Csv => e.to_csv(),
    }
}

fn field(q: u64) -> Result<Arc<FieldCtx>, Error> {
    let (p, v) = odd_prime_power(q)?;
    Ok(Arc::new(FieldCtx::new(p, v)?))
}

/// Returns the text to print and whether every verification passed.
fn run(cli: Cli) -> Result<(String, bool), Error> {
    let format = cli.format;
    let out = match cli.command {
        Command::C14 { q, classical } => {
            let e = if classical { qr_classical_c14(q)? } else { qr_c14(q)? };
            render_enum(&e, format)
        }
        Command::Dual { q, max_codim, classical, checks } => {
            let report = if classical { dual_classical(q, max_codim)? } else { dual_qr(q, max_codim)? };
            if checks {
                return Ok((format!("{}\n", report.checks_json()), report.all_match()));
            }
            let mut e = QREnum::new(report.n, q);
            for (&(j, k), c) in &report.coefficients {
                e.add_term(j, k, c.clone())?;
            }
            render_enum(&e, format)
        }
        Command::Brute { q, h, classical, budget } => {
            let code = build_code(field(q)?, h, !classical)?;
            let e = brute_qr(&code, budget.unwrap_or_else(budget_from_env))?;
            render_enum(&e, format)
        }
        Command::Trace { level, weight, q } => {
            let level: u32 = level.parse().expect("validated by clap");
            format!("{}\n", TraceTable::global().trace(level, weight, q)?)
        }
        Command::Moments { q, r, flavor, empirical } => {
            let flavor: Flavor = flavor.parse()?;
            let value = if empirical {
                empirical_moment(&quartic_census(&*field(q)?), r, flavor)
            } else {
                moment_formula(q, r, flavor)?
            };
            format!("{value}\n")
        }
        Command::Classnum { disc } => {
            let d = Discriminant::new(disc)?;
            format!("{{\"disc\":{disc},\"h\":{},\"h_w\":\"{}\"}}\n", class_number(d), h_w(d))
        }
        Command::Hurwitz { disc } => format!("{}\n", hurwitz_hw(disc)?),
        Command::Verify { suite, qmax } => {
            let suite: Suite = suite.parse()?;
            let checks = run_suite(suite, qmax, budget_from_env());
            return Ok((format_table(&checks), checks.iter().all(|c| c.passed)));
        }
    };
    Ok((out, true))
}

/// Writes to stdout; a closed pipe (`qrwe ... | head`) is not an error.
fn emit(text: &str) -> std::io::Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok((text, passed)) => {
            if let Err(e) = emit(&text) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
