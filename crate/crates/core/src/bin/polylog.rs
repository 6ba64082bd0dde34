//! `polylog`: evaluate closed forms, emit coefficient tables, run verification suites.
//!
//! Exit codes: 0 success, 1 verification failures or I/O errors, 2 usage errors,
//! 3 domain and capacity errors from the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polylog_core::approx::s_minus_truncated;
use polylog_core::euler_sums::{closed, sum_oracle, SumKind, SumTag};
use polylog_core::exact::{ClosedForm, NumericContext};
use polylog_core::ipq::{ipq_final, ipq_numeric, Family};
use polylog_core::lognm::{h_closed, i_closed, lognm_numeric, LogIntegralKind, LogTag};
use polylog_core::report::VerifyConfig;
use polylog_core::series::kolbig_snp;
use polylog_core::special::{nielsen_num, sigma_tilde};
use polylog_core::table::{Table, TableKind};
use polylog_core::verify::{run, Suite};
use polylog_core::Error;

#[derive(Parser)]
#[command(
    name = "polylog",
    version,
    about = "Closed forms and numerical checks for polylogarithmic integrals and Euler sums"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named quantity.
    Eval(EvalArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        /// Tolerance file with `key = value` lines.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Write a coefficient table as CSV and JSON.
    Table {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        /// Output directory; defaults to $POLYLOG_OUT, then the current directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated approximations.
    Approx {
        #[command(subcommand)]
        which: ApproxCommand,
    },
}

#[derive(Subcommand)]
enum ApproxCommand {
    /// Truncated Taylor approximation of the alternating Euler sum S-(p).
    SMinus {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        kt: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Ipq,
    SPlus,
    SMinus,
    Jordan1,
    Jordan2,
    Milgram,
    C,
    SNp,
    SigmaNp,
    Inm,
    Hnm,
    Approx,
}

#[derive(Args)]
struct EvalArgs {
    target: Target,
    /// plus, minus or mixed (ipq only).
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    kt: Option<u32>,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn need(v: Option<u32>, flag: &str) -> Result<u32, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn sum_kind(tag: SumTag, r: Option<u32>) -> Result<SumKind, Failure> {
    Ok(SumKind::new(tag, need(r, "r")?)?)
}

fn eval(a: &EvalArgs) -> Result<Value, Failure> {
    let (label, cf, oracle): (String, ClosedForm, f64) = match a.target {
        Target::Ipq => {
            let fam = a
                .family
                .as_deref()
                .ok_or_else(|| Failure::Usage("missing --family".into()))?;
            let f = Family::from_name(fam).ok_or_else(|| Failure::Usage(format!("unknown family {fam:?}")))?;
            let (p, q) = (need(a.p, "p")?, need(a.q, "q")?);
            (
                format!("I_{}({p},{q})", f.name()),
                ipq_final(f, p, q)?,
                ipq_numeric(f, p, q, 1e-12)?,
            )
        }
        Target::SPlus | Target::SMinus | Target::Jordan1 | Target::Jordan2 | Target::Milgram | Target::C => {
            let tag = match a.target {
                Target::SPlus => SumTag::SPlus,
                Target::SMinus => SumTag::SMinus,
                Target::Jordan1 => SumTag::Jordan1,
                Target::Jordan2 => SumTag::Jordan2,
                Target::Milgram => SumTag::Milgram,
                _ => SumTag::CSum,
            };
            let k = sum_kind(tag, a.r)?;
            (format!("{}({})", tag.name(), k.order), closed(k)?, sum_oracle(k)?)
        }
        Target::SNp => {
            let (n, p) = (need(a.n, "n")?, need(a.p, "p")?);
            (format!("s({n},{p})"), kolbig_snp(n, p)?, nielsen_num(n, p, 1.0)?)
        }
        Target::SigmaNp => {
            let (n, p) = (need(a.n, "n")?, need(a.p, "p")?);
            (format!("sigma({n},{p})"), sigma_tilde(n, p), nielsen_num(n, p, -1.0)?)
        }
        Target::Inm | Target::Hnm => {
            let (n, m) = (need(a.n, "n")?, need(a.m, "m")?);
            let (tag, name, cf) = match a.target {
                Target::Inm => (LogTag::Inm, "i", i_closed(n, m)?),
                _ => (LogTag::Hnm, "h", h_closed(n, m)?),
            };
            (
                format!("{name}({n},{m})"),
                cf,
                lognm_numeric(LogIntegralKind { tag, n, m }, 1e-12)?,
            )
        }
        Target::Approx => return approx(need(a.p, "p")?, need(a.kt, "kt")?),
    };
    let decimal = NumericContext::shared().eval(&cf)?;
    Ok(json!({
        "quantity": label,
        "closed": cf,
        "text": cf.to_string(),
        "pretty": cf.pretty(),
        "decimal": decimal,
        "oracle": oracle,
        "abs_error": (decimal - oracle).abs(),
    }))
}

fn approx(p: u32, kt: u32) -> Result<Value, Failure> {
    let cf = s_minus_truncated(p, kt)?;
    let decimal = NumericContext::shared().eval(&cf)?;
    let reference = sum_oracle(SumKind::new(SumTag::SMinus, p)?)?;
    Ok(json!({
        "quantity": format!("S-({p}) truncated at kt = {kt}"),
        "closed_form": cf,
        "text": cf.to_string(),
        "pretty": cf.pretty(),
        "decimal": decimal,
        "reference_decimal": reference,
        "abs_error": (decimal - reference).abs(),
    }))
}

fn print_value(v: &Value, pretty: bool) {
    if !pretty {
        println!("{}", serde_json::to_string_pretty(v).expect("json"));
        return;
    }
    let obj = v.as_object().expect("object");
    println!("{}", obj["quantity"].as_str().unwrap_or(""));
    println!("  = {}", obj["pretty"].as_str().unwrap_or(""));
    for key in ["decimal", "oracle", "reference_decimal", "abs_error"] {
        if let Some(x) = obj.get(key).and_then(Value::as_f64) {
            println!("  {key}: {x:.15e}");
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Eval(a) => print_value(&eval(&a)?, cli.pretty),
        Command::Approx {
            which: ApproxCommand::SMinus { p, kt },
        } => print_value(&approx(p, kt)?, cli.pretty),
        Command::Verify {
            suite,
            tol_scale,
            config,
        } => {
            let suite: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            if tol_scale.is_nan() || tol_scale <= 0.0 {
                return Err(Failure::Usage("--tol-scale must be positive".into()));
            }
            let mut cfg = match config {
                Some(path) => VerifyConfig::load(&path)?,
                None => VerifyConfig::default(),
            };
            cfg.tol_scale *= tol_scale;
            let rep = run(suite, cfg);
            if cli.pretty {
                print!("{}", rep.to_text());
            } else {
                println!("{}", rep.to_json());
            }
            if !rep.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table { kind, max_weight, out } => {
            let kind: TableKind = kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let dir = out
                .or_else(|| std::env::var_os("POLYLOG_OUT").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("."));
            let table = Table::build(kind, max_weight)?;
            let (csv, json) = table
                .write(&dir)
                .map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            if cli.pretty {
                print!("{}", table.to_csv());
            } else {
                println!("{}", json!({ "csv": csv, "json": json, "rows": table.rows.len() }));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ (Error::Domain(_) | Error::Capacity { .. }))) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(Error::Parse(msg))) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(1)
        }
    }
}
