use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lexseg::oracle::k_polynomial_staircase;
use lexseg::report::{analyze, resolution_json, verification_json, AnalyzeOptions};
use lexseg::segment::monomials_of_degree;
use lexseg::sweep::{run_sweep, SweepConfig};
use lexseg::{
    build_resolution, parse_monomial, parse_monomial_list, resolution_from_order, verify_resolution, AmbientContext,
    Error, Lexsegment,
};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;

/// Analyze lexsegment monomial ideals.
#[derive(Parser)]
#[command(name = "lexseg", version)]
struct Cli {
    /// Add a `meta` object with version and timing to the output.
    #[arg(long, global = true)]
    meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify L(u, v) and report its invariants as JSON.
    Analyze {
        #[command(flatten)]
        segment: SegmentArgs,
        /// Recompute everything with the brute-force oracles and compare.
        #[arg(long)]
        check_oracle: bool,
        /// Include the explicit resolution when it can be built.
        #[arg(long)]
        resolution: bool,
    },
    /// Build the minimal free resolution of S/I.
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, requires = "d", conflicts_with = "gens")]
        u: Option<String>,
        #[arg(long, requires = "u")]
        v: Option<String>,
        /// Comma-separated generators, taken in the given order.
        #[arg(long, required_unless_present = "u")]
        gens: Option<String>,
        /// Certify the resolution and compare its numerator with the K-polynomial.
        #[arg(long)]
        verify: bool,
    },
    /// Compare closed forms with the oracles on every lexsegment in a range.
    Sweep {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_d: u32,
        #[arg(long, default_value_t = 3)]
        max_d: u32,
        #[arg(long, env = "LEXSEG_WORKERS")]
        workers: Option<usize>,
    },
    /// List the monomials of degree d, or the generators of L(u, v).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, requires = "v")]
        u: Option<String>,
        #[arg(long, requires = "u")]
        v: Option<String>,
    },
}

#[derive(Args)]
struct SegmentArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
    output: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) | Error::CapacityExceeded { .. } | Error::NotLinearQuotients { .. } => {
                EXIT_UNSUPPORTED
            }
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string(), output: None }
    }
}

fn segment(n: usize, d: u32, u: &str, v: &str) -> Result<Lexsegment, Error> {
    let ctx = AmbientContext::new(n, d)?;
    Lexsegment::new(ctx, parse_monomial(u, n)?, parse_monomial(v, n)?)
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Analyze { segment: s, check_oracle, resolution } => {
            let seg = segment(s.n, s.d, &s.u, &s.v)?;
            let report = analyze(&seg, AnalyzeOptions { check_oracle, resolution })?;
            if report.oracle_agreement == Some(false) {
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: "closed forms disagree with the oracle".into(),
                    output: Some(report.json),
                });
            }
            Ok(report.json)
        }
        Command::Resolve { n, d, u, v, gens, verify } => {
            let (res, ideal) = match (u, v, gens) {
                (Some(u), Some(v), _) => {
                    let seg = segment(n, d.expect("clap requires d with u"), &u, &v)?;
                    (build_resolution(&seg)?, seg.generators().to_vec())
                }
                (_, _, Some(list)) => {
                    let gens = parse_monomial_list(&list, n)?;
                    (resolution_from_order(gens.clone())?, gens)
                }
                _ => unreachable!("clap requires --u/--v or --gens"),
            };
            let mut out = json!({ "resolution": resolution_json(&res) });
            if verify {
                let report = verify_resolution(&res, &ideal, None);
                let k = k_polynomial_staircase(&ideal, n)?;
                let v = verification_json(&res, &report, &k);
                let passed = v["passed"] == json!(true);
                out["verification"] = v;
                if !passed {
                    return Err(Failure {
                        code: EXIT_MISMATCH,
                        message: "verification failed".into(),
                        output: Some(out),
                    });
                }
            }
            Ok(out)
        }
        Command::Sweep { min_n, max_n, min_d, max_d, workers } => {
            let mut config = SweepConfig::new(min_n, max_n, min_d, max_d);
            config.workers = workers;
            let summary = run_sweep(&config)?;
            let minimal = summary
                .minimal_failure()
                .map(|m| json!({ "flags": m.instance.flags(), "check": m.check, "detail": m.detail }));
            let out = json!({
                "instances": summary.instances,
                "per_context": summary.per_context,
                "clauses": summary.clauses,
                "checks": summary.applied,
                "mismatches": summary.mismatches.len(),
                "minimal_failure": minimal,
            });
            if let Some(m) = summary.minimal_failure() {
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!(
                        "{} mismatches; smallest: {} ({})",
                        summary.mismatches.len(),
                        m.instance.flags(),
                        m.check
                    ),
                    output: Some(out),
                });
            }
            Ok(out)
        }
        Command::Enumerate { n, d, u, v } => {
            let mons: Vec<String> = match (u, v) {
                (Some(u), Some(v)) => segment(n, d, &u, &v)?.generators().iter().map(|m| m.to_string()).collect(),
                _ => {
                    AmbientContext::new(n, d)?;
                    monomials_of_degree(n, d).map(|m| m.to_string()).collect()
                }
            };
            Ok(json!({ "n": n, "d": d, "count": mons.len(), "monomials": mons }))
        }
    }
}

fn emit(mut value: Value, meta: Option<Value>) {
    if let (Some(meta), Some(obj)) = (meta, value.as_object_mut()) {
        obj.insert("meta".into(), meta);
    }
    println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(cli.command);
    let meta = cli
        .meta
        .then(|| json!({ "version": env!("CARGO_PKG_VERSION"), "elapsed_ms": start.elapsed().as_millis() as u64 }));
    match result {
        Ok(value) => {
            emit(value, meta);
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                emit(out, meta);
            }
            eprintln!("lexseg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
