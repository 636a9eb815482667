use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hallwalk::search::{self, SearchConfig};
use hallwalk::{classify, delta, freesum, hall, idp, oracle, triangulate};
use hallwalk::{Budget, Error, SSequence};

/// Lecture hall polytopes: δ-vectors, classification, IDP checks and
/// unimodular triangulations, each verified against brute-force counts.
///
/// Sequences are comma-separated, e.g. `2,3,4`. The environment variable
/// HALLWALK_BUDGET caps enumeration work (default 10000000).
#[derive(Parser)]
#[command(name = "hallwalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// δ-vector from the ascent statistic.
    Delta { s: SSequence },
    /// Lattice point counts, Ehrhart polynomial and δ-vector by enumeration.
    Ehrhart {
        s: SSequence,
        #[arg(long)]
        tmax: Option<i64>,
    },
    /// Fano, reflexive and Gorenstein verdicts.
    Classify { s: SSequence },
    /// Brute-force integer decomposition check.
    Idp {
        s: SSequence,
        #[arg(long)]
        idp_max_k: Option<usize>,
    },
    /// Split a point of kP into k lattice points of P.
    Decompose {
        s: SSequence,
        k: i64,
        /// Comma-separated point of kP.
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Unimodular triangulation for sequences with integer ratios.
    Triangulate {
        s: SSequence,
        #[arg(long, default_value_t = 200)]
        verify_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compose two sequences into (s, 1, t) and check the prediction.
    Compose {
        #[arg(long)]
        left: SSequence,
        #[arg(long)]
        right: SSequence,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        idp_max_k: Option<usize>,
    },
    /// Sweep sequences into a JSONL evidence file.
    Search {
        #[arg(long)]
        dmax: usize,
        #[arg(long)]
        smax: i64,
        #[arg(long, default_value_t = 1)]
        dmin: usize,
        /// Number of distinct random sequences instead of the full sweep.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        resume: bool,
        #[arg(long)]
        idp_max_k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Gorenstein,
    Idp,
}

const EXIT_FINDING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Successful output, plus whether it reports a mathematical finding
/// (failed verification, IDP witness) that should exit with status 1.
struct Outcome {
    value: Value,
    finding: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, finding: false }
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run(command: Command, budget: &Budget) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Delta { s } => Outcome::ok(json!({ "delta": delta::delta_vector_within(&s, budget)? })),
        Command::Ehrhart { s, tmax } => {
            let data = oracle::ehrhart_data(&s, tmax, budget)?;
            let mut value = json!({ "s": s });
            value
                .as_object_mut()
                .expect("object")
                .extend(to_json(&data).as_object().expect("object").clone());
            Outcome::ok(value)
        }
        Command::Classify { s } => Outcome::ok(to_json(&classify::classify(&s, budget)?)),
        Command::Idp { s, idp_max_k } => {
            let r = idp::is_idp(&s, idp_max_k, budget)?;
            let mut value = json!({ "s": s, "verdict": r.verdict, "k_checked": r.k_checked });
            if let Some(w) = &r.witness {
                value["witness"] = to_json(w);
            }
            Outcome {
                value,
                finding: !r.verdict,
            }
        }
        Command::Decompose { s, k, x } => {
            let x = hall::parse_int_list(&x)?;
            if x.len() != s.dim() {
                return Err(Error::Dimension {
                    expected: s.dim(),
                    found: x.len(),
                });
            }
            let d = idp::decompose(&s, k, &x)?;
            Outcome::ok(json!({ "s": s, "k": k, "target": d.target, "parts": d.parts }))
        }
        Command::Triangulate {
            s,
            verify_samples,
            seed,
        } => {
            budget.check(triangulate::triangulation_cost(&s))?;
            let t = triangulate::chimney_triangulation(&s)?;
            let report = triangulate::verify_triangulation(&s, &t, verify_samples, seed);
            Outcome {
                finding: !report.passed(),
                value: json!({ "s": s, "simplices": t, "verification": report }),
            }
        }
        Command::Compose {
            left,
            right,
            mode,
            idp_max_k,
        } => match mode {
            Mode::Gorenstein => {
                let g = freesum::gorenstein_compose(&left, &right, budget)?;
                let verified = g.verified();
                let mut value = to_json(&g);
                value["verified"] = json!(verified);
                Outcome {
                    value,
                    finding: !verified,
                }
            }
            Mode::Idp => {
                let c = freesum::idp_compose(&left, &right, idp_max_k, budget)?;
                Outcome {
                    finding: !c.report.verdict,
                    value: json!({
                        "composite": c.composite,
                        "predicted": true,
                        "verified": c.report.verdict,
                        "report": c.report,
                    }),
                }
            }
        },
        Command::Search {
            dmax,
            smax,
            dmin,
            random,
            seed,
            out,
            resume,
            idp_max_k,
        } => {
            let config = SearchConfig {
                dmin,
                dmax,
                smax,
                random: random.map(|n| (n, seed)),
                k_max: idp_max_k,
                budget: *budget,
                resume,
            };
            let summary = search::run_search(&config, &out)?;
            Outcome {
                finding: summary.witnesses > 0,
                value: json!({ "out": out, "summary": summary }),
            }
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistency(_) | Error::InconsistentCounts(_) => EXIT_FINDING,
        Error::BudgetExceeded { .. } | Error::Overflow(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn report_error(kind: &str, message: &str) {
    eprintln!("{}", json!({ "error": kind, "message": message }));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            report_error("usage", e.to_string().trim());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = Budget::from_env().and_then(|budget| run(cli.command, &budget));
    match result {
        Ok(outcome) => {
            println!("{}", outcome.value);
            if outcome.finding {
                ExitCode::from(EXIT_FINDING)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            report_error(e.kind(), &e.to_string());
            ExitCode::from(exit_code(&e))
        }
    }
}
