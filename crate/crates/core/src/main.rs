//! Command-line front end: evaluate expressions, check refinements, compute
//! rely quotients, and run the law suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rgtrace::config::ModelConfig;
use rgtrace::error::ModelError;
use rgtrace::harness::{build_pool, negative_suite, run_suite, GenConfig, Mode, Status};
use rgtrace::lang::{eval, parse, Binding};
use rgtrace::lattice::Command;
use rgtrace::quotient::{galois_check, quotient};

#[derive(Parser)]
#[command(name = "rgtrace", version, about = "Finite trace model of rely-guarantee concurrency")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a closed expression and print its trace list.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 2)]
        states: u8,
        #[arg(long, default_value_t = 3)]
        len: u8,
        /// Print only the number of traces.
        #[arg(long)]
        count_only: bool,
    },
    /// Decide `LHS ⊑ RHS`; on failure print a witness trace of RHS not in LHS.
    Refines {
        lhs: String,
        rhs: String,
        #[arg(long, default_value_t = 2)]
        states: u8,
        #[arg(long, default_value_t = 3)]
        len: u8,
    },
    /// Compute the rely quotient `C // I` and print its trace list.
    Quotient {
        c: String,
        i: String,
        #[arg(long, default_value_t = 2)]
        states: u8,
        #[arg(long, default_value_t = 3)]
        len: u8,
        /// Also check the residuation biconditional against sampled candidates.
        #[arg(long)]
        verify_galois: bool,
    },
    /// Run the law suite (or the stripped-proviso negative suite).
    Check {
        #[arg(long, default_value_t = 2)]
        states: u8,
        #[arg(long, default_value_t = 3)]
        len: u8,
        /// Term depth of the instantiation pool.
        #[arg(long, default_value_t = 2)]
        depth: u32,
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Glob over law names ('*' wildcard), e.g. "rely-*".
        #[arg(long)]
        laws: Option<String>,
        /// Run the stripped-proviso variants; success means they all fail.
        #[arg(long)]
        negative: bool,
        /// Pool composition: terms only, or terms plus random closed sets.
        #[arg(long, value_enum, default_value_t = ModeArg::Random)]
        mode: ModeArg,
        /// Also write the machine-readable report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ModeArg {
    #[value(name = "exhaustive-pool")]
    ExhaustivePool,
    Random,
}

fn exit_for(e: &ModelError) -> u8 {
    match e {
        ModelError::Capacity { .. } => 3,
        _ => 2,
    }
}

fn eval_closed(text: &str, cfg: ModelConfig) -> Result<Command, ModelError> {
    eval(&parse(text)?, &Binding::new(), cfg)
}

fn print_traces(c: &Command) {
    for t in c.traces() {
        println!("{t}");
    }
}

fn run(cli: Cli) -> Result<u8, ModelError> {
    match cli.cmd {
        Cmd::Eval { expr, states, len, count_only } => {
            let cfg = ModelConfig::new(states, len)?;
            cfg.check_capacity()?;
            let c = eval_closed(&expr, cfg)?;
            if count_only {
                println!("{}", c.trace_count());
            } else {
                print_traces(&c);
            }
            Ok(0)
        }
        Cmd::Refines { lhs, rhs, states, len } => {
            let cfg = ModelConfig::new(states, len)?;
            cfg.check_capacity()?;
            let a = eval_closed(&lhs, cfg)?;
            let b = eval_closed(&rhs, cfg)?;
            if a.refines_to(&b)? {
                println!("REFINES");
                Ok(0)
            } else {
                let witness = b
                    .traces()
                    .iter()
                    .find(|t| !a.traces().contains(*t))
                    .expect("non-refinement has a witness");
                println!("NOT-REFINES");
                println!("witness: {witness}");
                Ok(1)
            }
        }
        Cmd::Quotient { c, i, states, len, verify_galois } => {
            let cfg = ModelConfig::new(states, len)?;
            cfg.check_capacity()?;
            let cc = eval_closed(&c, cfg)?;
            let ci = eval_closed(&i, cfg)?;
            let q = quotient(&cc, &ci)?;
            print_traces(&q);
            if verify_galois {
                let gc = GenConfig::default_for(cfg, 0, 0);
                let pool = build_pool(&gc)?;
                let mut bad = 0usize;
                for item in &pool.commands {
                    if !galois_check(&cc, &item.value, &ci)? {
                        bad += 1;
                    }
                }
                if bad == 0 {
                    println!("galois: verified on {} candidates", pool.commands.len());
                } else {
                    println!("galois: FAILED on {bad} of {} candidates", pool.commands.len());
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Cmd::Check { states, len, depth, samples, seed, laws, negative, mode, json } => {
            let cfg = ModelConfig::new(states, len)?;
            cfg.check_capacity()?;
            let mut gc = GenConfig::default_for(cfg, samples, seed);
            gc.term_depth = depth;
            gc.mode = match mode {
                ModeArg::ExhaustivePool => Mode::ExhaustivePool,
                ModeArg::Random => Mode::Random,
            };
            let report = if negative {
                negative_suite(&gc)?
            } else {
                run_suite(&gc, laws.as_deref())?
            };
            print!("{}", report.render_text());
            if let Some(path) = &json {
                std::fs::write(path, report.to_json())
                    .map_err(|e| ModelError::Invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            let ok = if negative {
                !report.laws.is_empty()
                    && report.laws.iter().all(|l| l.status == Status::Fail)
            } else {
                !report.laws.is_empty() && report.all_pass()
            };
            if ok {
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
