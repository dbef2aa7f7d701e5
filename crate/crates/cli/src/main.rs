//! Command-line front end: solve instance files, print statistics,
//! generate hard and random instances, decide shuffle membership, sweep
//! the reduction equivalence, and run timing suites.
//!
//! Exit codes are a stable contract across all subcommands:
//! 0 = feasible / yes / all passed, 1 = infeasible / no / some failed,
//! 2 = usage, parse, or precondition error. Machine-readable output goes
//! to stdout only; diagnostics go to stderr.

mod bench;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use sched_core::baselines::{
    edd_schedule, oracle_solve, solve_single_window, DEFAULT_ORACLE_CAP,
};
use sched_core::decompose::ChainDecomposition;
use sched_core::format::{
    parse_instance, serialize_instance, serialize_result, ResultFile, RunStats, ScheduleEntry,
};
use sched_core::gen::{generate_instance, generate_shuffle_words, GenConfig, Profile};
use sched_core::model::{instance_stats, validate_schedule, Instance, Objective, Schedule, Time};
use sched_core::reduction::{
    certify_reduction, construct_1, construct_2, Construction, Membership, NoReason,
    ReductionError, ShuffleInstance, CERTIFY_MAX_V, CERTIFY_MAX_WORDS,
};
use sched_core::solver::{solve_chain_dp, solve_width_dp};

#[derive(Parser)]
#[command(name = "sched", version, about = "Single-machine scheduling toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file ("-" reads stdin); exit 0 feasible, 1 infeasible
    Solve {
        file: String,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
    },
    /// Print the structural parameters of an instance
    Stats { file: String },
    /// Emit a scheduling instance encoding a shuffle-product question
    Reduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        construction: u8,
        #[arg(long)]
        p: Time,
        #[arg(long)]
        q: Time,
        /// Target word over 0/1 (0 decodes to p, 1 to q); empty if omitted
        #[arg(long, default_value = "")]
        v: String,
        /// Source word over 0/1; repeat the flag for several words
        #[arg(long = "u")]
        u: Vec<String>,
    },
    /// Decide shuffle membership; exit 0 yes, 1 no
    Shuffle {
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long = "u")]
        u: Vec<String>,
    },
    /// Cross-check the reduction on random words; exit 0 iff all seeds pass
    Certify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        construction: u8,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 8)]
        max_v: usize,
        #[arg(long, default_value_t = 3)]
        max_l: usize,
    },
    /// Generate a seeded random instance
    GenRandom {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        window_sizes: usize,
        #[arg(long, value_enum, default_value_t = ProfileArg::General)]
        profile: ProfileArg,
    },
    /// Run a timing suite and print a table
    Bench {
        #[arg(long, value_enum)]
        suite: bench::Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    ChainDp,
    WidthDp,
    Edd,
    SingleWindow,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    General,
    ChainUniform,
    SingleWindow,
    AgreeableQueues,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Profile {
        match p {
            ProfileArg::General => Profile::General,
            ProfileArg::ChainUniform => Profile::ChainUniform,
            ProfileArg::SingleWindow => Profile::SingleWindow,
            ProfileArg::AgreeableQueues => Profile::AgreeableQueues,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Solve { file, algo } => cmd_solve(&file, algo),
        Command::Stats { file } => cmd_stats(&file),
        Command::Reduce { construction, p, q, v, u } => cmd_reduce(construction, p, q, &v, &u),
        Command::Shuffle { v, u } => cmd_shuffle(&v, &u),
        Command::Certify { construction, seeds, max_v, max_l } => {
            cmd_certify(construction, seeds, max_v, max_l)
        }
        Command::GenRandom { n, width, seed, window_sizes, profile } => {
            cmd_gen_random(n, width, seed, window_sizes, profile)
        }
        Command::Bench { suite } => {
            bench::run_suite(suite);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_instance(path: &str) -> Result<Instance, String> {
    let text = read_input(path)?;
    let raw = parse_instance(&text).map_err(|e| e.to_string())?;
    raw.validate().map_err(|e| e.to_string())
}

fn oracle_cap() -> Result<usize, String> {
    match std::env::var("SCHED_ORACLE_CAP") {
        Ok(value) => value
            .parse::<usize>()
            .map_err(|_| format!("SCHED_ORACLE_CAP must be a nonnegative integer, got `{value}`")),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn declared_decomposition(inst: &Instance) -> Option<ChainDecomposition> {
    inst.declared_chains().map(|chains| {
        ChainDecomposition::from_chains(
            chains
                .iter()
                .map(|c| c.iter().map(|&i| inst.job(i).id.clone()).collect())
                .collect(),
        )
    })
}

struct SolveRun {
    algorithm: &'static str,
    feasible: bool,
    cmax: Option<Time>,
    schedule: Option<Schedule>,
    lmax: Option<Time>,
    states: u64,
}

fn cmd_solve(file: &str, algo: Algo) -> Result<ExitCode, String> {
    let inst = load_instance(file)?;

    let resolved = if algo == Algo::Auto {
        let stats = instance_stats(&inst);
        if stats.num_window_sizes == 1 && stats.prec_consistent {
            Algo::SingleWindow
        } else if inst.declared_chains().is_some() {
            Algo::ChainDp
        } else {
            Algo::WidthDp
        }
    } else {
        algo
    };

    let started = Instant::now();
    let mut run = match resolved {
        Algo::Auto => unreachable!("auto is resolved above"),
        Algo::ChainDp => {
            let chains = declared_decomposition(&inst)
                .unwrap_or_else(|| sched_core::decompose::min_chain_decomposition(&inst));
            let out = solve_chain_dp(&inst, &chains).map_err(|e| e.to_string())?;
            SolveRun {
                algorithm: "chain-dp",
                feasible: out.feasible,
                cmax: out.cmax,
                schedule: out.schedule,
                lmax: None,
                states: out.states_explored as u64,
            }
        }
        Algo::WidthDp => {
            let out = solve_width_dp(&inst);
            SolveRun {
                algorithm: "width-dp",
                feasible: out.feasible,
                cmax: out.cmax,
                schedule: out.schedule,
                lmax: None,
                states: out.states_explored as u64,
            }
        }
        Algo::Edd => {
            let report = edd_schedule(&inst);
            let feasible = report.lmax_edd.is_none_or(|l| l <= 0);
            SolveRun {
                algorithm: "edd",
                feasible,
                cmax: Some(report.cmax),
                schedule: Some(report.schedule),
                lmax: report.lmax_edd,
                states: inst.n() as u64,
            }
        }
        Algo::SingleWindow => {
            let out = solve_single_window(&inst).map_err(|e| e.to_string())?;
            SolveRun {
                algorithm: "single-window",
                feasible: out.feasible,
                cmax: out.cmax,
                schedule: out.schedule,
                lmax: None,
                states: out.states_explored as u64,
            }
        }
        Algo::Oracle => {
            let out = oracle_solve(&inst, oracle_cap()?).map_err(|e| e.to_string())?;
            SolveRun {
                algorithm: "oracle",
                feasible: out.feasible,
                cmax: out.cmax,
                schedule: out.schedule,
                lmax: out.lmax_opt,
                states: out.nodes_explored,
            }
        }
    };
    let wall_ms = started.elapsed().as_millis() as u64;

    if run.lmax.is_none() {
        if let Some(schedule) = &run.schedule {
            run.lmax = validate_schedule(&inst, schedule).map_err(|e| e.to_string())?.lmax;
        }
    }

    let report_cmax = run.feasible && inst.objective() == Objective::MinMakespan;
    let result = ResultFile {
        algorithm: run.algorithm.to_string(),
        cmax: if report_cmax { run.cmax.map(|c| c as u64) } else { None },
        feasible: run.feasible,
        lmax: run.lmax,
        schedule: if report_cmax {
            run.schedule.map(|s| {
                s.iter()
                    .map(|(id, start)| ScheduleEntry { id: id.to_string(), start: start as u64 })
                    .collect()
            })
        } else {
            None
        },
        stats: Some(RunStats { states_explored: run.states, wall_ms }),
    };
    print!("{}", serialize_result(&result));
    Ok(exit_yes_no(run.feasible))
}

fn exit_yes_no(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_stats(file: &str) -> Result<ExitCode, String> {
    let inst = load_instance(file)?;
    let stats = instance_stats(&inst);
    let mut text = serde_json::to_string_pretty(&stats).expect("stats serialize");
    text.push('\n');
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(construction: u8, p: Time, q: Time, v: &str, u: &[String]) -> Result<ExitCode, String> {
    let si = ShuffleInstance::new(u.to_vec(), v).map_err(|e| e.to_string())?;
    let inst = match construction {
        1 => construct_1(&si, p, q),
        _ => construct_2(&si, p, q),
    }
    .map_err(|e| e.to_string())?;
    print!("{}", serialize_instance(&inst));
    Ok(ExitCode::SUCCESS)
}

fn cmd_shuffle(v: &str, u: &[String]) -> Result<ExitCode, String> {
    let si = ShuffleInstance::new(u.to_vec(), v).map_err(|e| e.to_string())?;
    let membership = si.membership();
    let doc = match &membership {
        Membership::Member(witness) => serde_json::json!({
            "member": true,
            "witness": witness.maps(),
        }),
        Membership::NotMember(reason) => serde_json::json!({
            "member": false,
            "reason": match reason {
                NoReason::SymbolCountMismatch { symbol, in_target, in_words } => format!(
                    "symbol `{symbol}` occurs {in_target} times in v but {in_words} times in the words"
                ),
                NoReason::NoInterleaving => "no interleaving spells v".to_string(),
            },
        }),
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("doc serialize"));
    Ok(exit_yes_no(membership.is_member()))
}

fn cmd_certify(construction: u8, seeds: u64, max_v: usize, max_l: usize) -> Result<ExitCode, String> {
    if max_v > CERTIFY_MAX_V || max_l > CERTIFY_MAX_WORDS {
        return Err(format!(
            "certification accepts --max-v up to {CERTIFY_MAX_V} and --max-l up to {CERTIFY_MAX_WORDS}"
        ));
    }
    let which = if construction == 1 { Construction::One } else { Construction::Two };
    let mut passes = 0u64;
    let mut failures = 0u64;
    let mut counterexample = None;
    for seed in 0..seeds {
        let (u, v) = generate_shuffle_words(seed, max_l, max_v);
        let si = ShuffleInstance::new(u, v).expect("generated words are binary");
        match certify_reduction(&si, which, 1, 2) {
            Ok(_) => passes += 1,
            Err(ReductionError::EquivalenceViolated { u_words, v_word, detail, .. }) => {
                failures += 1;
                if counterexample.is_none() {
                    counterexample = Some(serde_json::json!({
                        "detail": detail,
                        "seed": seed,
                        "u": u_words,
                        "v": v_word,
                    }));
                }
            }
            Err(other) => return Err(other.to_string()),
        }
    }
    let doc = serde_json::json!({
        "construction": construction,
        "counterexample": counterexample,
        "failures": failures,
        "passes": passes,
        "seeds": seeds,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("doc serialize"));
    Ok(exit_yes_no(failures == 0))
}

fn cmd_gen_random(
    n: usize,
    width: usize,
    seed: u64,
    window_sizes: usize,
    profile: ProfileArg,
) -> Result<ExitCode, String> {
    if width == 0 {
        return Err("--width must be at least 1".to_string());
    }
    let mut cfg = GenConfig::new(profile.into(), n, width, seed);
    cfg.window_sizes = window_sizes.max(1);
    cfg.horizon = (4 * n as Time).max(30);
    let inst = generate_instance(&cfg);
    print!("{}", serialize_instance(&inst));
    Ok(ExitCode::SUCCESS)
}
