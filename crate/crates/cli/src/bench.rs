//! Timing suites. Each measurement discards one warmup run and reports
//! the median of five timed runs.

use std::time::Instant;

use clap::ValueEnum;

use sched_core::baselines::{edd_schedule, oracle_solve};
use sched_core::gen::{generate_instance, generate_shuffle_words, GenConfig, Profile};
use sched_core::model::{Instance, Job, Objective, RawInstance, Time};
use sched_core::reduction::{construct_1, construct_2, ShuffleInstance};
use sched_core::solver::build_width_dp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Width DP on k chains of m jobs each; shows the state count growing
    /// with (m+1)^k
    DpScaling,
    /// EDD dispatch against the exact oracle on agreeable queues
    EddVsOpt,
    /// Width DP on instances emitted by both constructions
    Reduction,
}

pub fn run_suite(suite: Suite) {
    print_header();
    match suite {
        Suite::DpScaling => dp_scaling(),
        Suite::EddVsOpt => edd_vs_opt(),
        Suite::Reduction => reduction(),
    }
}

fn print_header() {
    println!("{:<18} {:>4} {:>4} {:<13} {:>9} {:>9}", "label", "n", "k/w", "algorithm", "wall_ms", "states");
}

fn print_row(label: &str, n: usize, k: usize, algorithm: &str, wall_ms: f64, states: u64) {
    println!("{label:<18} {n:>4} {k:>4} {algorithm:<13} {wall_ms:>9.2} {states:>9}");
}

/// Median wall time of five runs after one discarded warmup; the work
/// counter of the last run is returned alongside.
fn measure<F: FnMut() -> u64>(mut work: F) -> (f64, u64) {
    work();
    let mut times = Vec::with_capacity(5);
    let mut states = 0;
    for _ in 0..5 {
        let started = Instant::now();
        states = work();
        times.push(started.elapsed().as_secs_f64() * 1000.0);
    }
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (times[2], states)
}

fn loose_chains(k: usize, per_chain: usize) -> Instance {
    let horizon = (k * per_chain * 4) as Time;
    let mut jobs = Vec::new();
    let mut edges = Vec::new();
    let mut chains = Vec::new();
    for c in 0..k {
        let ids: Vec<String> = (0..per_chain).map(|j| format!("c{c}_{j}")).collect();
        for (j, id) in ids.iter().enumerate() {
            jobs.push(Job::new(id.clone(), 0, 1 + ((c + j) % 3) as Time, horizon));
        }
        for w in ids.windows(2) {
            edges.push((w[0].clone(), w[1].clone()));
        }
        chains.push(ids);
    }
    RawInstance { jobs, prec_edges: edges, declared_chains: Some(chains), objective: Objective::MinMakespan }
        .validate()
        .unwrap()
}

fn dp_scaling() {
    for (k, per_chain) in [(2, 10), (3, 10), (3, 20), (4, 15)] {
        let inst = loose_chains(k, per_chain);
        let (wall_ms, states) = measure(|| {
            let table = build_width_dp(&inst);
            let bound: usize = table.chain_sizes().iter().map(|s| s + 1).product();
            assert!(table.states_explored() <= bound, "state count exceeded ({} > {bound})", table.states_explored());
            table.states_explored() as u64
        });
        print_row(&format!("chains-{k}x{per_chain}"), inst.n(), k, "width-dp", wall_ms, states);
    }
}

fn edd_vs_opt() {
    for seed in 0..5 {
        let mut cfg = GenConfig::new(Profile::AgreeableQueues, 9, 3, seed);
        cfg.horizon = 30;
        let inst = generate_instance(&cfg);
        let k = inst.declared_chains().map_or(0, |c| c.len());

        let (edd_ms, _) = measure(|| {
            edd_schedule(&inst);
            inst.n() as u64
        });
        print_row(&format!("agreeable-s{seed}"), inst.n(), k, "edd", edd_ms, inst.n() as u64);

        let (oracle_ms, nodes) = measure(|| oracle_solve(&inst, 10).unwrap().nodes_explored);
        print_row(&format!("agreeable-s{seed}"), inst.n(), k, "oracle", oracle_ms, nodes);
    }
}

fn reduction() {
    for (max_l, max_v, seed) in [(2, 6, 7), (3, 8, 11)] {
        let (u, v) = generate_shuffle_words(seed, max_l, max_v);
        let si = ShuffleInstance::new(u, v).unwrap();
        for (name, inst) in [
            ("c1-width-dp", construct_1(&si, 1, 2).unwrap()),
            ("c2-width-dp", construct_2(&si, 1, 2).unwrap()),
        ] {
            let k = inst.declared_chains().map_or(0, |c| c.len());
            let (wall_ms, states) = measure(|| build_width_dp(&inst).states_explored() as u64);
            print_row(&format!("words-l{max_l}v{max_v}"), inst.n(), k, name, wall_ms, states);
        }
    }
}
