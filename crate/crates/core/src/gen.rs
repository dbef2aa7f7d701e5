//! Seeded random instance generators for the property and certification
//! sweeps. Every generator is deterministic in its seed.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::model::{instance_stats, Instance, Job, Objective, RawInstance, Time};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Jobs spread over up to `width` chains plus random forward cross
    /// edges; several window lengths; occasional individually infeasible
    /// jobs.
    General,
    /// Declared queues whose jobs all share one (release, deadline,
    /// processing) triple per queue.
    ChainUniform,
    /// A single window length with prec-consistent chains.
    SingleWindow,
    /// Declared queues with one processing time per queue and releases and
    /// deadlines increasing together along each queue.
    AgreeableQueues,
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub profile: Profile,
    pub n: usize,
    /// Upper bound on the number of chains/queues (and hence the width).
    pub width: usize,
    pub seed: u64,
    /// Distinct window lengths to draw from (general profile).
    pub window_sizes: usize,
    /// Releases and deadlines stay below roughly this value.
    pub horizon: Time,
}

impl GenConfig {
    pub fn new(profile: Profile, n: usize, width: usize, seed: u64) -> Self {
        GenConfig { profile, n, width, seed, window_sizes: 2, horizon: 30 }
    }
}

pub fn generate_instance(cfg: &GenConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let raw = match cfg.profile {
        Profile::General => gen_general(cfg, &mut rng),
        Profile::ChainUniform => gen_chain_uniform(cfg, &mut rng),
        Profile::SingleWindow => gen_single_window(cfg, &mut rng),
        Profile::AgreeableQueues => gen_agreeable_queues(cfg, &mut rng),
    };
    let inst = raw.validate().expect("generated instances are valid");
    check_profile(cfg, &inst);
    inst
}

fn check_profile(cfg: &GenConfig, inst: &Instance) {
    let stats = instance_stats(inst);
    assert!(stats.width <= cfg.width.max(1), "generated width exceeds the requested bound");
    match cfg.profile {
        Profile::General => {
            assert!(stats.num_window_sizes <= cfg.window_sizes.max(1));
        }
        Profile::ChainUniform => assert!(stats.chain_uniform),
        Profile::SingleWindow => {
            assert!(inst.n() == 0 || stats.num_window_sizes == 1);
            assert!(stats.prec_consistent);
        }
        Profile::AgreeableQueues => {
            assert!(inst.declared_chains().is_some());
        }
    }
}

/// Splits `n` jobs over up to `width` chains; returns non-empty groups.
fn random_groups(n: usize, width: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let k = rng.gen_range(1..=width.max(1));
    let mut groups = vec![Vec::new(); k];
    for j in 0..n {
        groups[rng.gen_range(0..k)].push(j);
    }
    groups.retain(|g| !g.is_empty());
    groups
}

fn gen_general(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> RawInstance {
    let groups = random_groups(cfg.n, cfg.width, rng);
    let mut window_pool: Vec<Time> = Vec::new();
    while window_pool.len() < cfg.window_sizes.max(1) {
        let w = rng.gen_range(1..=(cfg.horizon / 2).max(2));
        if !window_pool.contains(&w) {
            window_pool.push(w);
        }
    }

    let mut jobs = Vec::with_capacity(cfg.n);
    for j in 0..cfg.n {
        // hit every pool entry at least once when n allows
        let window = if j < window_pool.len() { window_pool[j] } else { *window_pool.choose(rng).unwrap() };
        let release = rng.gen_range(0..=(cfg.horizon - window).max(0));
        let processing = if rng.gen_ratio(1, 10) {
            window + rng.gen_range(1..=2)
        } else {
            rng.gen_range(1..=window)
        };
        jobs.push(Job::new(format!("j{j}"), release, processing, release + window));
    }

    let mut edges = Vec::new();
    for group in &groups {
        for w in group.windows(2) {
            edges.push((format!("j{}", w[0]), format!("j{}", w[1])));
        }
    }
    // forward cross edges keep the relation acyclic and never raise width
    for u in 0..cfg.n {
        for v in (u + 1)..cfg.n {
            if rng.gen_ratio(1, 8) {
                edges.push((format!("j{u}"), format!("j{v}")));
            }
        }
    }

    RawInstance { jobs, prec_edges: edges, declared_chains: None, objective: Objective::MinMakespan }
}

fn chained_raw(jobs: Vec<Job>, chains: Vec<Vec<String>>) -> RawInstance {
    let mut edges = Vec::new();
    for chain in &chains {
        for w in chain.windows(2) {
            edges.push((w[0].clone(), w[1].clone()));
        }
    }
    RawInstance {
        jobs,
        prec_edges: edges,
        declared_chains: Some(chains),
        objective: Objective::MinMakespan,
    }
}

fn gen_chain_uniform(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> RawInstance {
    let groups = random_groups(cfg.n, cfg.width, rng);
    let mut jobs = Vec::with_capacity(cfg.n);
    let mut chains = Vec::with_capacity(groups.len());
    for group in &groups {
        let p = rng.gen_range(1..=3);
        let r = rng.gen_range(0..=cfg.horizon / 2);
        let need = group.len() as Time * p;
        // sometimes too tight on purpose
        let slack = rng.gen_range(0..=need + 4) as Time - 2;
        let d = (r + need + slack).max(r + 1);
        let mut chain = Vec::with_capacity(group.len());
        for &j in group {
            jobs.push(Job::new(format!("j{j}"), r, p, d));
            chain.push(format!("j{j}"));
        }
        chains.push(chain);
    }
    chained_raw(jobs, chains)
}

fn gen_single_window(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> RawInstance {
    let groups = random_groups(cfg.n, cfg.width, rng);
    let window = rng.gen_range(3..=8);
    let mut jobs = Vec::with_capacity(cfg.n);
    let mut chains = Vec::with_capacity(groups.len());
    for group in &groups {
        let mut chain = Vec::with_capacity(group.len());
        let mut release = rng.gen_range(0..=4);
        let mut prev_p: Option<Time> = None;
        for &j in group {
            let p = rng.gen_range(1..=window.min(3));
            if let Some(prev) = prev_p {
                // consecutive spacing of max(p_prev, p_next) keeps the
                // windows prec-consistent in both inequalities
                release += prev.max(p) + rng.gen_range(0..=2);
            }
            jobs.push(Job::new(format!("j{j}"), release, p, release + window));
            chain.push(format!("j{j}"));
            prev_p = Some(p);
        }
        chains.push(chain);
    }
    chained_raw(jobs, chains)
}

fn gen_agreeable_queues(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> RawInstance {
    let groups = random_groups(cfg.n, cfg.width, rng);
    let mut jobs = Vec::with_capacity(cfg.n);
    let mut chains = Vec::with_capacity(groups.len());
    for group in &groups {
        let p = rng.gen_range(1..=3);
        let mut release = rng.gen_range(0..=3);
        let mut deadline = release;
        let mut chain = Vec::with_capacity(group.len());
        for &j in group {
            deadline = (deadline + 1).max(release + p + rng.gen_range(0..=4));
            jobs.push(Job::new(format!("j{j}"), release, p, deadline));
            chain.push(format!("j{j}"));
            release += rng.gen_range(1..=3);
        }
        chains.push(chain);
    }
    chained_raw(jobs, chains)
}

/// Random shuffle-product input: `l` words over '0'/'1' plus a target.
/// Half of the seeds build the target as an actual interleaving of the
/// words, the rest draw it independently.
pub fn generate_shuffle_words(seed: u64, max_words: usize, max_v: usize) -> (Vec<String>, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = rng.gen_range(0..=max_words);
    let total = rng.gen_range(0..=max_v);
    let mut lengths = vec![0usize; l];
    for _ in 0..total {
        if l > 0 {
            lengths[rng.gen_range(0..l)] += 1;
        }
    }
    let words: Vec<String> = lengths
        .iter()
        .map(|&len| (0..len).map(|_| if rng.gen::<bool>() { '1' } else { '0' }).collect())
        .collect();

    let v = if rng.gen::<bool>() {
        // genuine interleaving
        let mut remaining: Vec<Vec<char>> =
            words.iter().map(|w| w.chars().rev().collect()).collect();
        let mut v = String::new();
        while remaining.iter().any(|w| !w.is_empty()) {
            let nonempty: Vec<usize> =
                (0..remaining.len()).filter(|&i| !remaining[i].is_empty()).collect();
            let pick = nonempty[rng.gen_range(0..nonempty.len())];
            v.push(remaining[pick].pop().unwrap());
        }
        v
    } else {
        let len = if rng.gen::<bool>() { total } else { rng.gen_range(0..=max_v) };
        (0..len).map(|_| if rng.gen::<bool>() { '1' } else { '0' }).collect()
    };
    (words, v)
}
