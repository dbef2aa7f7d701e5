//! Dispatch heuristics, polynomial special cases, and the exhaustive
//! oracle used to certify everything else.
//!
//! The oracle enumerates topological orders rather than start times: for
//! makespan and maximum lateness, starting every job of a fixed order at
//! `max(previous completion, release)` is dominant, so the search over
//! orders is finite and exact. It deliberately shares no code with the
//! chain DP.

use thiserror::Error;

use crate::decompose;
use crate::model::{self, Instance, Job, RawInstance, Schedule, Time, MAX_HORIZON};
use crate::solver::SolveOutcome;

/// Default cap on the oracle's instance size.
pub const DEFAULT_ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("instance is not chain-uniform: {0}")]
    NotChainUniform(String),
    #[error("instance has {n} jobs, above the oracle cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("{count} jobs share release {release} in one queue; at most {allowed} can be spread")]
    TooManyTies { release: Time, count: usize, allowed: usize },
    #[error("rescaled times exceed the horizon cap")]
    HorizonTooLarge,
}

/// Earliest-start schedule for a fixed job order: each job starts at
/// `max(previous completion, release)`.
pub fn earliest_start_schedule(inst: &Instance, order: &[usize]) -> Schedule {
    let mut schedule = Schedule::new();
    let mut t: Time = 0;
    for &j in order {
        let job = inst.job(j);
        let start = t.max(job.release);
        schedule.set(job.id.clone(), start);
        t = start + job.processing;
    }
    schedule
}

/// Output of the EDD dispatch rule.
#[derive(Debug, Clone)]
pub struct EddReport {
    pub schedule: Schedule,
    /// Maximum lateness of the dispatched schedule; `None` for an empty
    /// instance. Deadline feasibility is equivalent to `lmax_edd <= 0`.
    pub lmax_edd: Option<Time>,
    /// `lmax_edd - lmax_opt`, filled in by [`EddReport::with_optimum`].
    pub bound_gap_certificate: Option<Time>,
    pub cmax: Time,
}

impl EddReport {
    /// Records the gap against an exact optimum.
    pub fn with_optimum(mut self, lmax_opt: Time) -> Self {
        self.bound_gap_certificate = self.lmax_edd.map(|l| l - lmax_opt);
        self
    }
}

/// Non-preemptive earliest-due-date dispatch. Among the jobs whose
/// predecessors are all completed and whose release has passed, the one
/// minimizing `(deadline, release, id)` starts next; when none is
/// released the clock advances to the earliest release among
/// precedence-available jobs. Deadlines are not enforced during
/// construction, so this always yields a complete schedule.
pub fn edd_schedule(inst: &Instance) -> EddReport {
    let n = inst.n();
    let mut pending_preds = vec![0usize; n];
    let mut succs = vec![Vec::new(); n];
    for &(u, v) in inst.prec_edges() {
        pending_preds[v] += 1;
        succs[u].push(v);
    }

    let mut available: Vec<usize> = (0..n).filter(|&j| pending_preds[j] == 0).collect();
    let mut schedule = Schedule::new();
    let mut t: Time = 0;
    let mut lmax: Option<Time> = None;
    let mut cmax: Time = 0;

    for _ in 0..n {
        let released = available.iter().copied().filter(|&j| inst.job(j).release <= t);
        let pick = match released.min_by_key(|&j| key_of(inst.job(j))) {
            Some(j) => j,
            None => {
                t = available.iter().map(|&j| inst.job(j).release).min().expect("acyclic instance");
                available
                    .iter()
                    .copied()
                    .filter(|&j| inst.job(j).release <= t)
                    .min_by_key(|&j| key_of(inst.job(j)))
                    .unwrap()
            }
        };
        available.retain(|&j| j != pick);
        let job = inst.job(pick);
        schedule.set(job.id.clone(), t);
        t += job.processing;
        cmax = cmax.max(t);
        let lateness = t - job.deadline;
        lmax = Some(lmax.map_or(lateness, |l: Time| l.max(lateness)));
        for &s in &succs[pick] {
            pending_preds[s] -= 1;
            if pending_preds[s] == 0 {
                available.push(s);
            }
        }
    }

    EddReport { schedule, lmax_edd: lmax, bound_gap_certificate: None, cmax }
}

fn key_of(job: &Job) -> (Time, Time, &str) {
    (job.deadline, job.release, job.id.as_str())
}

/// Exact greedy for instances with a single window length and
/// prec-consistent time windows: the EDD dispatch is optimal for maximum
/// lateness there, so the instance is feasible iff its EDD schedule meets
/// every deadline.
pub fn solve_single_window(inst: &Instance) -> Result<SolveOutcome, BaselineError> {
    if inst.n() == 0 {
        return Ok(SolveOutcome {
            feasible: true,
            cmax: Some(0),
            schedule: Some(Schedule::new()),
            states_explored: 0,
        });
    }
    let mut windows: Vec<Time> = inst.jobs().iter().map(|j| j.window()).collect();
    windows.sort_unstable();
    windows.dedup();
    if windows.len() != 1 {
        return Err(BaselineError::PreconditionViolated(format!(
            "expected a single window length, found {}",
            windows.len()
        )));
    }
    if !decompose::prec_consistent(inst) {
        return Err(BaselineError::PreconditionViolated(
            "time windows are not prec-consistent".to_string(),
        ));
    }
    let report = edd_schedule(inst);
    let feasible = report.lmax_edd.is_some_and(|l| l <= 0);
    Ok(SolveOutcome {
        feasible,
        cmax: feasible.then_some(report.cmax),
        schedule: feasible.then_some(report.schedule),
        states_explored: inst.n(),
    })
}

/// The chains against which uniformity is judged: declared chains when
/// present, otherwise the computed minimum chain decomposition.
fn uniformity_chains(inst: &Instance) -> Result<Vec<Vec<usize>>, BaselineError> {
    match inst.declared_chains() {
        Some(chains) => Ok(chains.to_vec()),
        None => Ok(decompose::min_chain_decomposition(inst)
            .chains()
            .iter()
            .map(|c| c.iter().map(|id| inst.index_of(id).unwrap()).collect())
            .collect()),
    }
}

fn require_chain_uniform(inst: &Instance) -> Result<Vec<Vec<usize>>, BaselineError> {
    let chains = uniformity_chains(inst)?;
    for chain in &chains {
        if !model::uniform_chain(inst, chain) {
            let id = &inst.job(chain[0]).id;
            return Err(BaselineError::NotChainUniform(format!(
                "chain starting at `{id}` mixes job types"
            )));
        }
    }
    Ok(chains)
}

/// Drops all precedence constraints from a chain-uniform instance. Jobs in
/// one chain are interchangeable, so any feasible schedule of the output
/// can be permuted back into chain order; see
/// [`reorder_within_chains`].
pub fn drop_precedence_if_chain_uniform(inst: &Instance) -> Result<Instance, BaselineError> {
    require_chain_uniform(inst)?;
    let raw = RawInstance {
        jobs: inst.jobs().to_vec(),
        prec_edges: Vec::new(),
        declared_chains: None,
        objective: inst.objective(),
    };
    Ok(raw.validate().expect("dropping edges keeps the instance valid"))
}

/// Companion to [`drop_precedence_if_chain_uniform`]: given a schedule of
/// the dropped instance, reassigns the start times within each chain in
/// chain order, producing a schedule that satisfies the original
/// precedence constraints.
pub fn reorder_within_chains(original: &Instance, sched: &Schedule) -> Result<Schedule, BaselineError> {
    let chains = require_chain_uniform(original)?;
    let mut out = Schedule::new();
    for chain in &chains {
        let mut starts = Vec::with_capacity(chain.len());
        for &j in chain {
            let id = &original.job(j).id;
            let start = sched.start(id).ok_or_else(|| {
                BaselineError::PreconditionViolated(format!("schedule is missing job `{id}`"))
            })?;
            starts.push(start);
        }
        starts.sort_unstable();
        for (&j, &start) in chain.iter().zip(&starts) {
            out.set(original.job(j).id.clone(), start);
        }
    }
    Ok(out)
}

/// Exact result of the exhaustive search.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub feasible: bool,
    /// Minimum makespan over deadline-feasible schedules.
    pub cmax: Option<Time>,
    pub schedule: Option<Schedule>,
    /// Minimum of `max_j (C_j - d_j)` over all schedules, deadline
    /// constraints ignored; `None` for an empty instance.
    pub lmax_opt: Option<Time>,
    /// Search nodes visited.
    pub nodes_explored: u64,
}

struct OracleSearch<'a> {
    inst: &'a Instance,
    pred_mask: Vec<u64>,
    all: u64,
    starts: Vec<Time>,
    best_cmax: Option<Time>,
    best_starts: Vec<Time>,
    best_lmax: Option<Time>,
    nodes: u64,
}

impl OracleSearch<'_> {
    fn run(&mut self, scheduled: u64, t: Time, lmax: Option<Time>, deadline_ok: bool, rem: Time) {
        self.nodes += 1;
        if scheduled == self.all {
            if deadline_ok && self.best_cmax.is_none_or(|b| t < b) {
                self.best_cmax = Some(t);
                self.best_starts = self.starts.clone();
            }
            if let Some(l) = lmax {
                if self.best_lmax.is_none_or(|b| l < b) {
                    self.best_lmax = Some(l);
                }
            }
            return;
        }
        for j in 0..self.inst.n() {
            let bit = 1u64 << j;
            if scheduled & bit != 0 || self.pred_mask[j] & scheduled != self.pred_mask[j] {
                continue;
            }
            let job = self.inst.job(j);
            let start = t.max(job.release);
            let completion = start + job.processing;
            let lateness = completion - job.deadline;
            let next_lmax = Some(lmax.map_or(lateness, |l| l.max(lateness)));
            let next_ok = deadline_ok && completion <= job.deadline;
            let next_rem = rem - job.processing;
            let cmax_open = next_ok && self.best_cmax.is_none_or(|b| completion + next_rem < b);
            let lmax_open = self.best_lmax.is_none_or(|b| next_lmax.unwrap() < b);
            if cmax_open || lmax_open {
                self.starts[j] = start;
                self.run(scheduled | bit, completion, next_lmax, next_ok, next_rem);
            }
        }
    }
}

/// Exhaustive branch-and-bound over topological orders. Exact minimum
/// makespan, feasibility, and minimum maximum lateness.
pub fn oracle_solve(inst: &Instance, cap: usize) -> Result<OracleOutcome, BaselineError> {
    let n = inst.n();
    if n > cap || n > 62 {
        return Err(BaselineError::InstanceTooLarge { n, cap: cap.min(62) });
    }
    let mut pred_mask = vec![0u64; n];
    for &(u, v) in inst.prec_edges() {
        pred_mask[v] |= 1 << u;
    }
    let rem: Time = inst.jobs().iter().map(|j| j.processing).sum();
    let mut search = OracleSearch {
        inst,
        pred_mask,
        all: if n == 0 { 0 } else { (1u64 << n) - 1 },
        starts: vec![0; n],
        best_cmax: None,
        best_starts: vec![0; n],
        best_lmax: None,
        nodes: 0,
    };
    search.run(0, 0, None, true, rem);
    let schedule = search.best_cmax.map(|_| {
        Schedule::from_pairs(
            search
                .best_starts
                .iter()
                .enumerate()
                .map(|(j, &s)| (inst.job(j).id.clone(), s)),
        )
    });
    Ok(OracleOutcome {
        feasible: search.best_cmax.is_some(),
        cmax: search.best_cmax,
        schedule,
        lmax_opt: search.best_lmax,
        nodes_explored: search.nodes,
    })
}

/// Spreads tied releases inside each queue apart over the integers:
/// multiplies every time by `R + 1`, then adds offsets `0..=R` to jobs
/// that share a release within one queue, in queue order. Deadlines shift
/// by the same offset, so feasibility is preserved in both directions
/// (map a schedule back by dividing starts by `R + 1` and flooring).
/// Queues are the declared chains when present, otherwise the computed
/// minimum chain decomposition.
pub fn rescale_simultaneous_releases(inst: &Instance, r: usize) -> Result<Instance, BaselineError> {
    let queues = uniformity_chains(inst)?;
    let scale = r as i128 + 1;
    let mut jobs = inst.jobs().to_vec();

    for queue in &queues {
        let mut run_start = 0;
        while run_start < queue.len() {
            let release = inst.job(queue[run_start]).release;
            let mut run_end = run_start + 1;
            while run_end < queue.len() && inst.job(queue[run_end]).release == release {
                run_end += 1;
            }
            let count = run_end - run_start;
            if count > r + 1 {
                return Err(BaselineError::TooManyTies { release, count, allowed: r + 1 });
            }
            for (offset, &j) in queue[run_start..run_end].iter().enumerate() {
                let job = &mut jobs[j];
                job.release = scaled(job.release, scale, offset as i128)?;
                job.deadline = scaled(job.deadline, scale, offset as i128)?;
                job.processing = scaled(job.processing, scale, 0)?;
            }
            run_start = run_end;
        }
    }

    let raw = RawInstance {
        jobs,
        prec_edges: inst.to_raw().prec_edges,
        declared_chains: inst.to_raw().declared_chains,
        objective: inst.objective(),
    };
    raw.validate().map_err(|_| BaselineError::HorizonTooLarge)
}

fn scaled(value: Time, scale: i128, offset: i128) -> Result<Time, BaselineError> {
    let scaled = value as i128 * scale + offset;
    if scaled > MAX_HORIZON as i128 {
        return Err(BaselineError::HorizonTooLarge);
    }
    Ok(scaled as Time)
}
