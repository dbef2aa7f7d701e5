//! Exact dynamic programming over chain decompositions.
//!
//! A state is a progress tuple `(j_1, ..., j_k)` counting how many jobs of
//! each chain are already scheduled; its value is the minimum makespan of
//! a schedule covering exactly those prefixes, or infeasible. The
//! transition picks which chain contributes the job scheduled last:
//!
//! ```text
//! t = max(DP(..., j_i - 1, ...), release(x_i))
//! DP(j_1, ..., j_k) = min over admissible i of t + processing(x_i),
//!                     provided t + processing(x_i) <= deadline(x_i)
//! ```
//!
//! With pure chains every `i` with `j_i > 0` is admissible. For a general
//! DAG covered by chains, scheduling `x` last is admissible only if no
//! already-counted job is a closure-successor of `x`; that filter makes
//! the same recurrence exact for arbitrary precedence of width `k`.

use std::collections::HashMap;

use thiserror::Error;

use crate::decompose::{self, ChainDecomposition, ClosureMatrix};
use crate::model::{Instance, Schedule, Time};

/// Makespan value of a DP state. Infinity is an explicit variant rather
/// than a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpValue {
    Finite(Time),
    Infeasible,
}

impl DpValue {
    pub fn finite(self) -> Option<Time> {
        match self {
            DpValue::Finite(t) => Some(t),
            DpValue::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("not a chain partition: {0}")]
    NotAChainPartition(String),
    #[error("closure edge `{from}` -> `{to}` crosses two chains")]
    CrossChainEdge { from: String, to: String },
    #[error("final state is infeasible; no schedule to reconstruct")]
    InfeasibleNoSchedule,
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    value: DpValue,
    /// Chosen transition for reconstruction: (chain index, start time).
    choice: Option<(usize, Time)>,
}

/// Fully solved DP table for one instance and one chain decomposition.
#[derive(Debug)]
pub struct DpTable {
    /// chains[i] = job indices of chain i, in precedence order.
    chains: Vec<Vec<usize>>,
    memo: HashMap<Box<[u16]>, Entry>,
    final_key: Box<[u16]>,
}

/// Outcome of a solve: feasibility, exact minimum makespan, a witness
/// schedule, and the number of memoized states.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub feasible: bool,
    pub cmax: Option<Time>,
    pub schedule: Option<Schedule>,
    pub states_explored: usize,
}

struct DpRun<'a> {
    inst: &'a Instance,
    chains: Vec<Vec<usize>>,
    /// succ_min_pos[job][chain] = smallest 1-based position within `chain`
    /// holding a closure-successor of `job`, or u16::MAX if none. Present
    /// only when the cross-chain eligibility filter is active.
    succ_min_pos: Option<Vec<Vec<u16>>>,
    memo: HashMap<Box<[u16]>, Entry>,
}

impl<'a> DpRun<'a> {
    fn new(inst: &'a Instance, chains: Vec<Vec<usize>>, closure: Option<&ClosureMatrix>) -> Self {
        let succ_min_pos = closure.map(|closure| {
            let mut table = vec![vec![u16::MAX; chains.len()]; inst.n()];
            for (ci, chain) in chains.iter().enumerate() {
                for (pos, &member) in chain.iter().enumerate() {
                    for job in 0..inst.n() {
                        if closure.reaches(job, member) {
                            let slot = &mut table[job][ci];
                            *slot = (*slot).min((pos + 1) as u16);
                        }
                    }
                }
            }
            table
        });
        DpRun { inst, chains, succ_min_pos, memo: HashMap::new() }
    }

    fn eligible(&self, job: usize, key: &[u16]) -> bool {
        match &self.succ_min_pos {
            None => true,
            // No counted job may be a successor of `job`: every chain's
            // counted prefix must stop before `job`'s first successor.
            Some(table) => table[job].iter().zip(key).all(|(&min_pos, &counted)| min_pos > counted),
        }
    }

    fn solve(&mut self, key: &[u16]) -> DpValue {
        if let Some(entry) = self.memo.get(key) {
            return entry.value;
        }
        if key.iter().all(|&c| c == 0) {
            let entry = Entry { value: DpValue::Finite(0), choice: None };
            self.memo.insert(key.into(), entry);
            return entry.value;
        }
        let mut best = DpValue::Infeasible;
        let mut choice = None;
        for i in 0..self.chains.len() {
            if key[i] == 0 {
                continue;
            }
            let job_idx = self.chains[i][key[i] as usize - 1];
            if !self.eligible(job_idx, key) {
                continue;
            }
            let mut prev = key.to_vec();
            prev[i] -= 1;
            let Some(sub) = self.solve(&prev).finite() else { continue };
            let job = self.inst.job(job_idx);
            let start = sub.max(job.release);
            if start + job.processing > job.deadline {
                continue;
            }
            let value = start + job.processing;
            let better = match best {
                DpValue::Infeasible => true,
                DpValue::Finite(b) => value < b,
            };
            if better {
                best = DpValue::Finite(value);
                choice = Some((i, start));
            }
        }
        self.memo.insert(key.into(), Entry { value: best, choice });
        best
    }

    fn into_table(mut self) -> DpTable {
        let final_key: Box<[u16]> =
            self.chains.iter().map(|c| c.len() as u16).collect::<Vec<u16>>().into();
        self.solve(&final_key);
        DpTable { chains: self.chains, memo: self.memo, final_key }
    }
}

impl DpTable {
    pub fn final_value(&self) -> DpValue {
        self.memo[&self.final_key].value
    }

    /// Value of an arbitrary progress tuple, if that state was explored.
    /// With the eligibility filter active, states that no admissible
    /// transition sequence reaches are never materialized.
    pub fn value(&self, progress: &[usize]) -> Option<DpValue> {
        assert_eq!(progress.len(), self.chains.len(), "progress arity mismatch");
        let key: Box<[u16]> = progress.iter().map(|&c| c as u16).collect::<Vec<u16>>().into();
        self.memo.get(&key).map(|e| e.value)
    }

    pub fn states_explored(&self) -> usize {
        self.memo.len()
    }

    pub fn chain_sizes(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.len()).collect()
    }

    /// Walks the recorded argmin transitions from the full state back to
    /// zero, assigning each popped job its start time.
    pub fn reconstruct_schedule(&self, inst: &Instance) -> Result<Schedule, SolverError> {
        if self.final_value() == DpValue::Infeasible {
            return Err(SolverError::InfeasibleNoSchedule);
        }
        let mut schedule = Schedule::new();
        let mut key = self.final_key.to_vec();
        while key.iter().any(|&c| c > 0) {
            let entry = &self.memo[key.as_slice()];
            let (i, start) = entry.choice.expect("finite non-zero state has a recorded choice");
            let job_idx = self.chains[i][key[i] as usize - 1];
            schedule.set(inst.job(job_idx).id.clone(), start);
            key[i] -= 1;
        }
        Ok(schedule)
    }
}

fn outcome_from_table(table: &DpTable, inst: &Instance) -> SolveOutcome {
    match table.final_value() {
        DpValue::Finite(cmax) => SolveOutcome {
            feasible: true,
            cmax: Some(cmax),
            schedule: Some(table.reconstruct_schedule(inst).expect("finite value reconstructs")),
            states_explored: table.states_explored(),
        },
        DpValue::Infeasible => SolveOutcome {
            feasible: false,
            cmax: None,
            schedule: None,
            states_explored: table.states_explored(),
        },
    }
}

fn resolve_chains(inst: &Instance, chains: &ChainDecomposition) -> Result<Vec<Vec<usize>>, SolverError> {
    let mut covered = vec![false; inst.n()];
    let mut resolved = Vec::with_capacity(chains.len());
    for chain in chains.chains() {
        let mut seq = Vec::with_capacity(chain.len());
        for id in chain {
            let idx = inst
                .index_of(id)
                .ok_or_else(|| SolverError::NotAChainPartition(format!("unknown job id `{id}`")))?;
            if covered[idx] {
                return Err(SolverError::NotAChainPartition(format!(
                    "job `{id}` appears more than once"
                )));
            }
            covered[idx] = true;
            seq.push(idx);
        }
        resolved.push(seq);
    }
    if let Some(i) = covered.iter().position(|c| !c) {
        return Err(SolverError::NotAChainPartition(format!(
            "job `{}` is not covered",
            inst.job(i).id
        )));
    }
    Ok(resolved)
}

/// Solves an instance whose precedence relation is exactly the given
/// chain partition. Cross-chain closure edges are rejected.
pub fn solve_chain_dp(inst: &Instance, chains: &ChainDecomposition) -> Result<SolveOutcome, SolverError> {
    Ok(outcome_from_table(&build_chain_dp(inst, chains)?, inst))
}

/// Builds the full DP table for the pure-chains case.
pub fn build_chain_dp(inst: &Instance, chains: &ChainDecomposition) -> Result<DpTable, SolverError> {
    let resolved = resolve_chains(inst, chains)?;
    let closure = decompose::transitive_closure(inst);

    let mut chain_of = vec![usize::MAX; inst.n()];
    let mut pos_of = vec![usize::MAX; inst.n()];
    for (ci, chain) in resolved.iter().enumerate() {
        for (pos, &j) in chain.iter().enumerate() {
            chain_of[j] = ci;
            pos_of[j] = pos;
        }
    }
    for (u, v) in closure.pairs() {
        if chain_of[u] != chain_of[v] {
            return Err(SolverError::CrossChainEdge {
                from: inst.job(u).id.clone(),
                to: inst.job(v).id.clone(),
            });
        }
        if pos_of[u] > pos_of[v] {
            return Err(SolverError::NotAChainPartition(format!(
                "chain order contradicts precedence between `{}` and `{}`",
                inst.job(u).id,
                inst.job(v).id
            )));
        }
    }

    Ok(DpRun::new(inst, resolved, None).into_table())
}

/// Solves an arbitrary validated instance: decomposes the precedence
/// relation into a minimum number of chains and runs the DP with the
/// cross-chain eligibility filter.
pub fn solve_width_dp(inst: &Instance) -> SolveOutcome {
    outcome_from_table(&build_width_dp(inst), inst)
}

/// Builds the full width-DP table.
pub fn build_width_dp(inst: &Instance) -> DpTable {
    let decomp = decompose::min_chain_decomposition(inst);
    let resolved: Vec<Vec<usize>> = decomp
        .chains()
        .iter()
        .map(|c| c.iter().map(|id| inst.index_of(id).expect("decomposition ids resolve")).collect())
        .collect();
    let closure = decompose::transitive_closure(inst);
    DpRun::new(inst, resolved, Some(&closure)).into_table()
}
