//! Domain types: jobs, instances, schedules, and instance statistics.
//!
//! An [`Instance`] is always the result of validating a [`RawInstance`];
//! every solver in this crate takes validated instances only. All types
//! are immutable after validation and safe to share across threads.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::decompose;

/// Integer time unit used throughout the crate.
pub type Time = i64;

/// Largest admissible time value. Inputs whose releases, deadlines,
/// processing times, or total processing exceed this are rejected so that
/// all internal arithmetic stays comfortably inside `i64`.
pub const MAX_HORIZON: Time = 1 << 61;

/// One unit of work: must run for `processing` consecutive time units
/// somewhere inside `[release, deadline)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Job {
    pub id: String,
    pub release: Time,
    pub processing: Time,
    pub deadline: Time,
}

impl Job {
    pub fn new(id: impl Into<String>, release: Time, processing: Time, deadline: Time) -> Self {
        Job { id: id.into(), release, processing, deadline }
    }

    /// Window size `deadline - release`.
    pub fn window(&self) -> Time {
        self.deadline - self.release
    }

    /// Slack `deadline - release - processing`. Negative slack means the
    /// job cannot be scheduled at all.
    pub fn slack(&self) -> Time {
        self.deadline - self.release - self.processing
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Objective {
    #[serde(rename = "feasible")]
    Feasibility,
    #[default]
    #[serde(rename = "cmax")]
    MinMakespan,
}

/// Instance data before validation, as read from a file or assembled by a
/// generator. Precedence edges are a generating set; all semantics
/// downstream use the transitive closure.
#[derive(Debug, Clone, Default)]
pub struct RawInstance {
    pub jobs: Vec<Job>,
    pub prec_edges: Vec<(String, String)>,
    pub declared_chains: Option<Vec<Vec<String>>>,
    pub objective: Objective,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("duplicate job id `{0}`")]
    DuplicateId(String),
    #[error("unknown job id `{id}` in {place}")]
    UnknownIdReference { id: String, place: String },
    #[error("precedence edges contain a cycle through `{0}`")]
    CyclicPrecedence(String),
    #[error("bad chain partition: {0}")]
    BadChainPartition(String),
    #[error("job `{0}` has a negative release or deadline")]
    NegativeTime(String),
    #[error("job `{0}` has processing time < 1")]
    ZeroProcessing(String),
    #[error("horizon too large: {0}")]
    HorizonTooLarge(String),
}

/// A validated instance. Job ids are unique, all references resolve, the
/// precedence relation is acyclic, and declared chains (if any) partition
/// the jobs without cross-chain edges.
#[derive(Debug, Clone)]
pub struct Instance {
    jobs: Vec<Job>,
    /// Deduplicated generating edges as (predecessor, successor) indices.
    edges: Vec<(usize, usize)>,
    declared_chains: Option<Vec<Vec<usize>>>,
    objective: Objective,
    index: HashMap<String, usize>,
}

impl RawInstance {
    /// Checks every instance invariant and freezes the result.
    pub fn validate(self) -> Result<Instance, ValidationError> {
        let mut index = HashMap::with_capacity(self.jobs.len());
        let mut total_processing: Time = 0;
        for (i, job) in self.jobs.iter().enumerate() {
            if index.insert(job.id.clone(), i).is_some() {
                return Err(ValidationError::DuplicateId(job.id.clone()));
            }
            if job.release < 0 || job.deadline < 0 {
                return Err(ValidationError::NegativeTime(job.id.clone()));
            }
            if job.processing < 1 {
                return Err(ValidationError::ZeroProcessing(job.id.clone()));
            }
            if job.release > MAX_HORIZON || job.deadline > MAX_HORIZON || job.processing > MAX_HORIZON {
                return Err(ValidationError::HorizonTooLarge(format!(
                    "job `{}` has a time value above 2^61",
                    job.id
                )));
            }
            total_processing += job.processing;
            if total_processing > MAX_HORIZON {
                return Err(ValidationError::HorizonTooLarge(
                    "total processing above 2^61".to_string(),
                ));
            }
        }

        let resolve = |id: &str, place: &str| -> Result<usize, ValidationError> {
            index.get(id).copied().ok_or_else(|| ValidationError::UnknownIdReference {
                id: id.to_string(),
                place: place.to_string(),
            })
        };

        let mut edges = Vec::with_capacity(self.prec_edges.len());
        let mut seen_edges = HashSet::new();
        for (from, to) in &self.prec_edges {
            let u = resolve(from, "prec edges")?;
            let v = resolve(to, "prec edges")?;
            if u == v {
                return Err(ValidationError::CyclicPrecedence(from.clone()));
            }
            if seen_edges.insert((u, v)) {
                edges.push((u, v));
            }
        }

        if let Some(id) = first_cycle_member(self.jobs.len(), &edges) {
            return Err(ValidationError::CyclicPrecedence(self.jobs[id].id.clone()));
        }

        let declared_chains = match &self.declared_chains {
            None => None,
            Some(chains) => {
                let closure = decompose::closure_from_edges(self.jobs.len(), &edges);
                let mut covered = vec![false; self.jobs.len()];
                let mut chain_of = vec![usize::MAX; self.jobs.len()];
                let mut resolved = Vec::with_capacity(chains.len());
                for (c, chain) in chains.iter().enumerate() {
                    let mut seq = Vec::with_capacity(chain.len());
                    for id in chain {
                        let i = resolve(id, "declared chains")?;
                        if covered[i] {
                            return Err(ValidationError::BadChainPartition(format!(
                                "job `{id}` appears in more than one chain"
                            )));
                        }
                        covered[i] = true;
                        chain_of[i] = c;
                        seq.push(i);
                    }
                    for w in seq.windows(2) {
                        if !closure.reaches(w[0], w[1]) {
                            return Err(ValidationError::BadChainPartition(format!(
                                "`{}` does not precede `{}` within its chain",
                                self.jobs[w[0]].id, self.jobs[w[1]].id
                            )));
                        }
                    }
                    resolved.push(seq);
                }
                if let Some(i) = covered.iter().position(|c| !c) {
                    return Err(ValidationError::BadChainPartition(format!(
                        "job `{}` is not covered by any chain",
                        self.jobs[i].id
                    )));
                }
                for &(u, v) in &edges {
                    if chain_of[u] != chain_of[v] {
                        return Err(ValidationError::BadChainPartition(format!(
                            "edge `{}` -> `{}` crosses two chains",
                            self.jobs[u].id, self.jobs[v].id
                        )));
                    }
                }
                Some(resolved)
            }
        };

        Ok(Instance {
            jobs: self.jobs,
            edges,
            declared_chains,
            objective: self.objective,
            index,
        })
    }
}

/// Kahn's algorithm; returns a node on a cycle if one exists.
fn first_cycle_member(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut indeg = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        indeg[v] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut removed = 0;
    while let Some(u) = queue.pop() {
        removed += 1;
        for &v in &adj[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push(v);
            }
        }
    }
    if removed == n {
        None
    } else {
        (0..n).find(|&i| indeg[i] > 0)
    }
}

impl Instance {
    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn job(&self, idx: usize) -> &Job {
        &self.jobs[idx]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Deduplicated generating edges, as index pairs.
    pub fn prec_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn declared_chains(&self) -> Option<&[Vec<usize>]> {
        self.declared_chains.as_deref()
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    /// Job indices sorted by id; used wherever a deterministic order is
    /// needed regardless of input order.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.jobs.len()).collect();
        order.sort_by(|&a, &b| self.jobs[a].id.cmp(&self.jobs[b].id));
        order
    }

    /// Converts back to raw data, e.g. to build a modified instance.
    pub fn to_raw(&self) -> RawInstance {
        RawInstance {
            jobs: self.jobs.clone(),
            prec_edges: self
                .edges
                .iter()
                .map(|&(u, v)| (self.jobs[u].id.clone(), self.jobs[v].id.clone()))
                .collect(),
            declared_chains: self.declared_chains.as_ref().map(|chains| {
                chains
                    .iter()
                    .map(|c| c.iter().map(|&i| self.jobs[i].id.clone()).collect())
                    .collect()
            }),
            objective: self.objective,
        }
    }
}

/// Assignment of a start time to every job of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Schedule {
    starts: BTreeMap<String, Time>,
}

impl Schedule {
    pub fn new() -> Self {
        Schedule::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, Time)>) -> Self {
        Schedule { starts: pairs.into_iter().collect() }
    }

    pub fn set(&mut self, id: impl Into<String>, start: Time) {
        self.starts.insert(id.into(), start);
    }

    pub fn start(&self, id: &str) -> Option<Time> {
        self.starts.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Entries in id order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Time)> {
        self.starts.iter().map(|(id, &t)| (id.as_str(), t))
    }
}

/// One broken feasibility condition, with the offending job id(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `start < release`
    StartsBeforeRelease { job: String },
    /// `start + processing > deadline`
    MissesDeadline { job: String },
    /// two execution intervals intersect
    Overlap { first: String, second: String },
    /// `before` precedes `after` but starts later
    OrderViolation { before: String, after: String },
}

impl Violation {
    fn sort_key(&self) -> (u8, &str, &str) {
        match self {
            Violation::StartsBeforeRelease { job } => (0, job, ""),
            Violation::MissesDeadline { job } => (1, job, ""),
            Violation::Overlap { first, second } => (2, first, second),
            Violation::OrderViolation { before, after } => (3, before, after),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StartsBeforeRelease { job } => write!(f, "job `{job}` starts before its release"),
            Violation::MissesDeadline { job } => write!(f, "job `{job}` completes after its deadline"),
            Violation::Overlap { first, second } => write!(f, "jobs `{first}` and `{second}` overlap"),
            Violation::OrderViolation { before, after } => {
                write!(f, "job `{before}` must start no later than `{after}`")
            }
        }
    }
}

/// Result of checking a schedule against an instance. The schedule is
/// feasible iff `violations` is empty; makespan and maximum lateness are
/// reported either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub violations: Vec<Violation>,
    pub cmax: Time,
    /// `max_j (C_j - d_j)`; `None` for the empty instance.
    pub lmax: Option<Time>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("schedule does not cover the instance jobs (missing: {missing:?}, extra: {extra:?})")]
    JobSetMismatch { missing: Vec<String>, extra: Vec<String> },
}

/// Checks all four feasibility conditions: releases, deadlines,
/// non-overlap, and precedence start order (under the transitive closure).
pub fn validate_schedule(inst: &Instance, sched: &Schedule) -> Result<FeasibilityReport, ScheduleError> {
    let missing: Vec<String> = inst
        .jobs()
        .iter()
        .filter(|j| sched.start(&j.id).is_none())
        .map(|j| j.id.clone())
        .collect();
    let extra: Vec<String> = sched
        .iter()
        .filter(|(id, _)| inst.index_of(id).is_none())
        .map(|(id, _)| id.to_string())
        .collect();
    if !missing.is_empty() || !extra.is_empty() {
        return Err(ScheduleError::JobSetMismatch { missing, extra });
    }

    let n = inst.n();
    let starts: Vec<Time> = inst.jobs().iter().map(|j| sched.start(&j.id).unwrap()).collect();
    let mut violations = Vec::new();
    let mut cmax: Time = 0;
    let mut lmax: Option<Time> = None;

    for (i, job) in inst.jobs().iter().enumerate() {
        let completion = starts[i] + job.processing;
        cmax = cmax.max(completion);
        let lateness = completion - job.deadline;
        lmax = Some(lmax.map_or(lateness, |l: Time| l.max(lateness)));
        if starts[i] < job.release {
            violations.push(Violation::StartsBeforeRelease { job: job.id.clone() });
        }
        if completion > job.deadline {
            violations.push(Violation::MissesDeadline { job: job.id.clone() });
        }
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let (si, pi) = (starts[i], inst.job(i).processing);
            let (sj, pj) = (starts[j], inst.job(j).processing);
            if si < sj + pj && sj < si + pi {
                // pairs in id order so the report is symmetric in job order
                let (mut first, mut second) = (inst.job(i).id.clone(), inst.job(j).id.clone());
                if first > second {
                    std::mem::swap(&mut first, &mut second);
                }
                violations.push(Violation::Overlap { first, second });
            }
        }
    }

    let closure = decompose::transitive_closure(inst);
    for u in 0..n {
        for v in 0..n {
            if closure.reaches(u, v) && starts[u] > starts[v] {
                violations.push(Violation::OrderViolation {
                    before: inst.job(u).id.clone(),
                    after: inst.job(v).id.clone(),
                });
            }
        }
    }

    violations.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(FeasibilityReport { violations, cmax, lmax })
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub numer: Time,
    pub denom: Time,
}

impl Ratio {
    pub fn new(numer: Time, denom: Time) -> Self {
        assert!(denom > 0, "denominator must be positive");
        let g = gcd(numer.unsigned_abs(), denom.unsigned_abs()).max(1) as Time;
        Ratio { numer: numer / g, denom: denom / g }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every structural parameter of an instance, computed exactly.
/// Fields are declared in alphabetical order so the serialized form has
/// sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceStats {
    pub chain_uniform: bool,
    pub max_flexibility: Option<Ratio>,
    pub max_processing: Option<Time>,
    pub max_slack: Option<Time>,
    pub min_chain_count: usize,
    pub n: usize,
    pub num_job_types: usize,
    pub num_processing_times: usize,
    pub num_window_sizes: usize,
    pub prec_consistent: bool,
    pub proper_level: usize,
    pub width: usize,
}

/// Computes all instance parameters. Chain uniformity is evaluated on the
/// declared chains when present, otherwise on the computed minimum chain
/// decomposition.
pub fn instance_stats(inst: &Instance) -> InstanceStats {
    let jobs = inst.jobs();
    let windows: HashSet<Time> = jobs.iter().map(|j| j.window()).collect();
    let processing: HashSet<Time> = jobs.iter().map(|j| j.processing).collect();
    let types: HashSet<(Time, Time, Time)> =
        jobs.iter().map(|j| (j.release, j.deadline, j.processing)).collect();

    let decomp = decompose::min_chain_decomposition(inst);
    let chain_uniform = match inst.declared_chains() {
        Some(chains) => chains.iter().all(|c| uniform_chain(inst, c)),
        None => decomp.chains().iter().all(|c| {
            let idx: Vec<usize> = c.iter().map(|id| inst.index_of(id).unwrap()).collect();
            uniform_chain(inst, &idx)
        }),
    };

    InstanceStats {
        chain_uniform,
        max_flexibility: jobs.iter().map(|j| Ratio::new(j.window(), j.processing)).max(),
        max_processing: jobs.iter().map(|j| j.processing).max(),
        max_slack: jobs.iter().map(|j| j.slack()).max(),
        min_chain_count: decomp.len(),
        n: jobs.len(),
        num_job_types: types.len(),
        num_processing_times: processing.len(),
        num_window_sizes: windows.len(),
        prec_consistent: decompose::prec_consistent(inst),
        proper_level: decompose::proper_level(inst),
        width: decompose::width(inst),
    }
}

pub(crate) fn uniform_chain(inst: &Instance, chain: &[usize]) -> bool {
    chain.windows(2).all(|w| {
        let (a, b) = (inst.job(w[0]), inst.job(w[1]));
        a.release == b.release && a.deadline == b.deadline && a.processing == b.processing
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(jobs: Vec<Job>, edges: &[(&str, &str)]) -> RawInstance {
        RawInstance {
            jobs,
            prec_edges: edges.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
            declared_chains: None,
            objective: Objective::MinMakespan,
        }
    }

    #[test]
    fn self_loop_is_cyclic() {
        let err = raw(vec![Job::new("a", 0, 1, 1)], &[("a", "a")]).validate().unwrap_err();
        assert_eq!(err, ValidationError::CyclicPrecedence("a".into()));
    }

    #[test]
    fn two_cycle_is_cyclic() {
        let jobs = vec![Job::new("a", 0, 1, 1), Job::new("b", 0, 1, 1)];
        let err = raw(jobs, &[("a", "b"), ("b", "a")]).validate().unwrap_err();
        assert!(matches!(err, ValidationError::CyclicPrecedence(_)));
    }

    #[test]
    fn single_job_is_valid() {
        let inst = raw(vec![Job::new("a", 0, 1, 1)], &[]).validate().unwrap();
        assert_eq!(inst.n(), 1);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let jobs = vec![Job::new("a", 0, 1, 1), Job::new("a", 0, 1, 2)];
        let err = raw(jobs, &[]).validate().unwrap_err();
        assert_eq!(err, ValidationError::DuplicateId("a".into()));
    }

    #[test]
    fn unknown_edge_endpoint_rejected() {
        let err = raw(vec![Job::new("a", 0, 1, 1)], &[("a", "b")]).validate().unwrap_err();
        assert!(matches!(err, ValidationError::UnknownIdReference { .. }));
    }

    #[test]
    fn zero_processing_rejected() {
        let err = raw(vec![Job::new("a", 0, 0, 1)], &[]).validate().unwrap_err();
        assert_eq!(err, ValidationError::ZeroProcessing("a".into()));
    }

    #[test]
    fn negative_time_rejected() {
        let err = raw(vec![Job::new("a", -1, 1, 1)], &[]).validate().unwrap_err();
        assert_eq!(err, ValidationError::NegativeTime("a".into()));
    }

    #[test]
    fn horizon_cap_enforced() {
        let err = raw(vec![Job::new("a", 0, 1, MAX_HORIZON + 1)], &[]).validate().unwrap_err();
        assert!(matches!(err, ValidationError::HorizonTooLarge(_)));
    }

    #[test]
    fn chains_must_partition() {
        let jobs = vec![Job::new("a", 0, 1, 2), Job::new("b", 0, 1, 2)];
        let mut r = raw(jobs, &[("a", "b")]);
        r.declared_chains = Some(vec![vec!["a".into()]]);
        let err = r.validate().unwrap_err();
        assert!(matches!(err, ValidationError::BadChainPartition(_)));
    }

    #[test]
    fn chains_must_follow_closure_order() {
        let jobs = vec![Job::new("a", 0, 1, 2), Job::new("b", 0, 1, 2)];
        let mut r = raw(jobs, &[("a", "b")]);
        r.declared_chains = Some(vec![vec!["b".into(), "a".into()]]);
        let err = r.validate().unwrap_err();
        assert!(matches!(err, ValidationError::BadChainPartition(_)));
    }

    #[test]
    fn cross_chain_edge_rejected() {
        let jobs = vec![Job::new("a", 0, 1, 2), Job::new("b", 0, 1, 2)];
        let mut r = raw(jobs, &[("a", "b")]);
        r.declared_chains = Some(vec![vec!["a".into()], vec!["b".into()]]);
        let err = r.validate().unwrap_err();
        assert!(matches!(err, ValidationError::BadChainPartition(_)));
    }

    #[test]
    fn empty_schedule_is_feasible_with_zero_makespan() {
        let inst = raw(vec![], &[]).validate().unwrap();
        let report = validate_schedule(&inst, &Schedule::new()).unwrap();
        assert!(report.feasible());
        assert_eq!(report.cmax, 0);
        assert_eq!(report.lmax, None);
    }

    #[test]
    fn guard_pair_schedule_is_feasible() {
        let jobs = vec![Job::new("a", 0, 1, 1), Job::new("b", 2, 1, 3)];
        let inst = raw(jobs, &[]).validate().unwrap();
        let sched = Schedule::from_pairs([("a".to_string(), 0), ("b".to_string(), 2)]);
        let report = validate_schedule(&inst, &sched).unwrap();
        assert!(report.feasible());
        assert_eq!(report.cmax, 3);
    }

    #[test]
    fn overlap_is_reported_as_pair() {
        let jobs = vec![Job::new("a", 0, 2, 4), Job::new("b", 0, 2, 4)];
        let inst = raw(jobs, &[]).validate().unwrap();
        let sched = Schedule::from_pairs([("a".to_string(), 0), ("b".to_string(), 1)]);
        let report = validate_schedule(&inst, &sched).unwrap();
        assert!(!report.feasible());
        assert_eq!(
            report.violations,
            vec![Violation::Overlap { first: "a".into(), second: "b".into() }]
        );
    }

    #[test]
    fn job_set_mismatch_is_an_error() {
        let inst = raw(vec![Job::new("a", 0, 1, 1)], &[]).validate().unwrap();
        let err = validate_schedule(&inst, &Schedule::new()).unwrap_err();
        assert!(matches!(err, ScheduleError::JobSetMismatch { .. }));
    }

    #[test]
    fn single_job_stats() {
        let inst = raw(vec![Job::new("a", 0, 1, 3)], &[]).validate().unwrap();
        let stats = instance_stats(&inst);
        assert_eq!(stats.max_slack, Some(2));
        assert_eq!(stats.proper_level, 0);
        assert_eq!(stats.max_flexibility, Some(Ratio::new(3, 1)));
    }

    #[test]
    fn antichain_stats() {
        let jobs = vec![Job::new("a", 0, 1, 9), Job::new("b", 0, 1, 9), Job::new("c", 0, 1, 9)];
        let inst = raw(jobs, &[]).validate().unwrap();
        let stats = instance_stats(&inst);
        assert_eq!(stats.width, 3);
        assert_eq!(stats.min_chain_count, 3);
        assert_eq!(stats.num_job_types, 1);
        assert_eq!(stats.num_window_sizes, 1);
        assert_eq!(stats.num_processing_times, 1);
    }

    #[test]
    fn report_is_invariant_under_job_permutation() {
        let jobs = vec![
            Job::new("a", 0, 2, 4),
            Job::new("b", 1, 2, 6),
            Job::new("c", 0, 1, 2),
        ];
        let sched = Schedule::from_pairs([
            ("a".to_string(), 0),
            ("b".to_string(), 2),
            ("c".to_string(), 1),
        ]);
        let forward = raw(jobs.clone(), &[("a", "b")]).validate().unwrap();
        let mut rev_jobs = jobs;
        rev_jobs.reverse();
        let backward = raw(rev_jobs, &[("a", "b")]).validate().unwrap();
        assert_eq!(
            validate_schedule(&forward, &sched).unwrap(),
            validate_schedule(&backward, &sched).unwrap()
        );
    }

    #[test]
    fn ratio_reduces_and_orders() {
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert!(Ratio::new(3, 2) > Ratio::new(10, 7));
        assert_eq!(Ratio::new(-2, 4), Ratio::new(-1, 2));
    }
}
