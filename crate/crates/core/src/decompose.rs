//! Structural analysis of the precedence DAG: transitive closure, width,
//! and minimum chain decomposition.
//!
//! Width equals the minimum number of chains covering the jobs (Dilworth),
//! and is computed as `n` minus a maximum matching in the bipartite graph
//! whose edges are the closure pairs. Chains are then read off the
//! matching. All tie-breaking is by lexicographic job id so results are
//! reproducible regardless of input order.

use crate::model::Instance;

/// Transitive closure of the precedence relation over job indices.
#[derive(Debug, Clone)]
pub struct ClosureMatrix {
    n: usize,
    reach: Vec<bool>,
}

impl ClosureMatrix {
    /// True iff `from` precedes `to` under the closure. Irreflexive.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.reach[from * self.n + to]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All ordered pairs of the closure.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.reaches(u, v))
    }
}

/// Builds the closure from a generating edge set by DFS from every node.
pub(crate) fn closure_from_edges(n: usize, edges: &[(usize, usize)]) -> ClosureMatrix {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
    }
    let mut reach = vec![false; n * n];
    let mut stack = Vec::new();
    for start in 0..n {
        stack.clear();
        stack.extend(adj[start].iter().copied());
        while let Some(v) = stack.pop() {
            if !reach[start * n + v] {
                reach[start * n + v] = true;
                stack.extend(adj[v].iter().copied());
            }
        }
    }
    ClosureMatrix { n, reach }
}

/// Closure of a validated instance's precedence edges.
pub fn transitive_closure(inst: &Instance) -> ClosureMatrix {
    closure_from_edges(inst.n(), inst.prec_edges())
}

/// A partition of the jobs into chains; each sequence is totally ordered
/// by the precedence closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<String>>,
}

impl ChainDecomposition {
    pub fn from_chains(chains: Vec<Vec<String>>) -> Self {
        ChainDecomposition { chains }
    }

    pub fn chains(&self) -> &[Vec<String>] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

/// Maximum matching on the bipartite successor graph, Kuhn's augmenting
/// path search. Left and right vertices are both the job set; an edge
/// (u, v) exists iff u precedes v in the closure. Vertices are tried in
/// lexicographic id order.
fn max_matching(inst: &Instance, closure: &ClosureMatrix) -> Vec<Option<usize>> {
    let n = inst.n();
    let order = inst.lex_order();
    // succ_of[u] = matched immediate successor of u in the path cover
    let mut succ_of: Vec<Option<usize>> = vec![None; n];
    let mut pred_of: Vec<Option<usize>> = vec![None; n];

    fn augment(
        u: usize,
        order: &[usize],
        closure: &ClosureMatrix,
        seen: &mut [bool],
        succ_of: &mut [Option<usize>],
        pred_of: &mut [Option<usize>],
    ) -> bool {
        for &v in order {
            if closure.reaches(u, v) && !seen[v] {
                seen[v] = true;
                let free = match pred_of[v] {
                    None => true,
                    Some(w) => augment(w, order, closure, seen, succ_of, pred_of),
                };
                if free {
                    succ_of[u] = Some(v);
                    pred_of[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }

    for &u in &order {
        let mut seen = vec![false; n];
        augment(u, &order, closure, &mut seen, &mut succ_of, &mut pred_of);
    }
    succ_of
}

/// Width of the precedence relation: the size of the largest set of
/// pairwise incomparable jobs.
pub fn width(inst: &Instance) -> usize {
    let closure = transitive_closure(inst);
    let matching = max_matching(inst, &closure);
    let matched = matching.iter().filter(|m| m.is_some()).count();
    inst.n() - matched
}

/// Decomposes the jobs into the minimum number of chains. If the declared
/// chains are already minimal they are returned unchanged; otherwise the
/// decomposition is extracted from a maximum matching, walking matched
/// successors from each uncovered head in lexicographic id order.
pub fn min_chain_decomposition(inst: &Instance) -> ChainDecomposition {
    let closure = transitive_closure(inst);
    let succ_of = max_matching(inst, &closure);
    let matched = succ_of.iter().filter(|m| m.is_some()).count();
    let w = inst.n() - matched;

    if let Some(declared) = inst.declared_chains() {
        if declared.len() == w {
            return ChainDecomposition::from_chains(
                declared
                    .iter()
                    .map(|c| c.iter().map(|&i| inst.job(i).id.clone()).collect())
                    .collect(),
            );
        }
    }

    let mut is_tail = vec![false; inst.n()];
    for m in succ_of.iter().flatten() {
        is_tail[*m] = true;
    }
    let mut chains = Vec::with_capacity(w);
    for &head in &inst.lex_order() {
        if is_tail[head] {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = Some(head);
        while let Some(u) = cur {
            chain.push(inst.job(u).id.clone());
            cur = succ_of[u];
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.len(), w);
    ChainDecomposition::from_chains(chains)
}

/// True iff every closure pair (j, j') satisfies both
/// `r_{j'} >= r_j + p_j` and `d_j <= d_{j'} - p_{j'}`.
pub fn prec_consistent(inst: &Instance) -> bool {
    let closure = transitive_closure(inst);
    let consistent = closure.pairs().all(|(u, v)| {
        let (a, b) = (inst.job(u), inst.job(v));
        b.release >= a.release + a.processing && a.deadline <= b.deadline - b.processing
    });
    consistent
}

/// Maximum, over jobs j, of the number of jobs whose time window strictly
/// contains the window of j on both ends.
pub fn proper_level(inst: &Instance) -> usize {
    let jobs = inst.jobs();
    (0..jobs.len())
        .map(|j| {
            (0..jobs.len())
                .filter(|&k| jobs[k].release < jobs[j].release && jobs[j].deadline < jobs[k].deadline)
                .count()
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Job, Objective, RawInstance, Time};

    fn inst(jobs: Vec<Job>, edges: &[(&str, &str)]) -> Instance {
        RawInstance {
            jobs,
            prec_edges: edges.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
            declared_chains: None,
            objective: Objective::MinMakespan,
        }
        .validate()
        .unwrap()
    }

    fn unit_jobs(ids: &[&str]) -> Vec<Job> {
        ids.iter().map(|id| Job::new(*id, 0, 1, 100)).collect()
    }

    /// Independent check used by the Dilworth tests: largest antichain by
    /// exhaustive subset enumeration over reachability computed with a
    /// fresh DFS (not via `ClosureMatrix`).
    fn brute_force_max_antichain(inst: &Instance) -> usize {
        let n = inst.n();
        assert!(n <= 16);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in inst.prec_edges() {
            adj[u].push(v);
        }
        let mut reach = vec![vec![false; n]; n];
        for s in 0..n {
            let mut stack = adj[s].clone();
            while let Some(v) = stack.pop() {
                if !reach[s][v] {
                    reach[s][v] = true;
                    stack.extend(adj[v].iter().copied());
                }
            }
        }
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let ok = members.iter().all(|&a| {
                members.iter().all(|&b| a == b || (!reach[a][b] && !reach[b][a]))
            });
            if ok {
                best = best.max(members.len());
            }
        }
        best
    }

    #[test]
    fn closure_is_transitive() {
        let i = inst(unit_jobs(&["a", "b", "c"]), &[("a", "b"), ("b", "c")]);
        let c = transitive_closure(&i);
        assert!(c.reaches(0, 2));
        assert!(!c.reaches(2, 0));
        assert!(!c.reaches(0, 0));
    }

    #[test]
    fn empty_edges_empty_closure() {
        let i = inst(unit_jobs(&["a", "b"]), &[]);
        assert_eq!(transitive_closure(&i).pairs().count(), 0);
    }

    #[test]
    fn chain_of_four_has_six_pairs() {
        let i = inst(unit_jobs(&["a", "b", "c", "d"]), &[("a", "b"), ("b", "c"), ("c", "d")]);
        assert_eq!(transitive_closure(&i).pairs().count(), 6);
    }

    #[test]
    fn closure_is_idempotent() {
        let i = inst(unit_jobs(&["a", "b", "c", "d"]), &[("a", "b"), ("b", "c"), ("a", "d")]);
        let c1 = transitive_closure(&i);
        let pairs: Vec<(usize, usize)> = c1.pairs().collect();
        let c2 = closure_from_edges(i.n(), &pairs);
        for u in 0..i.n() {
            for v in 0..i.n() {
                assert_eq!(c1.reaches(u, v), c2.reaches(u, v));
            }
        }
    }

    #[test]
    fn width_of_antichain_is_n() {
        let i = inst(unit_jobs(&["a", "b", "c", "d", "e"]), &[]);
        assert_eq!(width(&i), 5);
    }

    #[test]
    fn width_of_chain_is_one() {
        let ids = ["a", "b", "c", "d", "e", "f", "g"];
        let edges: Vec<(&str, &str)> = ids.windows(2).map(|w| (w[0], w[1])).collect();
        let i = inst(unit_jobs(&ids), &edges);
        assert_eq!(width(&i), 1);
    }

    #[test]
    fn diamond_width_matches_brute_force() {
        let i = inst(
            unit_jobs(&["a", "b", "c", "d"]),
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        );
        assert_eq!(brute_force_max_antichain(&i), 2);
        assert_eq!(width(&i), 2);
    }

    #[test]
    fn diamond_decomposition_has_width_chains() {
        let i = inst(
            unit_jobs(&["a", "b", "c", "d"]),
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        );
        let d = min_chain_decomposition(&i);
        assert_eq!(d.len(), 2);
        let mut all: Vec<String> = d.chains().iter().flatten().cloned().collect();
        all.sort();
        assert_eq!(all, vec!["a", "b", "c", "d"]);
        let c = transitive_closure(&i);
        for chain in d.chains() {
            for w in chain.windows(2) {
                let u = i.index_of(&w[0]).unwrap();
                let v = i.index_of(&w[1]).unwrap();
                assert!(c.reaches(u, v));
            }
        }
    }

    #[test]
    fn declared_minimal_chains_are_returned_unchanged() {
        let jobs = unit_jobs(&["a", "b", "c", "d"]);
        let i = RawInstance {
            jobs,
            prec_edges: vec![("b".into(), "a".into()), ("d".into(), "c".into())],
            declared_chains: Some(vec![
                vec!["b".into(), "a".into()],
                vec!["d".into(), "c".into()],
            ]),
            objective: Objective::MinMakespan,
        }
        .validate()
        .unwrap();
        let d = min_chain_decomposition(&i);
        assert_eq!(
            d.chains(),
            &[vec!["b".to_string(), "a".to_string()], vec!["d".to_string(), "c".to_string()]]
        );
    }

    #[test]
    fn empty_instance_decomposes_to_nothing() {
        let i = inst(vec![], &[]);
        assert!(min_chain_decomposition(&i).is_empty());
        assert_eq!(width(&i), 0);
    }

    #[test]
    fn no_edges_is_prec_consistent() {
        let i = inst(unit_jobs(&["a", "b"]), &[]);
        assert!(prec_consistent(&i));
    }

    #[test]
    fn inconsistent_windows_detected() {
        // successor released before its predecessor can finish
        let jobs = vec![Job::new("a", 0, 3, 10), Job::new("b", 1, 1, 10)];
        let i = inst(jobs, &[("a", "b")]);
        assert!(!prec_consistent(&i));
    }

    #[test]
    fn proper_level_zero_for_equal_windows() {
        let jobs = vec![Job::new("a", 0, 1, 5), Job::new("b", 2, 1, 7), Job::new("c", 4, 1, 9)];
        let i = inst(jobs, &[]);
        assert_eq!(proper_level(&i), 0);
    }

    #[test]
    fn proper_level_counts_strict_containment() {
        let jobs = vec![Job::new("a", 0, 1, 10), Job::new("b", 2, 1, 5)];
        let i = inst(jobs, &[]);
        assert_eq!(proper_level(&i), 1);
    }

    #[test]
    fn proper_level_of_nested_windows() {
        let jobs = vec![Job::new("a", 0, 1, 10), Job::new("b", 1, 1, 9), Job::new("c", 2, 1, 8)];
        let i = inst(jobs, &[]);
        assert_eq!(proper_level(&i), 2);
    }

    #[test]
    fn width_equals_chain_count_on_random_dags() {
        // deterministic pseudo-random sweep, cross-checked by brute force
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let n = (next() % 9) as usize + 1;
            let ids: Vec<String> = (0..n).map(|i| format!("j{i}")).collect();
            let jobs: Vec<Job> = ids.iter().map(|id| Job::new(id.clone(), 0, 1, 50)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 3 == 0 {
                        edges.push((ids[u].clone(), ids[v].clone()));
                    }
                }
            }
            let i = RawInstance { jobs, prec_edges: edges, declared_chains: None, objective: Objective::MinMakespan }
                .validate()
                .unwrap();
            let w = width(&i);
            assert_eq!(w, min_chain_decomposition(&i).len());
            assert_eq!(w, brute_force_max_antichain(&i));
        }
    }

    #[test]
    fn adding_an_edge_never_increases_width() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let n = (next() % 7) as usize + 2;
            let ids: Vec<String> = (0..n).map(|i| format!("j{i}")).collect();
            let jobs: Vec<Job> = ids.iter().map(|id| Job::new(id.clone(), 0, 1, 50)).collect();
            let mut edges: Vec<(String, String)> = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 4 == 0 {
                        edges.push((ids[u].clone(), ids[v].clone()));
                    }
                }
            }
            let base = RawInstance {
                jobs: jobs.clone(),
                prec_edges: edges.clone(),
                declared_chains: None,
                objective: Objective::MinMakespan,
            }
            .validate()
            .unwrap();
            let before = width(&base);

            // one more forward edge
            let u = (next() % (n as u64 - 1)) as usize;
            let v = u + 1 + (next() % (n as u64 - u as u64 - 1)) as usize;
            edges.push((ids[u].clone(), ids[v].clone()));
            let extended = RawInstance { jobs, prec_edges: edges, declared_chains: None, objective: Objective::MinMakespan }
                .validate()
                .unwrap();
            assert!(width(&extended) <= before);
        }

        let everything = inst(unit_jobs(&["a", "b", "c", "d"]), &[]);
        assert_eq!(width(&everything), 4);
    }

    #[test]
    fn proper_level_is_zero_with_one_window_size() {
        for seed in 0..30 {
            let mut state = 0x1234_5678u64 ^ seed;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let n = (next() % 8) as usize + 1;
            let window = (next() % 6) as Time + 1;
            let jobs: Vec<Job> = (0..n)
                .map(|i| {
                    let r = (next() % 20) as Time;
                    let p = (next() % window as u64) as Time + 1;
                    Job::new(format!("j{i}"), r, p, r + window)
                })
                .collect();
            let i = inst(jobs, &[]);
            assert_eq!(proper_level(&i), 0);
        }
    }
}
