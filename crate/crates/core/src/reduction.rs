//! Shuffle-product decision procedure and the two hard-instance
//! constructions built on it.
//!
//! Words in scheduling-facing inputs are over the characters '0' and '1';
//! the command decoding maps '0' to the smaller processing value `p` and
//! '1' to the larger value `q`. Membership and enumeration themselves work
//! over arbitrary characters.
//!
//! Formulas below index word positions from 1; storage is 0-based and the
//! conversion happens exactly at the formula boundary.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::model::{Instance, Job, Objective, RawInstance, Schedule, Time};
use crate::solver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("word contains `{0}`; only '0' and '1' are allowed")]
    NonBinaryAlphabet(char),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("bad alphabet values p={p}, q={q}; need 0 < p < q")]
    BadAlphabetValues { p: Time, q: Time },
    #[error(
        "equivalence violated for construction {construction:?} (p={p}, q={q}, u={u_words:?}, v={v_word:?}): {detail}"
    )]
    EquivalenceViolated {
        construction: Construction,
        p: Time,
        q: Time,
        u_words: Vec<String>,
        v_word: String,
        detail: String,
    },
}

/// Words `u_1, ..., u_l` and a target `v`, all over the binary alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleInstance {
    u_words: Vec<String>,
    v_word: String,
}

impl ShuffleInstance {
    pub fn new(
        u_words: impl IntoIterator<Item = impl Into<String>>,
        v_word: impl Into<String>,
    ) -> Result<Self, ReductionError> {
        let u_words: Vec<String> = u_words.into_iter().map(Into::into).collect();
        let v_word = v_word.into();
        for word in u_words.iter().chain(std::iter::once(&v_word)) {
            if let Some(c) = word.chars().find(|&c| c != '0' && c != '1') {
                return Err(ReductionError::NonBinaryAlphabet(c));
            }
        }
        Ok(ShuffleInstance { u_words, v_word })
    }

    pub fn u_words(&self) -> &[String] {
        &self.u_words
    }

    pub fn v_word(&self) -> &str {
        &self.v_word
    }

    pub fn membership(&self) -> Membership {
        shuffle_membership(&self.u_words, &self.v_word)
    }
}

/// A family of strictly increasing maps `f_i` sending the positions of
/// `u_i` to positions of `v` (1-based) whose images partition the
/// positions of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWitness {
    maps: Vec<Vec<usize>>,
}

impl ShuffleWitness {
    pub fn new(maps: Vec<Vec<usize>>) -> Self {
        ShuffleWitness { maps }
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    /// Checks every witness condition against the given words.
    pub fn verify(&self, u_words: &[impl AsRef<str>], v: &str) -> bool {
        if self.maps.len() != u_words.len() {
            return false;
        }
        let v_chars: Vec<char> = v.chars().collect();
        let mut covered = Vec::new();
        for (map, word) in self.maps.iter().zip(u_words) {
            let chars: Vec<char> = word.as_ref().chars().collect();
            if map.len() != chars.len() {
                return false;
            }
            for (x, &pos) in map.iter().enumerate() {
                if pos < 1 || pos > v_chars.len() || v_chars[pos - 1] != chars[x] {
                    return false;
                }
                if x > 0 && map[x - 1] >= pos {
                    return false;
                }
                covered.push(pos);
            }
        }
        covered.sort_unstable();
        covered == (1..=v_chars.len()).collect::<Vec<usize>>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    /// Fast reject: some symbol occurs a different number of times in `v`
    /// than in the words combined.
    SymbolCountMismatch { symbol: char, in_target: usize, in_words: usize },
    /// Counts match but no interleaving spells `v`.
    NoInterleaving,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(ShuffleWitness),
    NotMember(NoReason),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn witness(&self) -> Option<&ShuffleWitness> {
        match self {
            Membership::Member(w) => Some(w),
            Membership::NotMember(_) => None,
        }
    }
}

/// Decides `v ∈ u_1 ⧢ ... ⧢ u_l` by dynamic programming over tuples of
/// consumed prefix lengths, and reconstructs a witness on success.
pub fn shuffle_membership(u_words: &[impl AsRef<str>], v: &str) -> Membership {
    let words: Vec<Vec<char>> = u_words.iter().map(|w| w.as_ref().chars().collect()).collect();
    let target: Vec<char> = v.chars().collect();

    let mut counts: BTreeMap<char, (usize, usize)> = BTreeMap::new();
    for &c in &target {
        counts.entry(c).or_default().0 += 1;
    }
    for word in &words {
        for &c in word {
            counts.entry(c).or_default().1 += 1;
        }
    }
    for (symbol, (in_target, in_words)) in &counts {
        if in_target != in_words {
            return Membership::NotMember(NoReason::SymbolCountMismatch {
                symbol: *symbol,
                in_target: *in_target,
                in_words: *in_words,
            });
        }
    }

    // parent[state] = (predecessor state, word that contributed v[pos])
    let mut parent: HashMap<Vec<u16>, (Vec<u16>, usize)> = HashMap::new();
    let start = vec![0u16; words.len()];
    let mut frontier: BTreeSet<Vec<u16>> = BTreeSet::from([start.clone()]);
    for (pos, &c) in target.iter().enumerate() {
        let mut next_frontier = BTreeSet::new();
        for state in &frontier {
            for (i, word) in words.iter().enumerate() {
                let consumed = state[i] as usize;
                if consumed < word.len() && word[consumed] == c {
                    let mut next = state.clone();
                    next[i] += 1;
                    if !parent.contains_key(&next) {
                        parent.insert(next.clone(), (state.clone(), i));
                        next_frontier.insert(next);
                    }
                }
            }
        }
        frontier = next_frontier;
        if frontier.is_empty() {
            debug_assert!(pos < target.len());
            return Membership::NotMember(NoReason::NoInterleaving);
        }
    }

    let full: Vec<u16> = words.iter().map(|w| w.len() as u16).collect();
    if !frontier.contains(&full) {
        return Membership::NotMember(NoReason::NoInterleaving);
    }
    let mut maps = vec![Vec::new(); words.len()];
    let mut cur = full;
    for pos in (1..=target.len()).rev() {
        let (prev, i) = parent[&cur].clone();
        maps[i].push(pos);
        cur = prev;
    }
    for map in &mut maps {
        map.reverse();
    }
    Membership::Member(ShuffleWitness::new(maps))
}

/// Largest combined word length accepted by [`enumerate_shuffle`].
pub const ENUMERATE_LENGTH_CAP: usize = 12;

/// The exact set of interleavings of the given words. Repeated letters
/// collapse because the result is a set.
pub fn enumerate_shuffle(
    words: &[impl AsRef<str>],
    cap: usize,
) -> Result<BTreeSet<String>, ReductionError> {
    let words: Vec<Vec<char>> = words.iter().map(|w| w.as_ref().chars().collect()).collect();
    let total: usize = words.iter().map(|w| w.len()).sum();
    if total > ENUMERATE_LENGTH_CAP {
        return Err(ReductionError::TooLarge(format!(
            "combined word length {total} exceeds {ENUMERATE_LENGTH_CAP}"
        )));
    }
    let mut out = BTreeSet::new();
    let mut consumed = vec![0usize; words.len()];
    let mut buf = String::with_capacity(total);
    fn walk(
        words: &[Vec<char>],
        consumed: &mut [usize],
        buf: &mut String,
        total: usize,
        cap: usize,
        out: &mut BTreeSet<String>,
    ) -> bool {
        if buf.len() == total {
            out.insert(buf.clone());
            return out.len() <= cap;
        }
        for i in 0..words.len() {
            if consumed[i] < words[i].len() {
                buf.push(words[i][consumed[i]]);
                consumed[i] += 1;
                let ok = walk(words, consumed, buf, total, cap, out);
                consumed[i] -= 1;
                buf.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    if walk(&words, &mut consumed, &mut buf, total, cap, &mut out) {
        Ok(out)
    } else {
        Err(ReductionError::TooLarge(format!("more than {cap} distinct interleavings")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Guard windows of length `p`; x-jobs share release 0 and one common
    /// deadline. Not prec-consistent once a nonempty word is present.
    One,
    /// Guard windows of length `q` (the last of length delta) and sliding
    /// x-windows of constant length delta; always prec-consistent.
    Two,
}

/// The canonical trivial no-instance: a single job that cannot fit its
/// own window.
pub fn trivial_no_instance() -> Instance {
    RawInstance {
        jobs: vec![Job::new("no0", 0, 2, 1)],
        prec_edges: Vec::new(),
        declared_chains: None,
        objective: Objective::MinMakespan,
    }
    .validate()
    .expect("static instance is valid")
}

fn check_alphabet(p: Time, q: Time) -> Result<(), ReductionError> {
    if p <= 0 || p >= q {
        return Err(ReductionError::BadAlphabetValues { p, q });
    }
    Ok(())
}

fn decode(word: &str, p: Time, q: Time) -> Vec<Time> {
    word.chars().map(|c| if c == '0' { p } else { q }).collect()
}

fn counts_match(si: &ShuffleInstance) -> bool {
    for symbol in ['0', '1'] {
        let in_v = si.v_word().chars().filter(|&c| c == symbol).count();
        let in_u: usize = si
            .u_words()
            .iter()
            .map(|u| u.chars().filter(|&c| c == symbol).count())
            .sum();
        if in_v != in_u {
            return false;
        }
    }
    true
}

struct ConstructionParts {
    jobs: Vec<Job>,
    edges: Vec<(String, String)>,
    chains: Vec<Vec<String>>,
}

impl ConstructionParts {
    fn push_chain(&mut self, chain: Vec<Job>) {
        if chain.is_empty() {
            return;
        }
        let ids: Vec<String> = chain.iter().map(|j| j.id.clone()).collect();
        for w in ids.windows(2) {
            self.edges.push((w[0].clone(), w[1].clone()));
        }
        self.chains.push(ids);
        self.jobs.extend(chain);
    }

    fn into_instance(self) -> Result<Instance, ReductionError> {
        RawInstance {
            jobs: self.jobs,
            prec_edges: self.edges,
            declared_chains: Some(self.chains),
            objective: Objective::MinMakespan,
        }
        .validate()
        .map_err(|e| ReductionError::TooLarge(e.to_string()))
    }
}

/// Emits the scheduling instance whose feasibility encodes shuffle
/// membership: one guard chain `g_0, ..., g_n` of zero-slack jobs carving
/// the timeline into slots spelling `v`, plus one chain per word whose
/// jobs must fill those slots exactly. A per-symbol count mismatch
/// short-circuits to the trivial no-instance.
pub fn construct_1(si: &ShuffleInstance, p: Time, q: Time) -> Result<Instance, ReductionError> {
    check_alphabet(p, q)?;
    if !counts_match(si) {
        return Ok(trivial_no_instance());
    }
    let v = decode(si.v_word(), p, q);
    let n = v.len();
    let prefix = prefix_sums(&v);
    let x_deadline = (n as Time + 1) * p + prefix[n];

    let mut parts = ConstructionParts { jobs: Vec::new(), edges: Vec::new(), chains: Vec::new() };
    let guards = (0..=n)
        .map(|i| {
            let release = p * i as Time + prefix[i];
            Job::new(format!("g{i}"), release, p, release + p)
        })
        .collect();
    parts.push_chain(guards);

    for (wi, word) in si.u_words().iter().enumerate() {
        let durations = decode(word, p, q);
        let chain = durations
            .iter()
            .enumerate()
            .map(|(j, &dur)| Job::new(format!("x{}_{}", wi + 1, j + 1), 0, dur, x_deadline))
            .collect();
        parts.push_chain(chain);
    }
    parts.into_instance()
}

/// Prec-consistent variant: guard windows scale to `q`, the last guard
/// blocks the suffix of the horizon, and the j-th job of every word is
/// released exactly at the start of slot j with a window of constant
/// length delta.
pub fn construct_2(si: &ShuffleInstance, p: Time, q: Time) -> Result<Instance, ReductionError> {
    check_alphabet(p, q)?;
    if !counts_match(si) {
        return Ok(trivial_no_instance());
    }
    let v = decode(si.v_word(), p, q);
    let n = v.len();
    let prefix = prefix_sums(&v);
    let delta = (n as Time + 1) * q + prefix[n];

    let mut parts = ConstructionParts { jobs: Vec::new(), edges: Vec::new(), chains: Vec::new() };
    let guards = (0..=n)
        .map(|i| {
            let release = q * i as Time + prefix[i];
            let window = if i == n { delta } else { q };
            Job::new(format!("g{i}"), release, window, release + window)
        })
        .collect();
    parts.push_chain(guards);

    for (wi, word) in si.u_words().iter().enumerate() {
        let durations = decode(word, p, q);
        let chain = durations
            .iter()
            .enumerate()
            .map(|(j, &dur)| {
                // slot j+1 (1-based position j+1 of v) starts here
                let release = q * (j as Time + 1) + prefix[j];
                Job::new(format!("x{}_{}", wi + 1, j + 1), release, dur, release + delta)
            })
            .collect();
        parts.push_chain(chain);
    }
    parts.into_instance()
}

/// prefix[i] = sum of the first i decoded letters, prefix[0] = 0.
fn prefix_sums(v: &[Time]) -> Vec<Time> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(0);
    for &x in v {
        out.push(out.last().unwrap() + x);
    }
    out
}

/// Outcome of one certification run.
#[derive(Debug, Clone)]
pub struct CertReport {
    pub construction: Construction,
    pub shuffle_member: bool,
    pub schedule_feasible: bool,
    /// Witness recovered from the schedule when both sides say yes.
    pub witness: Option<ShuffleWitness>,
}

/// Caps on certification inputs.
pub const CERTIFY_MAX_V: usize = 10;
pub const CERTIFY_MAX_WORDS: usize = 3;

/// Cross-checks shuffle membership against scheduling feasibility of the
/// constructed instance. The shuffle side runs the membership DP, the
/// scheduling side runs the width DP; the two share no code. When both
/// say yes, the schedule's interleaving is converted back into a witness
/// (the image of position j of word i is one plus the number of non-guard
/// jobs scheduled before that job) and verified.
pub fn certify_reduction(
    si: &ShuffleInstance,
    construction: Construction,
    p: Time,
    q: Time,
) -> Result<CertReport, ReductionError> {
    if si.v_word().len() > CERTIFY_MAX_V || si.u_words().len() > CERTIFY_MAX_WORDS {
        return Err(ReductionError::TooLarge(format!(
            "certification accepts |v| <= {CERTIFY_MAX_V} and at most {CERTIFY_MAX_WORDS} words"
        )));
    }
    let membership = si.membership();
    let inst = match construction {
        Construction::One => construct_1(si, p, q)?,
        Construction::Two => construct_2(si, p, q)?,
    };
    let outcome = solver::solve_width_dp(&inst);

    let violated = |detail: String| ReductionError::EquivalenceViolated {
        construction,
        p,
        q,
        u_words: si.u_words().to_vec(),
        v_word: si.v_word().to_string(),
        detail,
    };

    if membership.is_member() != outcome.feasible {
        return Err(violated(format!(
            "shuffle membership {} but scheduling feasibility {}",
            membership.is_member(),
            outcome.feasible
        )));
    }

    let witness = if outcome.feasible {
        let schedule = outcome.schedule.as_ref().expect("feasible outcome has a schedule");
        let extracted = extract_witness(si, schedule);
        if !extracted.verify(si.u_words(), si.v_word()) {
            return Err(violated("schedule did not induce a valid witness".to_string()));
        }
        Some(extracted)
    } else {
        None
    };

    Ok(CertReport {
        construction,
        shuffle_member: membership.is_member(),
        schedule_feasible: outcome.feasible,
        witness,
    })
}

/// f_i(j) = number of non-guard jobs scheduled before x^i_j, plus one.
fn extract_witness(si: &ShuffleInstance, schedule: &Schedule) -> ShuffleWitness {
    let mut x_jobs: Vec<(Time, usize, usize)> = Vec::new();
    for (wi, word) in si.u_words().iter().enumerate() {
        for j in 1..=word.chars().count() {
            let id = format!("x{}_{}", wi + 1, j);
            let start = schedule.start(&id).expect("constructed job is scheduled");
            x_jobs.push((start, wi, j));
        }
    }
    x_jobs.sort_unstable();
    let mut maps = vec![Vec::new(); si.u_words().len()];
    for (rank, &(_, wi, j)) in x_jobs.iter().enumerate() {
        debug_assert_eq!(maps[wi].len(), j - 1, "chain order follows start order");
        maps[wi].push(rank + 1);
    }
    ShuffleWitness::new(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::instance_stats;

    fn si(u: &[&str], v: &str) -> ShuffleInstance {
        ShuffleInstance::new(u.iter().map(|s| s.to_string()), v).unwrap()
    }

    #[test]
    fn four_letter_membership() {
        assert!(shuffle_membership(&["ab", "cd"], "acbd").is_member());
        assert!(!shuffle_membership(&["ab", "cd"], "adbc").is_member());
    }

    #[test]
    fn empty_words_accept_empty_target() {
        let m = shuffle_membership(&["", "", ""], "");
        let w = m.witness().unwrap();
        assert_eq!(w.maps(), &[Vec::<usize>::new(), Vec::new(), Vec::new()]);
    }

    #[test]
    fn count_mismatch_is_reported() {
        match shuffle_membership(&["0"], "1") {
            Membership::NotMember(NoReason::SymbolCountMismatch { symbol, .. }) => {
                assert_eq!(symbol, '0');
            }
            other => panic!("expected count mismatch, got {other:?}"),
        }
    }

    #[test]
    fn membership_witness_verifies() {
        let m = shuffle_membership(&["01", "10"], "0110");
        let w = m.witness().unwrap();
        assert!(w.verify(&["01", "10"], "0110"));
    }

    #[test]
    fn witness_rejects_wrong_letters() {
        let w = ShuffleWitness::new(vec![vec![1, 2], vec![3, 4]]);
        assert!(w.verify(&["ab", "cd"], "abcd"));
        assert!(!w.verify(&["ab", "cd"], "abdc"));
    }

    #[test]
    fn enumerate_two_pairs() {
        let set = enumerate_shuffle(&["ab", "cd"], 100).unwrap();
        let expected: BTreeSet<String> =
            ["abcd", "acbd", "acdb", "cdab", "cabd", "cadb"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn enumerate_collapses_repeats() {
        let set = enumerate_shuffle(&["00", "00"], 100).unwrap();
        assert_eq!(set, BTreeSet::from(["0000".to_string()]));
    }

    #[test]
    fn enumerate_with_empty_operand() {
        let set = enumerate_shuffle(&["x", ""], 100).unwrap();
        assert_eq!(set, BTreeSet::from(["x".to_string()]));
    }

    #[test]
    fn enumerate_rejects_long_inputs() {
        assert!(matches!(
            enumerate_shuffle(&["0000000", "0000000"], 100),
            Err(ReductionError::TooLarge(_))
        ));
    }

    #[test]
    fn non_binary_instance_rejected() {
        assert!(matches!(
            ShuffleInstance::new(vec!["0a"], "0"),
            Err(ReductionError::NonBinaryAlphabet('a'))
        ));
    }

    #[test]
    fn construct_1_guard_layout() {
        // v = 011 decodes to (1, 2, 2) with p=1, q=2
        let inst = construct_1(&si(&["011"], "011"), 1, 2).unwrap();
        let expect = [("g0", 0), ("g1", 2), ("g2", 5), ("g3", 8)];
        for (id, release) in expect {
            let job = inst.job(inst.index_of(id).unwrap());
            assert_eq!(job.release, release);
            assert_eq!(job.processing, 1);
            assert_eq!(job.window(), 1);
        }
        let x = inst.job(inst.index_of("x1_1").unwrap());
        assert_eq!((x.release, x.deadline), (0, 9));
    }

    #[test]
    fn construct_1_count_mismatch_gives_trivial_no() {
        let inst = construct_1(&si(&["1"], "0"), 1, 2).unwrap();
        assert_eq!(inst.n(), 1);
        let job = inst.job(0);
        assert_eq!((job.release, job.processing, job.deadline), (0, 2, 1));
    }

    #[test]
    fn construct_1_has_two_window_sizes() {
        let inst = construct_1(&si(&["011"], "011"), 1, 2).unwrap();
        let stats = instance_stats(&inst);
        assert_eq!(stats.num_window_sizes, 2);
        assert!(!stats.prec_consistent);
    }

    #[test]
    fn construct_1_processing_times_come_from_the_alphabet() {
        for seed in 0..30 {
            let (u, v) = crate::gen::generate_shuffle_words(seed, 3, 8);
            let sinst = ShuffleInstance::new(u, v).unwrap();
            let inst = construct_1(&sinst, 2, 5).unwrap();
            for job in inst.jobs() {
                assert!(job.processing == 2 || job.processing == 5, "{job:?}");
            }
            let stats = instance_stats(&inst);
            assert!(stats.num_processing_times <= 2);
            assert!(stats.num_window_sizes <= 2);
            assert!(stats.num_job_types <= inst.n());
        }
    }

    #[test]
    fn construct_2_guard_layout() {
        let inst = construct_2(&si(&["011"], "011"), 1, 2).unwrap();
        let expect = [("g0", 0, 2), ("g1", 3, 2), ("g2", 7, 2), ("g3", 11, 13)];
        for (id, release, processing) in expect {
            let job = inst.job(inst.index_of(id).unwrap());
            assert_eq!(job.release, release, "release of {id}");
            assert_eq!(job.processing, processing, "processing of {id}");
            assert_eq!(job.window(), job.processing);
        }
    }

    #[test]
    fn construct_2_is_prec_consistent_with_few_parameters() {
        let inst = construct_2(&si(&["01", "1"], "011"), 1, 2).unwrap();
        let stats = instance_stats(&inst);
        assert!(stats.prec_consistent);
        assert!(stats.num_window_sizes <= 2);
        assert!(stats.num_processing_times <= 3);
    }

    #[test]
    fn bad_alphabet_values_rejected() {
        assert!(matches!(
            construct_1(&si(&["0"], "0"), 2, 2),
            Err(ReductionError::BadAlphabetValues { .. })
        ));
        assert!(matches!(
            construct_2(&si(&["0"], "0"), 0, 1),
            Err(ReductionError::BadAlphabetValues { .. })
        ));
    }

    #[test]
    fn certify_single_letter() {
        for construction in [Construction::One, Construction::Two] {
            let report = certify_reduction(&si(&["0"], "0"), construction, 1, 2).unwrap();
            assert!(report.shuffle_member);
            assert!(report.schedule_feasible);
            assert_eq!(report.witness.unwrap().maps(), &[vec![1]]);
        }
    }

    #[test]
    fn certify_count_mismatch() {
        for construction in [Construction::One, Construction::Two] {
            let report = certify_reduction(&si(&["1"], "0"), construction, 1, 2).unwrap();
            assert!(!report.shuffle_member);
            assert!(!report.schedule_feasible);
        }
    }

    #[test]
    fn certify_rejects_oversized_input() {
        let long = "0".repeat(CERTIFY_MAX_V + 1);
        assert!(matches!(
            certify_reduction(&si(&[long.as_str()], &long), Construction::One, 1, 2),
            Err(ReductionError::TooLarge(_))
        ));
    }

    #[test]
    fn guard_rigidity_in_dp_witness() {
        let inst = construct_1(&si(&["011"], "011"), 1, 2).unwrap();
        let outcome = solver::solve_width_dp(&inst);
        let sched = outcome.schedule.unwrap();
        for i in 0..=3 {
            let id = format!("g{i}");
            let job = inst.job(inst.index_of(&id).unwrap());
            assert_eq!(job.slack(), 0);
            assert_eq!(sched.start(&id), Some(job.release));
        }
    }

    #[test]
    fn witness_round_trip_through_slots() {
        let instance = si(&["01", "10"], "0110");
        let membership = instance.membership();
        let witness = membership.witness().unwrap();

        for (construction, base) in [(Construction::One, 1), (Construction::Two, 2)] {
            let inst = match construction {
                Construction::One => construct_1(&instance, 1, 2).unwrap(),
                Construction::Two => construct_2(&instance, 1, 2).unwrap(),
            };
            // place each x-job at the start of its witnessed slot
            let v = decode(instance.v_word(), 1, 2);
            let prefix = prefix_sums(&v);
            let mut sched = Schedule::new();
            for i in 0..=v.len() {
                let id = format!("g{i}");
                let job = inst.job(inst.index_of(&id).unwrap());
                sched.set(id, job.release);
            }
            for (wi, map) in witness.maps().iter().enumerate() {
                for (x, &slot) in map.iter().enumerate() {
                    let start = base as Time * slot as Time + prefix[slot - 1];
                    sched.set(format!("x{}_{}", wi + 1, x + 1), start);
                }
            }
            let report = crate::model::validate_schedule(&inst, &sched).unwrap();
            assert!(report.feasible(), "{construction:?}: {:?}", report.violations);
            let extracted = extract_witness(&instance, &sched);
            assert!(extracted.verify(instance.u_words(), instance.v_word()));
        }
    }
}
