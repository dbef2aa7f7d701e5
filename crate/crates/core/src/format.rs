//! Instance and result files.
//!
//! Both formats are JSON with a canonical serialization: object keys in
//! alphabetical order (struct fields are declared that way), jobs sorted
//! by id, precedence pairs sorted, chains sorted by their first job.
//! Identical inputs therefore serialize to identical bytes and diffs stay
//! meaningful.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Instance, Job, Objective, RawInstance, Time};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("number {value} on `{place}` does not fit the time range")]
    NumberTooLarge { value: u64, place: String },
}

/// On-disk instance document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<Vec<String>>>,
    pub jobs: Vec<JobEntry>,
    #[serde(default)]
    pub objective: Objective,
    #[serde(default)]
    pub prec: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobEntry {
    pub d: u64,
    pub id: String,
    pub p: u64,
    pub r: u64,
}

/// On-disk result document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cmax: Option<u64>,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmax: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Vec<ScheduleEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<RunStats>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleEntry {
    pub id: String,
    pub start: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunStats {
    pub states_explored: u64,
    pub wall_ms: u64,
}

fn to_time(value: u64, place: &str) -> Result<Time, FormatError> {
    Time::try_from(value).map_err(|_| FormatError::NumberTooLarge {
        value,
        place: place.to_string(),
    })
}

/// Parses an instance document into raw (unvalidated) instance data.
pub fn parse_instance(text: &str) -> Result<RawInstance, FormatError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let mut jobs = Vec::with_capacity(file.jobs.len());
    for entry in file.jobs {
        jobs.push(Job {
            release: to_time(entry.r, &entry.id)?,
            processing: to_time(entry.p, &entry.id)?,
            deadline: to_time(entry.d, &entry.id)?,
            id: entry.id,
        });
    }
    Ok(RawInstance {
        jobs,
        prec_edges: file.prec.into_iter().map(|[a, b]| (a, b)).collect(),
        declared_chains: file.chains,
        objective: file.objective,
    })
}

/// Canonical serialization of a validated instance.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut jobs: Vec<JobEntry> = inst
        .jobs()
        .iter()
        .map(|j| JobEntry {
            d: j.deadline as u64,
            id: j.id.clone(),
            p: j.processing as u64,
            r: j.release as u64,
        })
        .collect();
    jobs.sort_by(|a, b| a.id.cmp(&b.id));

    let mut prec: Vec<[String; 2]> = inst
        .prec_edges()
        .iter()
        .map(|&(u, v)| [inst.job(u).id.clone(), inst.job(v).id.clone()])
        .collect();
    prec.sort();

    let chains = inst.declared_chains().map(|chains| {
        let mut out: Vec<Vec<String>> = chains
            .iter()
            .map(|c| c.iter().map(|&i| inst.job(i).id.clone()).collect())
            .collect();
        out.sort();
        out
    });

    let file = InstanceFile { chains, jobs, objective: inst.objective(), prec };
    let mut text = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    text.push('\n');
    text
}

pub fn parse_result(text: &str) -> Result<ResultFile, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn serialize_result(result: &ResultFile) -> String {
    let mut text = serde_json::to_string_pretty(result).expect("serialization cannot fail");
    text.push('\n');
    text
}
