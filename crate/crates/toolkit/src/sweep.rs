//! Grid sweep over `D(n, l)`: construct, verify and optionally solve every
//! admissible instance, one CSV row each.

use std::io::Write;
use std::time::Instant;

use dandelion_core::{classify, construct, dandelion, lower_bound, CaseKind, SearchBudget, Solver};
use rayon::prelude::*;
use serde::Serialize;

use crate::clock::InstantClock;

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("l_min must be at least 2 (got {0})")]
    LMin(u32),
    #[error("l_max must be at least l_min (got l_min={0}, l_max={1})")]
    LRange(u32, u32),
    #[error("n_max must be at least l_min+1 (got l_min={0}, n_max={1})")]
    NMax(u32, u32),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Core(#[from] dandelion_core::Error),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub l_min: u32,
    pub l_max: u32,
    pub n_max: u32,
    /// Solve exactly only when `n` is at most this.
    pub exact_up_to: Option<u32>,
    pub allow_repair: bool,
    pub budget: SearchBudget,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Record per-phase wall time. Off gives byte-identical CSV across runs.
    pub timing: bool,
}

/// One CSV row. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub n: u32,
    pub l: u32,
    #[serde(serialize_with = "case_name")]
    pub case: CaseKind,
    pub lower_bound: u32,
    pub constructive_k: u32,
    pub construction_valid: bool,
    pub repaired: bool,
    pub exact_k: Option<u32>,
    pub discrepancy: bool,
    pub construct_ms: Option<f64>,
    pub exact_ms: Option<f64>,
}

fn case_name<S: serde::Serializer>(case: &CaseKind, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(case.name())
}

pub const COLUMNS: [&str; 11] = [
    "n",
    "l",
    "case",
    "lower_bound",
    "constructive_k",
    "construction_valid",
    "repaired",
    "exact_k",
    "discrepancy",
    "construct_ms",
    "exact_ms",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub discrepancies: usize,
    pub exact_solved: usize,
    pub exact_unknown: usize,
}

impl SweepConfig {
    fn validate(&self) -> Result<(), SweepError> {
        if self.l_min < 2 {
            return Err(SweepError::LMin(self.l_min));
        }
        if self.l_max < self.l_min {
            return Err(SweepError::LRange(self.l_min, self.l_max));
        }
        if self.n_max < self.l_min + 1 {
            return Err(SweepError::NMax(self.l_min, self.n_max));
        }
        Ok(())
    }

    /// Admissible `(n, l)` pairs sorted by `(l, n)`.
    pub fn instances(&self) -> Vec<(u32, u32)> {
        (self.l_min..=self.l_max)
            .flat_map(|l| (l + 1..=self.n_max).map(move |n| (n, l)))
            .collect()
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn run_instance(n: u32, l: u32, config: &SweepConfig) -> Result<SweepRecord, SweepError> {
    let case = classify(n, l)?;
    let g = dandelion(n, l)?;
    let lb = lower_bound(&g)?.lower_bound;

    let started = Instant::now();
    let built = construct(n, l, config.allow_repair)?;
    let construct_ms = millis(started);

    let mut exact_k = None;
    let mut exact_ms = None;
    if config.exact_up_to.is_some_and(|max| n <= max) {
        let started = Instant::now();
        let clock = InstantClock::start();
        let result = Solver::new(config.budget).with_clock(&clock).es_exact(&g)?;
        exact_k = result.exact_k();
        exact_ms = Some(millis(started));
    }

    let tight = matches!(case, CaseKind::Case1 | CaseKind::Case2);
    let discrepancy = !built.report.valid || (tight && exact_k.is_some_and(|k| k != n - l + 1));
    Ok(SweepRecord {
        n,
        l,
        case,
        lower_bound: lb,
        constructive_k: built.claimed_k,
        construction_valid: built.report.valid,
        repaired: built.repaired,
        exact_k,
        discrepancy,
        construct_ms: config.timing.then_some(construct_ms),
        exact_ms: exact_ms.filter(|_| config.timing),
    })
}

/// Runs every instance on a pool of `config.jobs` workers. Rows come back in
/// `(l, n)` order whatever the scheduling.
pub fn run(config: &SweepConfig) -> Result<(Vec<SweepRecord>, SweepSummary), SweepError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()?;
    let records = pool.install(|| {
        config
            .instances()
            .into_par_iter()
            .map(|(n, l)| run_instance(n, l, config))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let exact_enabled = |r: &SweepRecord| config.exact_up_to.is_some_and(|max| r.n <= max);
    let summary = SweepSummary {
        instances: records.len(),
        discrepancies: records.iter().filter(|r| r.discrepancy).count(),
        exact_solved: records.iter().filter(|r| r.exact_k.is_some()).count(),
        exact_unknown: records
            .iter()
            .filter(|r| exact_enabled(r) && r.exact_k.is_none())
            .count(),
    };
    Ok((records, summary))
}

pub fn write_csv<W: Write>(out: W, records: &[SweepRecord]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(COLUMNS)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
