//! Reconciles the closed-form and oracle reports.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::arithmetic::Factorization;
use crate::closed_form;
use crate::error::{Error, Result};
use crate::graph_oracle::build_graph;
use crate::report::{IndexName, IndexReport, IndexValue};

/// Largest divisor count the oracle builds a graph for unless overridden.
pub const DEFAULT_ORACLE_CAP: u64 = 5000;

// Sweeps hand this many consecutive n to the thread pool at once.
const SWEEP_CHUNK: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Mismatch,
    OracleSkipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Mismatch => "mismatch",
            Status::OracleSkipped => "oracle_skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub index: IndexName,
    pub closed_form: IndexValue,
    pub oracle: IndexValue,
    pub equal: bool,
}

#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub n: BigUint,
    pub status: Status,
    pub closed_form: IndexReport,
    /// Absent when the oracle was skipped.
    pub oracle: Option<IndexReport>,
    pub comparisons: Vec<Comparison>,
    pub oracle_skipped_reason: Option<String>,
    pub elapsed_closed_form: Duration,
    pub elapsed_oracle: Option<Duration>,
}

impl VerificationResult {
    pub fn mismatches(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.equal)
    }
}

/// Compares both paths for `n`, skipping the oracle when `D > cap`.
pub fn verify_n(n: &BigUint, cap: u64) -> Result<VerificationResult> {
    Ok(verify_factorization(&Factorization::of(n)?, cap))
}

pub fn verify_factorization(f: &Factorization, cap: u64) -> VerificationResult {
    let started = Instant::now();
    let closed = closed_form::report(f);
    let elapsed_closed_form = started.elapsed();

    let started = Instant::now();
    let graph = match build_graph(f, cap) {
        Ok(graph) => graph,
        Err(err) => {
            return VerificationResult {
                n: f.n().clone(),
                status: Status::OracleSkipped,
                closed_form: closed,
                oracle: None,
                comparisons: Vec::new(),
                oracle_skipped_reason: Some(err.to_string()),
                elapsed_closed_form,
                elapsed_oracle: None,
            }
        }
    };
    let oracle = graph.oracle_report();
    let elapsed_oracle = started.elapsed();

    let comparisons: Vec<_> = IndexName::ALL
        .iter()
        .map(|&index| {
            let (closed_form, oracle) = (closed.value(index), oracle.value(index));
            Comparison {
                index,
                equal: closed_form == oracle,
                closed_form,
                oracle,
            }
        })
        .collect();
    let status = if comparisons.iter().all(|c| c.equal) {
        Status::Verified
    } else {
        Status::Mismatch
    };
    VerificationResult {
        n: f.n().clone(),
        status,
        closed_form: closed,
        oracle: Some(oracle),
        comparisons,
        oracle_skipped_reason: None,
        elapsed_closed_form,
        elapsed_oracle: Some(elapsed_oracle),
    }
}

/// Aggregate of a sweep over `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub lo: u64,
    pub hi: u64,
    pub verified: u64,
    pub mismatched: u64,
    pub skipped: u64,
    /// Ascending.
    pub mismatching_n: Vec<u64>,
    pub max_divisor_count: BigUint,
    pub elapsed: Duration,
}

impl SweepSummary {
    fn empty(lo: u64, hi: u64) -> Self {
        SweepSummary {
            lo,
            hi,
            verified: 0,
            mismatched: 0,
            skipped: 0,
            mismatching_n: Vec::new(),
            max_divisor_count: BigUint::default(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn total(&self) -> u64 {
        self.verified + self.mismatched + self.skipped
    }

    fn record(&mut self, n: u64, result: &VerificationResult) {
        match result.status {
            Status::Verified => self.verified += 1,
            Status::Mismatch => {
                self.mismatched += 1;
                self.mismatching_n.push(n);
            }
            Status::OracleSkipped => self.skipped += 1,
        }
        if result.closed_form.divisor_count > self.max_divisor_count {
            self.max_divisor_count = result.closed_form.divisor_count.clone();
        }
    }

    /// Same summary regardless of how the range was split.
    pub fn same_outcome(&self, other: &SweepSummary) -> bool {
        SweepSummary {
            elapsed: Duration::ZERO,
            ..self.clone()
        } == SweepSummary {
            elapsed: Duration::ZERO,
            ..other.clone()
        }
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} verified, {} mismatches, {} skipped",
            self.verified, self.mismatched, self.skipped
        )
    }
}

pub fn verify_range(lo: u64, hi: u64, cap: u64) -> Result<SweepSummary> {
    verify_range_with(lo, hi, cap, |_| {})
}

/// Verifies every `n` in `[lo, hi]`, evaluating chunks in parallel and
/// handing each result to `sink` in ascending order of `n`.
pub fn verify_range_with(
    lo: u64,
    hi: u64,
    cap: u64,
    mut sink: impl FnMut(&VerificationResult),
) -> Result<SweepSummary> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let started = Instant::now();
    let mut summary = SweepSummary::empty(lo, hi);
    let mut start = lo;
    loop {
        let end = start.saturating_add(SWEEP_CHUNK - 1).min(hi);
        let results: Vec<_> = (start..=end)
            .into_par_iter()
            .map(|n| {
                let f = Factorization::from_u64(n).expect("n >= 1");
                verify_factorization(&f, cap)
            })
            .collect();
        for (n, result) in (start..=end).zip(&results) {
            summary.record(n, result);
            sink(result);
        }
        if end == hi {
            break;
        }
        start = end + 1;
    }
    summary.elapsed = started.elapsed();
    Ok(summary)
}
