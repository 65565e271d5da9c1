//! Parameter-grid sweeps: enumerate triples, verify each valid one in
//! parallel, and fold the outcomes into a deterministic summary.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use nsg_core::constructions::verify_instance;
use nsg_core::{Error, Family};

use crate::args::{FamilyChoice, RangeArg};
use crate::report::InstanceReport;

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub family: FamilyChoice,
    pub e_range: RangeArg,
    pub q_range: RangeArg,
    pub d_range: RangeArg,
    /// Worker count; `None` lets the pool pick one thread per core.
    pub parallelism: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: u64,
    pub skipped: u64,
    pub failures: u64,
}

/// First failing instance, for the exit-1 diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureLocation {
    pub family: String,
    pub e: i64,
    pub q: i64,
    pub d: i64,
    pub check: String,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    /// Reports ordered by (family, e, q, d) regardless of completion order.
    pub reports: Vec<InstanceReport>,
    /// Skip reasons with counts, alphabetical.
    pub skip_reasons: Vec<(String, u64)>,
    pub first_failure: Option<FailureLocation>,
}

fn grid(cfg: &SweepConfig) -> Vec<(Family, i64, i64, i64)> {
    let families: &[Family] = match cfg.family {
        FamilyChoice::S => &[Family::S],
        FamilyChoice::T => &[Family::T],
        FamilyChoice::Both => &[Family::S, Family::T],
    };
    let mut points = Vec::new();
    for &family in families {
        for e in cfg.e_range.iter() {
            for q in cfg.q_range.iter() {
                for d in cfg.d_range.iter() {
                    points.push((family, e, q, d));
                }
            }
        }
    }
    points
}

/// Verify every triple of the grid. Instances run in parallel and are
/// side-effect-free; results are folded in grid order.
pub fn run_sweep(cfg: &SweepConfig) -> SweepOutcome {
    let points = grid(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism.unwrap_or(0))
        .build()
        .expect("worker pool construction");
    let results: Vec<Result<InstanceReport, Error>> = pool.install(|| {
        points
            .par_iter()
            .map(|&(family, e, q, d)| verify_instance(family, e, q, d).map(|r| InstanceReport::from(&r)))
            .collect()
    });

    let mut summary = SweepSummary { instances: 0, skipped: 0, failures: 0 };
    let mut reports = Vec::new();
    let mut skip_reasons: BTreeMap<String, u64> = BTreeMap::new();
    let mut first_failure = None;
    for result in results {
        match result {
            Ok(report) => {
                summary.instances += 1;
                if !report.checks.all_pass() {
                    summary.failures += 1;
                    if first_failure.is_none() {
                        first_failure = Some(FailureLocation {
                            family: report.family.clone(),
                            e: report.e,
                            q: report.q,
                            d: report.d,
                            check: report.checks.first_failure().unwrap_or("?").to_string(),
                        });
                    }
                }
                reports.push(report);
            }
            Err(err) => {
                summary.skipped += 1;
                *skip_reasons.entry(err.to_string()).or_insert(0) += 1;
            }
        }
    }

    SweepOutcome {
        summary,
        reports,
        skip_reasons: skip_reasons.into_iter().collect(),
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(lo: i64, hi: i64) -> RangeArg {
        RangeArg { lo, hi }
    }

    #[test]
    fn sweep_skips_gcd_violations() {
        let cfg = SweepConfig {
            family: FamilyChoice::S,
            e_range: range(4, 4),
            q_range: range(1, 1),
            d_range: range(7, 7),
            parallelism: Some(1),
        };
        let out = run_sweep(&cfg);
        assert_eq!(out.summary, SweepSummary { instances: 0, skipped: 1, failures: 0 });
        assert_eq!(out.skip_reasons, vec![("gcd(m, d) must be 1".to_string(), 1)]);
    }

    #[test]
    fn sweep_skips_odd_e_for_family_t() {
        let cfg = SweepConfig {
            family: FamilyChoice::T,
            e_range: range(5, 5),
            q_range: range(2, 2),
            d_range: range(1, 1),
            parallelism: Some(1),
        };
        let out = run_sweep(&cfg);
        assert_eq!(out.summary.skipped, 1);
        assert_eq!(out.skip_reasons[0].0, "e must be even");
    }

    #[test]
    fn sweep_reports_are_grid_ordered() {
        let cfg = SweepConfig {
            family: FamilyChoice::Both,
            e_range: range(4, 5),
            q_range: range(1, 2),
            d_range: range(1, 3),
            parallelism: Some(4),
        };
        let out = run_sweep(&cfg);
        let keys: Vec<(String, i64, i64, i64)> = out
            .reports
            .iter()
            .map(|r| (r.family.clone(), r.e, r.q, r.d))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(out.summary.instances > 0);
        assert_eq!(out.summary.failures, 0);
        assert!(out.first_failure.is_none());
    }
}
