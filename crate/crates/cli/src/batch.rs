//! `batch`: LC solve against the oracle over a seeded instance stream.
//!
//! Instance `i` is derived only from `(seed, i)` and results are merged in
//! index order, so the statistics do not depend on the worker count.

use std::collections::BTreeMap;

use lc_core::lc;
use lc_core::properties::{instance_seed, near_degenerate_instance, random_regular_instance};
use lc_core::{LcError, SolverConfig};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Oracle agreement required of accepted results with polish on.
pub const POLISHED_BOUND: f64 = 1e-8;
/// Oracle agreement required of accepted results with polish off.
pub const RAW_BOUND: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchOptions {
    pub seed: u64,
    pub trials: u64,
    pub scale: f64,
    pub near_degenerate: bool,
    pub workers: usize,
    pub config: SolverConfig,
}

#[derive(Debug, Clone, PartialEq)]
enum Outcome {
    Solved { rel_error: f64, fallback: Option<&'static str> },
    Degenerate(&'static str),
    Failed(String),
}

fn run_one(opts: &BatchOptions, seed: u64) -> Outcome {
    let generated = if opts.near_degenerate {
        near_degenerate_instance(seed, opts.scale)
    } else {
        random_regular_instance(seed, opts.scale)
    };
    let coeffs = match generated {
        Ok((coeffs, _)) => coeffs,
        Err(e) => return Outcome::Failed(e.to_string()),
    };
    match lc::solve(&coeffs, &opts.config) {
        Ok(r) => Outcome::Solved {
            rel_error: r.oracle_match.map_or(0.0, |m| m.max_rel_error),
            fallback: r.fallback.map(|f| f.as_str()),
        },
        Err(LcError::DegenerateInput(class)) => Outcome::Degenerate(class.as_str()),
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchStats {
    pub seed: u64,
    pub trials: u64,
    pub scale: f64,
    pub near_degenerate: bool,
    pub polish: bool,
    pub bound: f64,
    pub regular_count: u64,
    pub degenerate_count: BTreeMap<String, u64>,
    /// Regular instances answered with oracle roots, by reason.
    pub fallback_count: BTreeMap<String, u64>,
    /// Regular instances that produced an error (e.g. a tangent intersection).
    pub error_count: BTreeMap<String, u64>,
    /// Regular instances returned from the geometric construction.
    pub accepted_count: u64,
    /// LC vs oracle relative error over accepted instances.
    pub max_rel_error: f64,
    pub median_rel_error: f64,
    pub p99_rel_error: f64,
    pub worst_index: Option<u64>,
    pub worst_seed: Option<u64>,
    /// Accepted results whose error exceeds `bound`.
    pub silent_failures: u64,
}

impl BatchStats {
    /// Success: no silent wrong answers, and in the default mode every
    /// instance solved geometrically.
    pub fn passed(&self) -> bool {
        let clean = self.degenerate_count.is_empty() && self.fallback_count.is_empty() && self.error_count.is_empty();
        self.silent_failures == 0 && (self.near_degenerate || clean)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("batch stats serialize")
    }
}

/// Nearest-rank percentile of sorted data.
fn percentile(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = (p * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

pub fn run_batch(opts: &BatchOptions) -> Result<BatchStats, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.workers.max(1)).build()?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        (0..opts.trials)
            .into_par_iter()
            .map(|i| run_one(opts, instance_seed(opts.seed, i)))
            .collect()
    });

    let bound = if opts.config.polish { POLISHED_BOUND } else { RAW_BOUND };
    let mut stats = BatchStats {
        seed: opts.seed,
        trials: opts.trials,
        scale: opts.scale,
        near_degenerate: opts.near_degenerate,
        polish: opts.config.polish,
        bound,
        regular_count: 0,
        degenerate_count: BTreeMap::new(),
        fallback_count: BTreeMap::new(),
        error_count: BTreeMap::new(),
        accepted_count: 0,
        max_rel_error: 0.0,
        median_rel_error: 0.0,
        p99_rel_error: 0.0,
        worst_index: None,
        worst_seed: None,
        silent_failures: 0,
    };
    let mut errors = Vec::new();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let i = i as u64;
        match outcome {
            Outcome::Degenerate(class) => *stats.degenerate_count.entry(class.to_string()).or_default() += 1,
            Outcome::Failed(msg) => {
                stats.regular_count += 1;
                *stats.error_count.entry(msg).or_default() += 1;
            }
            Outcome::Solved { fallback: Some(reason), .. } => {
                stats.regular_count += 1;
                *stats.fallback_count.entry(reason.to_string()).or_default() += 1;
            }
            Outcome::Solved { rel_error, fallback: None } => {
                stats.regular_count += 1;
                stats.accepted_count += 1;
                if stats.worst_index.is_none() || rel_error > stats.max_rel_error {
                    stats.max_rel_error = rel_error;
                    stats.worst_index = Some(i);
                    stats.worst_seed = Some(instance_seed(opts.seed, i));
                }
                if rel_error.is_nan() || rel_error > bound {
                    stats.silent_failures += 1;
                }
                errors.push(rel_error);
            }
        }
    }
    errors.sort_by(f64::total_cmp);
    stats.median_rel_error = percentile(&errors, 0.5);
    stats.p99_rel_error = percentile(&errors, 0.99);
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(workers: usize) -> BatchOptions {
        BatchOptions {
            seed: 7,
            trials: 500,
            scale: 10.0,
            near_degenerate: false,
            workers,
            config: SolverConfig::default(),
        }
    }

    #[test]
    fn percentile_nearest_rank() {
        let data = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(percentile(&data, 0.5), 2.0);
        assert_eq!(percentile(&data, 0.99), 4.0);
        assert_eq!(percentile(&[], 0.5), 0.0);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = run_batch(&opts(1)).unwrap().to_json();
        let four = run_batch(&opts(4)).unwrap().to_json();
        assert_eq!(one, four);
    }

    #[test]
    fn regular_stream_passes() {
        let stats = run_batch(&opts(2)).unwrap();
        assert!(stats.passed(), "{}", stats.to_json());
        assert_eq!(stats.accepted_count, 500);
        assert!(stats.max_rel_error <= POLISHED_BOUND);
    }

    #[test]
    fn near_degenerate_stream_has_no_silent_failures() {
        let stats = run_batch(&BatchOptions {
            near_degenerate: true,
            trials: 2000,
            ..opts(2)
        })
        .unwrap();
        assert_eq!(stats.silent_failures, 0, "{}", stats.to_json());
        assert!(!stats.degenerate_count.is_empty());
        assert!(stats.passed());
    }
}
