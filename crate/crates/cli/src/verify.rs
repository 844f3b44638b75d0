//! `verify`: runs the Möbius, triangle-similarity and bisection checks over
//! a seeded stream of admissible instances.

use std::fmt::Write as _;

use lc_core::lc::{self, angle_distance_mod_pi};
use lc_core::properties::{
    instance_seed, random_regular_instance, verify_mobius_line_to_circle, verify_triangle_similarity, SimilarityRoot,
};
use lc_core::{LcError, SolverConfig};
use rayon::prelude::*;

pub const MOBIUS_SAMPLES: usize = 100;
pub const MOBIUS_T_MAX: f64 = 1e4;
pub const MOBIUS_RESIDUAL_BOUND: f64 = 1e-9;
pub const ORIGIN_GAP_BOUND: f64 = 1e-12;
pub const RATIO_BOUND: f64 = 1e-10;
pub const ANGLE_BOUND: f64 = 1e-10;
pub const THETA_BOUND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialMeasures {
    pub mobius_residual: f64,
    pub origin_gap: f64,
    pub ratio_error: f64,
    pub angle_error: f64,
    pub theta_gap: f64,
    pub other_root: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyFailure {
    pub index: u64,
    pub seed: u64,
    pub check: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifySummary {
    pub trials: u64,
    pub worst_mobius_residual: f64,
    pub worst_origin_gap: f64,
    pub worst_ratio_error: f64,
    pub worst_angle_error: f64,
    pub worst_theta_gap: f64,
    pub other_root_count: u64,
    pub failures: Vec<VerifyFailure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn measure_trial(seed: u64, scale: f64, config: &SolverConfig) -> Result<TrialMeasures, LcError> {
    let tol = &config.tol;
    let (coeffs, _) = random_regular_instance(seed, scale)?;
    let k = lc::build_construction(&coeffs, tol)?;
    let mobius = verify_mobius_line_to_circle(coeffs.c2, &k.line, MOBIUS_SAMPLES, MOBIUS_T_MAX, tol)?;
    let similarity = verify_triangle_similarity(&coeffs, config)?;
    let theta = lc::compute_theta(&coeffs, tol)?;
    let bisected = lc::theta_via_bisection(&coeffs, tol)?;
    Ok(TrialMeasures {
        mobius_residual: mobius.max_radial_residual,
        origin_gap: mobius.origin_gap,
        ratio_error: similarity.max_ratio_error(),
        angle_error: similarity.angle_error(),
        theta_gap: angle_distance_mod_pi(theta, bisected),
        other_root: similarity.root_used == SimilarityRoot::OtherRoot,
    })
}

pub fn run_verify(seed: u64, trials: u64, scale: f64, config: &SolverConfig) -> VerifySummary {
    let results: Vec<(u64, u64, Result<TrialMeasures, LcError>)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            (i, s, measure_trial(s, scale, config))
        })
        .collect();

    let mut summary = VerifySummary {
        trials,
        ..Default::default()
    };
    for (index, seed, result) in results {
        let mut fail = |check: &str, value: f64| {
            summary.failures.push(VerifyFailure {
                index,
                seed,
                check: check.to_string(),
                value,
            })
        };
        let m = match result {
            Ok(m) => m,
            Err(e) => {
                fail(&format!("error: {e}"), f64::NAN);
                continue;
            }
        };
        for (name, value, bound) in [
            ("mobius_radial_residual", m.mobius_residual, MOBIUS_RESIDUAL_BOUND),
            ("origin_gap", m.origin_gap, ORIGIN_GAP_BOUND),
            ("similarity_ratio", m.ratio_error, RATIO_BOUND),
            ("similarity_angle", m.angle_error, ANGLE_BOUND),
            ("bisection_theta", m.theta_gap, THETA_BOUND),
        ] {
            if value.is_nan() || value > bound {
                fail(name, value);
            }
        }
        summary.worst_mobius_residual = summary.worst_mobius_residual.max(m.mobius_residual);
        summary.worst_origin_gap = summary.worst_origin_gap.max(m.origin_gap);
        summary.worst_ratio_error = summary.worst_ratio_error.max(m.ratio_error);
        summary.worst_angle_error = summary.worst_angle_error.max(m.angle_error);
        summary.worst_theta_gap = summary.worst_theta_gap.max(m.theta_gap);
        summary.other_root_count += u64::from(m.other_root);
    }
    summary
}

pub fn render_summary(seed: u64, summary: &VerifySummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "seed {seed}, trials {}", summary.trials);
    let rows = [
        ("mobius radial residual", summary.worst_mobius_residual, MOBIUS_RESIDUAL_BOUND),
        ("circle origin gap", summary.worst_origin_gap, ORIGIN_GAP_BOUND),
        ("similarity ratio error", summary.worst_ratio_error, RATIO_BOUND),
        ("similarity angle error", summary.worst_angle_error, ANGLE_BOUND),
        ("bisection theta gap", summary.worst_theta_gap, THETA_BOUND),
    ];
    for (name, worst, bound) in rows {
        let _ = writeln!(s, "{name:<24} worst {worst:.3e}  bound {bound:.0e}");
    }
    let _ = writeln!(s, "similarity on other root {}", summary.other_root_count);
    if summary.passed() {
        let _ = writeln!(s, "PASS");
    } else {
        let _ = writeln!(s, "FAIL ({} failures)", summary.failures.len());
        for f in &summary.failures {
            let _ = writeln!(s, "  trial {} seed {}: {} = {:e}", f.index, f.seed, f.check, f.value);
        }
    }
    s
}
