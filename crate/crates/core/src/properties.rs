//! Numerical checks of the construction's geometric properties and a
//! seeded generator of admissible instances.
//!
//! * The map `z -> b/z` sends a line missing the origin onto a circle that
//!   passes through the origin ([`verify_mobius_line_to_circle`]).
//! * The triangles `0 p1 r1` and `r1 p1 (c2/p1)` are similar with ratio
//!   `|r1 + r2| / |r1 - r2|`, so `p1 -> r1` bisects the angle
//!   `0 p1 (c2/p1)` ([`verify_triangle_similarity`]).

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cgeom::{self, Circle, ParametricLine};
use crate::config::{SolverConfig, Tolerances};
use crate::error::{LcError, Result};
use crate::lc::{self, DegeneracyClass, QuadraticCoefficients};
use crate::Complex;

/// Bound on ratio and angle disagreement in the similarity check.
pub const SIMILARITY_TOLERANCE: f64 = 1e-10;

/// Resample cap for the instance generators.
pub const MAX_RESAMPLES: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusReport {
    /// Circle through the origin and the images of `t = 0` and `t = 1`.
    pub fitted_circle: Circle,
    /// Worst `| |b/z - center| - radius | / radius` over the samples.
    pub max_radial_residual: f64,
    /// `| |center| - radius | / radius` for a circle fitted through three
    /// image points without assuming it contains the origin.
    pub origin_gap: f64,
    /// `max |b/z|` at `t = ±t_max`.
    pub tail_magnitude: f64,
    pub sample_count: usize,
}

/// Sample parameters on `[-t_max, t_max]`, evenly spaced in `atan(t)` so
/// both the far tails and the neighbourhood of the fixed point are covered.
pub fn tangent_spaced_parameters(sample_count: usize, t_max: f64) -> Vec<f64> {
    let limit = t_max.atan();
    let last = (sample_count - 1) as f64;
    (0..sample_count)
        .map(|k| match k {
            0 => -t_max,
            k if k == sample_count - 1 => t_max,
            k => (-limit + 2.0 * limit * k as f64 / last).tan(),
        })
        .collect()
}

/// Circle through three arbitrary points, by translating `a` to the origin.
fn circle_through_three(a: Complex, b: Complex, c: Complex, tol: &Tolerances) -> Result<Circle> {
    let local = cgeom::circle_through_origin(b - a, c - a, tol)?;
    Ok(Circle {
        center: local.center + a,
        radius: local.radius,
    })
}

/// Samples the image of `line` under `z -> b/z` and measures how well it
/// fits a circle through the origin.
pub fn verify_mobius_line_to_circle(
    b: Complex,
    line: &ParametricLine,
    sample_count: usize,
    t_max: f64,
    tol: &Tolerances,
) -> Result<MobiusReport> {
    if b.norm() == 0.0 {
        return Err(LcError::ZeroMultiplier);
    }
    if sample_count < 3 {
        return Err(LcError::InvalidArgument("sample_count must be at least 3"));
    }
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(LcError::InvalidArgument("t_max must be positive"));
    }
    let origin_distance = line.distance_to(Complex::new(0.0, 0.0));
    if origin_distance <= 1e-9 * line.fixed_point.norm() {
        return Err(LcError::CollinearPoints);
    }
    let image = |t: f64| b / line.point_at(t);

    let fitted_circle = cgeom::circle_through_origin(image(0.0), image(1.0), tol)?;
    let radius = fitted_circle.radius;

    let max_radial_residual = tangent_spaced_parameters(sample_count, t_max)
        .into_iter()
        .map(|t| fitted_circle.radial_residual(image(t)) / radius)
        .fold(0.0, f64::max);

    // Images of foot and foot ± distance are a quarter turn apart on the circle.
    let foot = line.project(Complex::new(0.0, 0.0));
    let independent = circle_through_three(
        image(foot - origin_distance),
        image(foot),
        image(foot + origin_distance),
        tol,
    )?;
    let origin_gap = independent.origin_gap() / independent.radius;

    let tail_magnitude = image(-t_max).norm().max(image(t_max).norm());

    Ok(MobiusReport {
        fitted_circle,
        max_radial_residual,
        origin_gap,
        tail_magnitude,
        sample_count,
    })
}

/// Which root the similarity check was evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimilarityRoot {
    /// The root the bisector ray from `p1` points toward.
    BisectorRoot,
    /// The other root, used when the bisector root failed the check.
    OtherRoot,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    /// `|0 p1| / |r1 p1|`
    pub ratio_a: f64,
    /// `|p1 r1| / |p1 (c2/p1)|`
    pub ratio_b: f64,
    /// `|0 r1| / |r1 (c2/p1)|`
    pub ratio_c: f64,
    /// `|r1 + r2| / |r1 - r2|`
    pub expected_ratio: f64,
    /// Angle `0 p1 r1`.
    pub angle_left: f64,
    /// Angle `r1 p1 (c2/p1)`.
    pub angle_right: f64,
    pub r1: Complex,
    pub root_used: SimilarityRoot,
}

impl SimilarityReport {
    /// Worst relative deviation of the three side ratios from the expected one.
    pub fn max_ratio_error(&self) -> f64 {
        [self.ratio_a, self.ratio_b, self.ratio_c]
            .iter()
            .map(|r| (r - self.expected_ratio).abs() / self.expected_ratio)
            .fold(0.0, f64::max)
    }

    pub fn angle_error(&self) -> f64 {
        (self.angle_left - self.angle_right).abs()
    }

    pub fn holds(&self) -> bool {
        self.max_ratio_error() <= SIMILARITY_TOLERANCE && self.angle_error() <= SIMILARITY_TOLERANCE
    }
}

/// Unsigned angle between `a` and `b`.
fn angle_between(a: Complex, b: Complex) -> f64 {
    let z = a.conj() * b;
    z.im.abs().atan2(z.re)
}

fn similarity_for(p1: Complex, w1: Complex, r1: Complex, r2: Complex, root_used: SimilarityRoot) -> SimilarityReport {
    let origin = Complex::new(0.0, 0.0);
    let dist = |a: Complex, b: Complex| (a - b).norm();
    SimilarityReport {
        ratio_a: dist(origin, p1) / dist(r1, p1),
        ratio_b: dist(p1, r1) / dist(p1, w1),
        ratio_c: dist(origin, r1) / dist(r1, w1),
        expected_ratio: (r1 + r2).norm() / (r1 - r2).norm(),
        angle_left: angle_between(origin - p1, r1 - p1),
        angle_right: angle_between(r1 - p1, w1 - p1),
        r1,
        root_used,
    }
}

/// Checks that `0 p1 r1` and `r1 p1 (c2/p1)` are similar triangles.
pub fn verify_triangle_similarity(coeffs: &QuadraticCoefficients, config: &SolverConfig) -> Result<SimilarityReport> {
    let report = lc::solve(coeffs, config)?;
    let p1 = coeffs.midpoint();
    let w1 = coeffs.c2 / p1;
    let bisector = lc::bisector_direction(p1, w1)?;
    let ahead = |r: Complex| (bisector.conj() * (r - p1)).re;
    let (first, second) = if ahead(report.r1) >= ahead(report.r2) {
        (report.r1, report.r2)
    } else {
        (report.r2, report.r1)
    };
    let primary = similarity_for(p1, w1, first, second, SimilarityRoot::BisectorRoot);
    if primary.holds() {
        return Ok(primary);
    }
    let other = similarity_for(p1, w1, second, first, SimilarityRoot::OtherRoot);
    Ok(if other.holds() { other } else { primary })
}

/// Per-index seed for instance streams: a splitmix64 mix of `(seed, index)`.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn uniform_point(rng: &mut ChaCha8Rng, scale: f64) -> Complex {
    Complex::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale))
}

fn check_scale(scale: f64) -> Result<()> {
    if scale > 0.0 && scale.is_finite() {
        Ok(())
    } else {
        Err(LcError::InvalidArgument("scale must be positive"))
    }
}

/// Deterministic admissible instance: two roots uniform in
/// `[-scale, scale]²`, resampled until they are separated from each other,
/// from zero, and from collinearity with the origin.
pub fn random_regular_instance(seed: u64, scale: f64) -> Result<(QuadraticCoefficients, (Complex, Complex))> {
    check_scale(scale)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let margin = 1e-3 * scale;
    let tol = Tolerances::default();
    for _ in 0..MAX_RESAMPLES {
        let r1 = uniform_point(&mut rng, scale);
        let r2 = uniform_point(&mut rng, scale);
        if (r1 - r2).norm() <= margin || r1.norm() <= margin || r2.norm() <= margin {
            continue;
        }
        if (r2 / r1).im.abs() <= 1e-3 {
            continue;
        }
        let coeffs = QuadraticCoefficients::from_roots(r1, r2)?;
        if lc::classify(&coeffs, &tol) == DegeneracyClass::Regular {
            return Ok((coeffs, (r1, r2)));
        }
    }
    Err(LcError::GeneratorExhausted { attempts: MAX_RESAMPLES })
}

/// Deterministic instance placed close to one of the degeneracy boundaries.
///
/// One of four modes is drawn per seed: nearly equal roots, a root near
/// zero, roots nearly collinear with the origin, or a plain uniform pair.
/// Proximity is log-uniform between `1e-9` and `1e-3` (relative to `scale`
/// for distances); the only rejection margin is `1e-9 · scale`. The result
/// is not guaranteed to classify as regular.
pub fn near_degenerate_instance(seed: u64, scale: f64) -> Result<(QuadraticCoefficients, (Complex, Complex))> {
    check_scale(scale)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let margin = 1e-9 * scale;
    for _ in 0..MAX_RESAMPLES {
        let mode = rng.random_range(0..4u8);
        let closeness = 10f64.powf(rng.random_range(-9.0..-3.0));
        let phase = Complex::from_polar(1.0, rng.random_range(-PI..PI));
        let r1 = uniform_point(&mut rng, scale);
        let (r1, r2) = match mode {
            0 => (r1, r1 + phase * (closeness * scale)),
            1 => (phase * (closeness * scale), r1),
            2 => {
                let stretch = rng.random_range(0.1..2.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                let tilt = if rng.random_bool(0.5) { closeness } else { -closeness };
                (r1, r1 * Complex::from_polar(stretch, tilt))
            }
            _ => (r1, uniform_point(&mut rng, scale)),
        };
        if (r1 - r2).norm() <= margin || r1.norm() <= margin || r2.norm() <= margin {
            continue;
        }
        if (r2 / r1).im.abs() <= 1e-9 {
            continue;
        }
        return Ok((QuadraticCoefficients::from_roots(r1, r2)?, (r1, r2)));
    }
    Err(LcError::GeneratorExhausted { attempts: MAX_RESAMPLES })
}
