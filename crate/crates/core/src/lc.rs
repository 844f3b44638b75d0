//! The line-circle construction.
//!
//! For `x^2 + c1 x + c2 = (x - r1)(x - r2)` with distinct nonzero roots not
//! collinear with the origin, the roots lie on the line
//! `L1 = p1 + t·e^{iθ}` with `p1 = -c1/2` and `θ = arg(c1²/4 - c2)/2`, and
//! on the circle `C = c2 / L1`, which passes through the origin. The roots
//! are recovered as the two intersections of `L1` and `C`.

use std::f64::consts::PI;
use std::fmt;

use crate::cgeom::{self, Circle, ParametricLine};
use crate::config::{SolverConfig, Tolerances};
use crate::error::{LcError, Result};
use crate::oracle::{self, MatchResult};
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoefficients {
    pub c1: Complex,
    pub c2: Complex,
}

impl QuadraticCoefficients {
    pub fn new(c1: Complex, c2: Complex) -> Result<Self> {
        if !cgeom::is_finite(c1) || !cgeom::is_finite(c2) {
            return Err(LcError::NonFinite("coefficients"));
        }
        Ok(Self { c1, c2 })
    }

    /// Monic quadratic with the given roots.
    pub fn from_roots(r1: Complex, r2: Complex) -> Result<Self> {
        Self::new(-(r1 + r2), r1 * r2)
    }

    /// Degeneracy scale `max(|c1|², |c2|, 1)`.
    pub fn scale(&self) -> f64 {
        self.c1.norm_sqr().max(self.c2.norm()).max(1.0)
    }

    pub fn midpoint(&self) -> Complex {
        -self.c1 / 2.0
    }

    /// `c1²/4 - c2`, which equals `(r1 - r2)²/4`.
    pub fn half_discriminant(&self) -> Complex {
        self.c1 * self.c1 / 4.0 - self.c2
    }
}

/// Which LC precondition, if any, an input violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegeneracyClass {
    Regular,
    DoubleRoot,
    ZeroRoot,
    LineThroughOrigin,
}

impl DegeneracyClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Regular => "Regular",
            Self::DoubleRoot => "DoubleRoot",
            Self::ZeroRoot => "ZeroRoot",
            Self::LineThroughOrigin => "LineThroughOrigin",
        }
    }
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All the geometry built from `(c1, c2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcConstruction {
    /// Fixed point of the line, `-c1/2`.
    pub p1: Complex,
    /// Direction of the half-line from `p1²` through `c2`: `c2 - p1²`.
    pub v_d: Complex,
    /// Inclination of `L1`, in `(-π/2, π/2]`.
    pub theta_star: f64,
    pub line: ParametricLine,
    /// `c2 / p1`, the image of `t = 0`.
    pub w1: Complex,
    /// `c2 / (p1 + v)`, the image of `t = 1`.
    pub w2: Complex,
    pub circle: Circle,
}

/// Why a solve returned the oracle roots instead of the geometric ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FallbackReason {
    /// The circle fit found `{0, w1, w2}` collinear although the
    /// classifier accepted the input.
    CollinearCircleFit,
    /// A root residual exceeded `tol.root · max(|c2|, 1)`.
    ResidualBound,
    /// The geometric roots disagreed with the oracle by more than `tol.agreement`.
    OracleDisagreement,
}

impl FallbackReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::CollinearCircleFit => "CollinearCircleFit",
            Self::ResidualBound => "ResidualBound",
            Self::OracleDisagreement => "OracleDisagreement",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub coeffs: QuadraticCoefficients,
    /// Returned roots, ordered by ascending line parameter.
    pub r1: Complex,
    pub r2: Complex,
    pub residual1: f64,
    pub residual2: f64,
    /// Absent only when the circle fit failed.
    pub construction: Option<LcConstruction>,
    /// Line parameters of the two intersections.
    pub intersection_t: Option<[f64; 2]>,
    /// Geometric roots (after polish, if enabled), before any fallback.
    pub lc_roots: Option<(Complex, Complex)>,
    pub oracle_roots: (Complex, Complex),
    /// `lc_roots` against `oracle_roots`.
    pub oracle_match: Option<MatchResult>,
    pub polished: bool,
    pub fallback: Option<FallbackReason>,
}

impl RootReport {
    pub fn roots(&self) -> (Complex, Complex) {
        (self.r1, self.r2)
    }
}

pub fn classify(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> DegeneracyClass {
    classify_with(coeffs, tol, oracle::quadratic_formula(coeffs))
}

fn classify_with(
    coeffs: &QuadraticCoefficients,
    tol: &Tolerances,
    (r1, r2): (Complex, Complex),
) -> DegeneracyClass {
    let s = coeffs.scale();
    if coeffs.half_discriminant().norm() <= tol.degenerate * s {
        return DegeneracyClass::DoubleRoot;
    }
    if coeffs.c2.norm() <= tol.degenerate * s {
        return DegeneracyClass::ZeroRoot;
    }
    if coeffs.midpoint().norm() <= tol.degenerate * s.sqrt() {
        return DegeneracyClass::LineThroughOrigin;
    }
    if r1.norm() == 0.0 {
        return DegeneracyClass::ZeroRoot;
    }
    let ratio = r2 / r1;
    if ratio.im.abs() <= tol.degenerate * ratio.norm() {
        return DegeneracyClass::LineThroughOrigin;
    }
    DegeneracyClass::Regular
}

/// Inclination `arg(c1²/4 - c2) / 2` in `(-π/2, π/2]`.
pub fn compute_theta(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> Result<f64> {
    let hd = coeffs.half_discriminant();
    if hd.norm() <= tol.degenerate * coeffs.scale() {
        return Err(LcError::DoubleRootDegenerate);
    }
    Ok(cgeom::argument(hd)? / 2.0)
}

fn require_regular(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> Result<()> {
    match classify(coeffs, tol) {
        DegeneracyClass::Regular => Ok(()),
        class => Err(LcError::DegenerateInput(class)),
    }
}

pub fn build_construction(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> Result<LcConstruction> {
    require_regular(coeffs, tol)?;
    construct(coeffs, tol)
}

fn construct(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> Result<LcConstruction> {
    let p1 = coeffs.midpoint();
    let v_d = coeffs.c2 - p1 * p1;
    let theta_star = compute_theta(coeffs, tol)?;
    let line = ParametricLine::with_angle(p1, theta_star)?;
    let w1 = coeffs.c2 / p1;
    let w2 = coeffs.c2 / line.point_at(1.0);
    let circle = cgeom::circle_through_origin(w1, w2, tol)?;
    Ok(LcConstruction {
        p1,
        v_d,
        theta_star,
        line,
        w1,
        w2,
        circle,
    })
}

/// Up to two Newton steps on the polynomial, each kept only if it lowers the residual.
pub fn newton_polish(coeffs: &QuadraticCoefficients, root: Complex) -> Complex {
    let mut r = root;
    let mut res = oracle::residual(coeffs, r);
    for _ in 0..2 {
        if res == 0.0 {
            break;
        }
        let slope = 2.0 * r + coeffs.c1;
        if slope.norm() == 0.0 {
            break;
        }
        let next = r - ((r + coeffs.c1) * r + coeffs.c2) / slope;
        let next_res = oracle::residual(coeffs, next);
        if next_res >= res || next_res.is_nan() {
            break;
        }
        r = next;
        res = next_res;
    }
    r
}

/// Solves by line-circle intersection.
///
/// Non-regular inputs are rejected with [`LcError::DegenerateInput`]. If a
/// regular input still yields a collinear circle fit, or the geometric roots
/// fail the residual bound or disagree with the oracle, the oracle roots are
/// returned and [`RootReport::fallback`] records why.
pub fn solve(coeffs: &QuadraticCoefficients, config: &SolverConfig) -> Result<RootReport> {
    let tol = &config.tol;
    let oracle_roots = oracle::quadratic_formula(coeffs);
    let class = classify_with(coeffs, tol, oracle_roots);
    if class != DegeneracyClass::Regular {
        return Err(LcError::DegenerateInput(class));
    }
    let residuals = |(a, b): (Complex, Complex)| (oracle::residual(coeffs, a), oracle::residual(coeffs, b));

    let construction = match construct(coeffs, tol) {
        Ok(c) => c,
        Err(LcError::CollinearPoints) => {
            let (residual1, residual2) = residuals(oracle_roots);
            return Ok(RootReport {
                coeffs: *coeffs,
                r1: oracle_roots.0,
                r2: oracle_roots.1,
                residual1,
                residual2,
                construction: None,
                intersection_t: None,
                lc_roots: None,
                oracle_roots,
                oracle_match: None,
                polished: false,
                fallback: Some(FallbackReason::CollinearCircleFit),
            });
        }
        Err(e) => return Err(e),
    };

    let hits = cgeom::intersect_line_circle(&construction.line, &construction.circle, tol);
    if hits.len() != 2 {
        return Err(LcError::NoIntersection { found: hits.len() });
    }
    let mut lc = (hits[0].point, hits[1].point);
    if config.polish {
        lc = (newton_polish(coeffs, lc.0), newton_polish(coeffs, lc.1));
    }
    let lc_residuals = residuals(lc);
    let matched = oracle::match_roots(lc, oracle_roots);

    let bound = tol.root * coeffs.c2.norm().max(1.0);
    let fallback = if lc_residuals.0 > bound || lc_residuals.1 > bound {
        Some(FallbackReason::ResidualBound)
    } else if matched.max_rel_error > tol.agreement {
        Some(FallbackReason::OracleDisagreement)
    } else {
        None
    };

    let (roots, (residual1, residual2)) = match fallback {
        None => (lc, lc_residuals),
        Some(_) => {
            let line = &construction.line;
            let ordered = if line.project(oracle_roots.0) <= line.project(oracle_roots.1) {
                oracle_roots
            } else {
                (oracle_roots.1, oracle_roots.0)
            };
            (ordered, residuals(ordered))
        }
    };

    Ok(RootReport {
        coeffs: *coeffs,
        r1: roots.0,
        r2: roots.1,
        residual1,
        residual2,
        construction: Some(construction),
        intersection_t: Some([hits[0].t, hits[1].t]),
        lc_roots: Some(lc),
        oracle_roots,
        oracle_match: Some(matched),
        polished: config.polish,
        fallback,
    })
}

/// Reduces an angle modulo π into `(-π/2, π/2]`.
pub fn reduce_mod_pi(angle: f64) -> f64 {
    let mut r = angle - PI * (angle / PI).round();
    if r <= -PI / 2.0 {
        r += PI;
    } else if r > PI / 2.0 {
        r -= PI;
    }
    r
}

/// Distance between two line inclinations, modulo π.
pub fn angle_distance_mod_pi(a: f64, b: f64) -> f64 {
    reduce_mod_pi(a - b).abs()
}

/// Internal bisector of the angle `0 p1 w1` at vertex `p1`, as a unit
/// vector oriented along `u1 + u2` where `u1`, `u2` are the unit vectors
/// from `p1` towards `0` and `w1`.
pub fn bisector_direction(p1: Complex, w1: Complex) -> Result<Complex> {
    let to_origin = -p1;
    let to_w1 = w1 - p1;
    if to_origin.norm() == 0.0 || to_w1.norm() == 0.0 {
        return Err(LcError::BisectorUndefined);
    }
    let u1 = to_origin / to_origin.norm();
    let u2 = to_w1 / to_w1.norm();
    let sum = u1 + u2;
    let diff = u1 - u2;
    // Near a straight angle the sum loses all precision; i·(u1 - u2) is
    // parallel to it and well conditioned there.
    let raw = if sum.norm() >= diff.norm() {
        sum
    } else {
        let perp = Complex::i() * diff;
        if (sum.conj() * perp).re < 0.0 {
            -perp
        } else {
            perp
        }
    };
    Ok(raw / raw.norm())
}

/// Line inclination recovered by bisecting the angle `0 p1 (c2/p1)`.
pub fn theta_via_bisection(coeffs: &QuadraticCoefficients, tol: &Tolerances) -> Result<f64> {
    require_regular(coeffs, tol)?;
    let p1 = coeffs.midpoint();
    let bisector = bisector_direction(p1, coeffs.c2 / p1)?;
    Ok(reduce_mod_pi(cgeom::argument(bisector)?))
}
