//! Complex-plane primitives: principal arguments, unit directions, the
//! circle through the origin and two further points, and line-circle
//! intersection.

use std::f64::consts::PI;

use crate::config::Tolerances;
use crate::error::{LcError, Result};
use crate::Complex;

/// Largest accepted deviation of `|direction|` from one.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Trajectory `fixed_point + t·direction` for real `t`, with a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametricLine {
    pub fixed_point: Complex,
    pub direction: Complex,
}

impl ParametricLine {
    pub fn new(fixed_point: Complex, direction: Complex) -> Result<Self> {
        if !is_finite(fixed_point) || !is_finite(direction) {
            return Err(LcError::NonFinite("line"));
        }
        if (direction.norm() - 1.0).abs() > UNIT_TOLERANCE {
            return Err(LcError::InvalidArgument("line direction must be a unit vector"));
        }
        Ok(Self {
            fixed_point,
            direction,
        })
    }

    /// Line through `fixed_point` inclined at `theta` radians.
    pub fn with_angle(fixed_point: Complex, theta: f64) -> Result<Self> {
        Self::new(fixed_point, unit_direction(theta))
    }

    pub fn point_at(&self, t: f64) -> Complex {
        self.fixed_point + self.direction * t
    }

    /// Parameter of the orthogonal projection of `z` onto the line.
    pub fn project(&self, z: Complex) -> f64 {
        (self.direction.conj() * (z - self.fixed_point)).re
    }

    /// Perpendicular distance from `z` to the line.
    pub fn distance_to(&self, z: Complex) -> f64 {
        (self.direction.conj() * (z - self.fixed_point)).im.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Complex,
    pub radius: f64,
}

impl Circle {
    /// Absolute distance of `z` from the circumference.
    pub fn radial_residual(&self, z: Complex) -> f64 {
        ((z - self.center).norm() - self.radius).abs()
    }

    /// `| |center| - radius |`: zero exactly when the circle passes through 0.
    pub fn origin_gap(&self) -> f64 {
        (self.center.norm() - self.radius).abs()
    }
}

/// A point where a line meets a circle, with its line parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Intersection {
    pub t: f64,
    pub point: Complex,
}

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Principal argument of `z` in `(-π, π]`.
pub fn argument(z: Complex) -> Result<f64> {
    if !is_finite(z) {
        return Err(LcError::NonFinite("argument"));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(LcError::ZeroArgument);
    }
    let a = z.im.atan2(z.re);
    // atan2 yields -π for a negative real with negative-zero imaginary part.
    Ok(if a == -PI { PI } else { a })
}

/// `cos θ + i sin θ`.
pub fn unit_direction(theta: f64) -> Complex {
    let (sin, cos) = theta.sin_cos();
    Complex::new(cos, sin)
}

/// Circle through `0`, `w1` and `w2`.
///
/// The center `h + ik` solves
///
/// ```text
/// 2 x1 h + 2 y1 k = x1² + y1²
/// 2 x2 h + 2 y2 k = x2² + y2²
/// ```
///
/// and the radius is `|center|`, the distance to the origin. Fails with
/// [`LcError::CollinearPoints`] when `|x1 y2 - x2 y1| <= tol.collinear · |w1|·|w2|`,
/// which covers coincident or zero inputs as well.
pub fn circle_through_origin(w1: Complex, w2: Complex, tol: &Tolerances) -> Result<Circle> {
    if !is_finite(w1) || !is_finite(w2) {
        return Err(LcError::NonFinite("circle fit"));
    }
    let (x1, y1) = (w1.re, w1.im);
    let (x2, y2) = (w2.re, w2.im);
    let cross = x1 * y2 - x2 * y1;
    if cross.abs() <= tol.collinear * w1.norm() * w2.norm() {
        return Err(LcError::CollinearPoints);
    }
    let n1 = x1 * x1 + y1 * y1;
    let n2 = x2 * x2 + y2 * y2;
    let denom = 2.0 * x1 * y2 - 2.0 * x2 * y1;
    let h = (-y1 * n2 + y2 * n1) / denom;
    let k = (x1 * n2 - x2 * n1) / denom;
    let center = Complex::new(h, k);
    Ok(Circle {
        center,
        radius: center.norm(),
    })
}

/// Intersections of `line` with `circle`, sorted by ascending parameter.
///
/// Returns no point when the line misses the circle by more than
/// `tol.tangent · radius`, one point when the half-chord is at most
/// `tol.tangent · radius`, two otherwise.
pub fn intersect_line_circle(
    line: &ParametricLine,
    circle: &Circle,
    tol: &Tolerances,
) -> Vec<Intersection> {
    let radius = circle.radius;
    let t0 = line.project(circle.center);
    let foot = line.point_at(t0);
    let d = (circle.center - foot).norm();
    if d > radius * (1.0 + tol.tangent) {
        return Vec::new();
    }
    let h = ((radius - d) * (radius + d)).max(0.0).sqrt();
    if h <= tol.tangent * radius {
        return vec![Intersection { t: t0, point: foot }];
    }
    [t0 - h, t0 + h]
        .into_iter()
        .map(|t| Intersection {
            t,
            point: line.point_at(t),
        })
        .collect()
}
