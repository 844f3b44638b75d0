//! Direct quadratic solver used as ground truth, plus root-set matching.

use crate::lc::QuadraticCoefficients;
use crate::Complex;

/// Principal square root with `Re >= 0`. On the negative real axis the
/// result has `Im >= 0` regardless of the sign of the zero imaginary part.
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.im == 0.0 {
        return if z.re >= 0.0 {
            Complex::new(z.re.sqrt(), 0.0)
        } else {
            Complex::new(0.0, (-z.re).sqrt())
        };
    }
    let t = ((z.norm() + z.re.abs()) / 2.0).sqrt();
    if z.re >= 0.0 {
        Complex::new(t, z.im / (2.0 * t))
    } else {
        Complex::new(z.im.abs() / (2.0 * t), t.copysign(z.im))
    }
}

/// Both roots of `x^2 + c1 x + c2`.
///
/// The larger-magnitude root `q = -(c1 ± d)/2` is taken with the sign that
/// avoids cancellation; the other root follows as `c2 / q`.
pub fn quadratic_formula(coeffs: &QuadraticCoefficients) -> (Complex, Complex) {
    let (c1, c2) = (coeffs.c1, coeffs.c2);
    let d = principal_sqrt(c1 * c1 - 4.0 * c2);
    let plus = c1 + d;
    let minus = c1 - d;
    let big = if plus.norm() >= minus.norm() { plus } else { minus };
    let q = -big / 2.0;
    if q.re == 0.0 && q.im == 0.0 {
        return (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
    }
    (q, c2 / q)
}

/// `|r^2 + c1 r + c2|`, evaluated in Horner form.
pub fn residual(coeffs: &QuadraticCoefficients, r: Complex) -> f64 {
    ((r + coeffs.c1) * r + coeffs.c2).norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// `a1 ↔ b1`, `a2 ↔ b2`.
    Direct,
    /// `a1 ↔ b2`, `a2 ↔ b1`.
    Crossed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchResult {
    pub pairing: Pairing,
    pub max_abs_error: f64,
    /// `max_abs_error / max(|b1|, |b2|, 1)`.
    pub max_rel_error: f64,
}

/// Pairs `a` against reference roots `b`, choosing the assignment with the
/// smaller worst-case deviation.
pub fn match_roots(a: (Complex, Complex), b: (Complex, Complex)) -> MatchResult {
    let direct = (a.0 - b.0).norm().max((a.1 - b.1).norm());
    let crossed = (a.0 - b.1).norm().max((a.1 - b.0).norm());
    let (pairing, max_abs_error) = if crossed < direct {
        (Pairing::Crossed, crossed)
    } else {
        (Pairing::Direct, direct)
    };
    let scale = b.0.norm().max(b.1.norm()).max(1.0);
    MatchResult {
        pairing,
        max_abs_error,
        max_rel_error: max_abs_error / scale,
    }
}
