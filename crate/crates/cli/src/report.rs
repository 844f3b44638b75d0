//! Serialized solve reports (JSON) and the human-readable table.

use std::fmt::Write as _;

use lc_core::lc::{self, RootReport};
use lc_core::oracle::{self, MatchResult, Pairing};
use lc_core::{Complex, DegeneracyClass, LcConstruction, QuadraticCoefficients, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::literal::format_complex;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexJson {
    fn from(z: Complex) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex {
    fn from(z: ComplexJson) -> Self {
        Complex::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputJson {
    pub c1: ComplexJson,
    pub c2: ComplexJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineJson {
    pub fixed_point: ComplexJson,
    pub direction: ComplexJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleJson {
    pub center: ComplexJson,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionJson {
    pub p1: ComplexJson,
    pub v_d: ComplexJson,
    /// Radians.
    pub theta_star: f64,
    pub line: LineJson,
    pub w1: ComplexJson,
    pub w2: ComplexJson,
    pub circle: CircleJson,
}

impl From<&LcConstruction> for ConstructionJson {
    fn from(k: &LcConstruction) -> Self {
        Self {
            p1: k.p1.into(),
            v_d: k.v_d.into(),
            theta_star: k.theta_star,
            line: LineJson {
                fixed_point: k.line.fixed_point.into(),
                direction: k.line.direction.into(),
            },
            w1: k.w1.into(),
            w2: k.w2.into(),
            circle: CircleJson {
                center: k.circle.center.into(),
                radius: k.circle.radius,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub value: ComplexJson,
    /// `|r^2 + c1 r + c2|`
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchJson {
    pub pairing: String,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
}

impl From<&MatchResult> for MatchJson {
    fn from(m: &MatchResult) -> Self {
        Self {
            pairing: match m.pairing {
                Pairing::Direct => "direct",
                Pairing::Crossed => "crossed",
            }
            .to_string(),
            max_abs_error: m.max_abs_error,
            max_rel_error: m.max_rel_error,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagsJson {
    pub polish_applied: bool,
    pub fallback_used: bool,
    pub fallback_reason: Option<String>,
}

/// Stable JSON document printed by `solve --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub input: InputJson,
    pub class: String,
    pub construction: Option<ConstructionJson>,
    /// Line parameters of the two intersections.
    pub intersection_t: Option<[f64; 2]>,
    pub roots: Option<[RootJson; 2]>,
    pub lc_roots: Option<[ComplexJson; 2]>,
    pub oracle_roots: [ComplexJson; 2],
    #[serde(rename = "match")]
    pub match_result: Option<MatchJson>,
    pub flags: FlagsJson,
    pub error: Option<String>,
}

impl SolveReport {
    fn base(coeffs: &QuadraticCoefficients, class: DegeneracyClass, oracle_roots: (Complex, Complex)) -> Self {
        Self {
            input: InputJson {
                c1: coeffs.c1.into(),
                c2: coeffs.c2.into(),
            },
            class: class.to_string(),
            construction: None,
            intersection_t: None,
            roots: None,
            lc_roots: None,
            oracle_roots: [oracle_roots.0.into(), oracle_roots.1.into()],
            match_result: None,
            flags: FlagsJson {
                polish_applied: false,
                fallback_used: false,
                fallback_reason: None,
            },
            error: None,
        }
    }

    pub fn from_root_report(report: &RootReport) -> Self {
        let mut out = Self::base(&report.coeffs, DegeneracyClass::Regular, report.oracle_roots);
        out.construction = report.construction.as_ref().map(ConstructionJson::from);
        out.intersection_t = report.intersection_t;
        out.roots = Some([
            RootJson {
                value: report.r1.into(),
                residual: report.residual1,
            },
            RootJson {
                value: report.r2.into(),
                residual: report.residual2,
            },
        ]);
        out.lc_roots = report.lc_roots.map(|(a, b)| [a.into(), b.into()]);
        out.match_result = report.oracle_match.as_ref().map(MatchJson::from);
        out.flags = FlagsJson {
            polish_applied: report.polished,
            fallback_used: report.fallback.is_some(),
            fallback_reason: report.fallback.map(|r| r.as_str().to_string()),
        };
        out
    }

    /// Report for an input the LC method refused; the oracle roots are still given.
    pub fn failed(coeffs: &QuadraticCoefficients, class: DegeneracyClass, error: &lc_core::LcError) -> Self {
        let mut out = Self::base(coeffs, class, oracle::quadratic_formula(coeffs));
        out.error = Some(error.to_string());
        out
    }
}

/// Outcome of a single solve, as reported by the CLI.
pub struct SolveOutcome {
    pub report: SolveReport,
    pub exit_code: i32,
}

pub fn run_solve(coeffs: &QuadraticCoefficients, config: &SolverConfig) -> SolveOutcome {
    match lc::solve(coeffs, config) {
        Ok(r) => SolveOutcome {
            report: SolveReport::from_root_report(&r),
            exit_code: 0,
        },
        Err(e @ lc_core::LcError::DegenerateInput(class)) => SolveOutcome {
            report: SolveReport::failed(coeffs, class, &e),
            exit_code: 2,
        },
        Err(e) => SolveOutcome {
            report: SolveReport::failed(coeffs, lc::classify(coeffs, &config.tol), &e),
            exit_code: 1,
        },
    }
}

/// `11°18'35.757"`
pub fn format_dms(radians: f64) -> String {
    let degrees = radians.to_degrees();
    let sign = if degrees < 0.0 { "-" } else { "" };
    let millis = (degrees.abs() * 3_600_000.0).round() as u64;
    let (d, rest) = (millis / 3_600_000, millis % 3_600_000);
    let (m, ms) = (rest / 60_000, rest % 60_000);
    format!("{sign}{d}°{m}'{}.{:03}\"", ms / 1000, ms % 1000)
}

pub fn render_table(report: &SolveReport) -> String {
    let z = |c: &ComplexJson| format_complex(Complex::from(*c));
    let mut s = String::new();
    let _ = writeln!(s, "equation     x^2 + ({})x + ({}) = 0", z(&report.input.c1), z(&report.input.c2));
    let _ = writeln!(s, "class        {}", report.class);
    if let Some(k) = &report.construction {
        let _ = writeln!(s, "theta*       {} rad = {}", k.theta_star, format_dms(k.theta_star));
        let _ = writeln!(s, "p1           {}", z(&k.p1));
        let _ = writeln!(s, "v_d          {}", z(&k.v_d));
        let _ = writeln!(s, "direction    {}", z(&k.line.direction));
        let _ = writeln!(s, "w1 = c2/p1   {}", z(&k.w1));
        let _ = writeln!(s, "w2           {}", z(&k.w2));
        let _ = writeln!(s, "center       {}", z(&k.circle.center));
        let _ = writeln!(s, "radius       {}", k.circle.radius);
    }
    if let Some(roots) = &report.roots {
        for (i, r) in roots.iter().enumerate() {
            let _ = writeln!(s, "r{}           {}   residual {:e}", i + 1, z(&r.value), r.residual);
        }
    }
    let _ = writeln!(
        s,
        "oracle       {}, {}",
        z(&report.oracle_roots[0]),
        z(&report.oracle_roots[1])
    );
    if let Some(m) = &report.match_result {
        let _ = writeln!(s, "deviation    abs {:e}, rel {:e}", m.max_abs_error, m.max_rel_error);
    }
    let _ = writeln!(
        s,
        "flags        polish={} fallback={}",
        report.flags.polish_applied,
        report.flags.fallback_reason.as_deref().unwrap_or("none")
    );
    if let Some(e) = &report.error {
        let _ = writeln!(s, "error        {e}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> QuadraticCoefficients {
        QuadraticCoefficients::new(Complex::new(-1.0, -7.0), Complex::new(-18.0, 1.0)).unwrap()
    }

    #[test]
    fn dms_matches_worked_example() {
        let theta = 2.5f64.atan2(6.0) / 2.0;
        assert_eq!(format_dms(theta), "11°18'35.757\"");
        assert_eq!(format_dms(0.0), "0°0'0.000\"");
        assert_eq!(format_dms(-std::f64::consts::FRAC_PI_2), "-90°0'0.000\"");
    }

    #[test]
    fn json_round_trip_is_exact() {
        let out = run_solve(&worked(), &SolverConfig::default());
        let text = serde_json::to_string(&out.report).unwrap();
        let back: SolveReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out.report);
        let k = back.construction.unwrap();
        let original = out.report.construction.unwrap();
        assert_eq!(k.theta_star.to_bits(), original.theta_star.to_bits());
        assert_eq!(k.circle.radius.to_bits(), original.circle.radius.to_bits());
    }

    #[test]
    fn degenerate_report_keeps_oracle_roots() {
        let coeffs = QuadraticCoefficients::new(Complex::new(-2.0, 0.0), Complex::new(1.0, 0.0)).unwrap();
        let out = run_solve(&coeffs, &SolverConfig::default());
        assert_eq!(out.exit_code, 2);
        assert_eq!(out.report.class, "DoubleRoot");
        assert!(out.report.roots.is_none());
        for r in out.report.oracle_roots {
            assert!((Complex::from(r) - Complex::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn table_mentions_angle_in_both_units() {
        let out = run_solve(&worked(), &SolverConfig::default());
        let table = render_table(&out.report);
        assert!(table.contains("11°18'35.75"), "{table}");
        assert!(table.contains("Regular"));
    }
}
