//! SVG rendering of the LC structure: axes, the line `L1`, the circle `C`
//! and labelled markers for `0`, `p1`, `c2/p1`, both roots and the center.

use std::fmt::Write as _;

use lc_core::lc::{self, RootReport};
use lc_core::{Complex, LcError, QuadraticCoefficients, SolverConfig};

use crate::literal::format_complex;

/// Maps plane coordinates to pixels with one scale factor for both axes and
/// the y axis pointing up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub x_min: f64,
    pub y_max: f64,
    /// Pixels per plane unit.
    pub scale: f64,
    pub width: f64,
    pub height: f64,
}

impl Viewport {
    /// Bounding box of `points` and of the circle, padded by 10% of its
    /// extent on every side.
    pub fn fit(points: &[Complex], center: Complex, radius: f64, width: f64) -> Self {
        let mut x = (center.re - radius, center.re + radius);
        let mut y = (center.im - radius, center.im + radius);
        for p in points {
            x = (x.0.min(p.re), x.1.max(p.re));
            y = (y.0.min(p.im), y.1.max(p.im));
        }
        let (pad_x, pad_y) = (0.1 * (x.1 - x.0), 0.1 * (y.1 - y.0));
        let (x_min, x_max) = (x.0 - pad_x, x.1 + pad_x);
        let (y_min, y_max) = (y.0 - pad_y, y.1 + pad_y);
        let scale = width / (x_max - x_min);
        Self {
            x_min,
            y_max,
            scale,
            width,
            height: (y_max - y_min) * scale,
        }
    }

    pub fn to_pixel(&self, z: Complex) -> (f64, f64) {
        ((z.re - self.x_min) * self.scale, (self.y_max - z.im) * self.scale)
    }

    pub fn to_plane(&self, (px, py): (f64, f64)) -> Complex {
        Complex::new(self.x_min + px / self.scale, self.y_max - py / self.scale)
    }
}

pub struct Figure {
    pub svg: String,
    pub viewport: Viewport,
    pub report: RootReport,
}

fn signed_literal(z: Complex) -> String {
    format_complex(z).replace('-', "\u{2212}")
}

pub fn render_figure(coeffs: &QuadraticCoefficients, config: &SolverConfig, width: u32) -> Result<Figure, LcError> {
    let report = lc::solve(coeffs, config)?;
    // A fallback without a construction has nothing to draw.
    let (Some(k), Some([t1, t2])) = (report.construction, report.intersection_t) else {
        return Err(LcError::CollinearPoints);
    };
    let origin = Complex::new(0.0, 0.0);
    let markers = [
        ("origin", "0", origin),
        ("p1", "p\u{2081}", k.p1),
        ("w1", "c\u{2082}/p\u{2081}", k.w1),
        ("r1", "r\u{2081}", report.r1),
        ("r2", "r\u{2082}", report.r2),
        ("center", "c", k.circle.center),
    ];
    let points: Vec<Complex> = markers.iter().map(|m| m.2).collect();
    let vp = Viewport::fit(&points, k.circle.center, k.circle.radius, f64::from(width));

    let span = t2 - t1;
    let (a, b) = (
        vp.to_pixel(k.line.point_at(t1 - 2.0 * span)),
        vp.to_pixel(k.line.point_at(t2 + 2.0 * span)),
    );
    let (cx, cy) = vp.to_pixel(k.circle.center);
    let (ox, oy) = vp.to_pixel(origin);

    let mut s = String::new();
    let _ = writeln!(s, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}" data-x-min="{}" data-y-max="{}" data-scale="{}">"##,
        vp.x_min,
        vp.y_max,
        vp.scale,
        w = vp.width,
        h = vp.height,
    );
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{:.3}" height="{:.3}" fill="white"/>"##, vp.width, vp.height);
    let _ = writeln!(
        s,
        r##"<g id="axes" stroke="#888888" stroke-width="1"><line id="axis-re" x1="0" y1="{oy:.3}" x2="{:.3}" y2="{oy:.3}"/><line id="axis-im" x1="{ox:.3}" y1="0" x2="{ox:.3}" y2="{:.3}"/></g>"##,
        vp.width, vp.height,
    );
    let _ = writeln!(
        s,
        r##"<circle id="circle-c" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="#d62728" stroke-width="2"/>"##,
        k.circle.radius * vp.scale
    );
    let _ = writeln!(
        s,
        r##"<line id="line-l1" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#1f77b4" stroke-width="2"/>"##,
        a.0, a.1, b.0, b.1
    );
    let _ = writeln!(s, r##"<g id="markers" font-family="sans-serif" font-size="14">"##);
    for (id, label, z) in markers {
        let (px, py) = vp.to_pixel(z);
        let _ = writeln!(
            s,
            r##"<circle id="marker-{id}" class="marker" cx="{px:.3}" cy="{py:.3}" r="4" fill="black" data-re="{}" data-im="{}"/><text x="{:.3}" y="{:.3}">{label}</text>"##,
            z.re,
            z.im,
            px + 6.0,
            py - 6.0,
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g id="legend" font-family="sans-serif" font-size="14"><text x="10" y="20">x² + ({})x + ({}) = 0</text><line x1="10" y1="34" x2="40" y2="34" stroke="#1f77b4" stroke-width="2"/><text x="46" y="38">L₁</text><line x1="10" y1="52" x2="40" y2="52" stroke="#d62728" stroke-width="2"/><text x="46" y="56">C = c₂/L₁</text></g>"##,
        signed_literal(coeffs.c1),
        signed_literal(coeffs.c2),
    );
    let _ = writeln!(s, "</svg>");
    Ok(Figure {
        svg: s,
        viewport: vp,
        report,
    })
}
