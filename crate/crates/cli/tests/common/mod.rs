#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn lcq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcq"))
        .args(args)
        .output()
        .expect("run lcq")
}

/// Plane/pixel geometry recovered from an emitted SVG.
pub struct SvgGeometry {
    pub markers: Vec<(String, (f64, f64))>,
    pub circle: ((f64, f64), f64),
    pub line: ((f64, f64), (f64, f64)),
    pub width: f64,
    pub height: f64,
}

fn num(node: roxmltree::Node<'_, '_>, attr: &str) -> f64 {
    node.attribute(attr)
        .unwrap_or_else(|| panic!("missing {attr}"))
        .parse()
        .unwrap()
}

pub fn read_svg(path: &Path) -> SvgGeometry {
    let text = std::fs::read_to_string(path).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed SVG");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let by_id = |id: &str| {
        doc.descendants()
            .find(|n| n.attribute("id") == Some(id))
            .unwrap_or_else(|| panic!("no element {id}"))
    };
    let markers = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("marker"))
        .map(|n| {
            let id = n.attribute("id").unwrap().trim_start_matches("marker-").to_string();
            (id, (num(n, "cx"), num(n, "cy")))
        })
        .collect();
    let c = by_id("circle-c");
    let l = by_id("line-l1");
    SvgGeometry {
        markers,
        circle: ((num(c, "cx"), num(c, "cy")), num(c, "r")),
        line: ((num(l, "x1"), num(l, "y1")), (num(l, "x2"), num(l, "y2"))),
        width: num(root, "width"),
        height: num(root, "height"),
    }
}

impl SvgGeometry {
    pub fn marker(&self, id: &str) -> (f64, f64) {
        self.markers
            .iter()
            .find(|(name, _)| name == id)
            .unwrap_or_else(|| panic!("no marker {id}"))
            .1
    }

    /// Pixels per unit along x and along y, measured between the origin
    /// marker and `id`, whose plane position is `plane`.
    pub fn axis_scales(&self, id: &str, plane: (f64, f64)) -> (f64, f64) {
        let o = self.marker("origin");
        let m = self.marker(id);
        ((m.0 - o.0) / plane.0, (o.1 - m.1) / plane.1)
    }

    /// Pixel position of plane point `z`, using the origin marker and `scale`.
    pub fn expected_pixel(&self, scale: f64, z: (f64, f64)) -> (f64, f64) {
        let o = self.marker("origin");
        (o.0 + scale * z.0, o.1 - scale * z.1)
    }

    pub fn distance_to_circle(&self, p: (f64, f64)) -> f64 {
        let ((cx, cy), r) = self.circle;
        ((p.0 - cx).hypot(p.1 - cy) - r).abs()
    }

    pub fn distance_to_line(&self, p: (f64, f64)) -> f64 {
        let ((x1, y1), (x2, y2)) = self.line;
        let (dx, dy) = (x2 - x1, y2 - y1);
        let len2 = dx * dx + dy * dy;
        let s = (((p.0 - x1) * dx + (p.1 - y1) * dy) / len2).clamp(0.0, 1.0);
        (p.0 - (x1 + s * dx)).hypot(p.1 - (y1 + s * dy))
    }
}

pub fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}
