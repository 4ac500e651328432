//! Static SVG output: the polygon as a stroke-only closed path, optional
//! circles and vertex labels, in a viewBox with a 5% margin. The y axis is
//! flipped so counterclockwise configurations render counterclockwise.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use bicentric_core::oracle::{Circle, PolygonConfiguration};

const MARGIN: f64 = 0.05;

struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn include(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.max_x = self.max_x.max(x);
        self.min_y = self.min_y.min(y);
        self.max_y = self.max_y.max(y);
    }
}

fn bounds(config: &PolygonConfiguration, circles: &[Circle]) -> Bounds {
    let mut b =
        Bounds { min_x: f64::INFINITY, min_y: f64::INFINITY, max_x: f64::NEG_INFINITY, max_y: f64::NEG_INFINITY };
    for p in &config.vertices {
        b.include(p.x, -p.y);
    }
    for c in circles {
        b.include(c.center.x - c.radius, -c.center.y - c.radius);
        b.include(c.center.x + c.radius, -c.center.y + c.radius);
    }
    b
}

/// Standalone SVG 1.1 document.
pub fn svg_document(config: &PolygonConfiguration, circles: &[Circle]) -> String {
    let b = bounds(config, circles);
    let size = (b.max_x - b.min_x).max(b.max_y - b.min_y).max(f64::MIN_POSITIVE);
    let margin = MARGIN * size;
    let (x0, y0) = (b.min_x - margin, b.min_y - margin);
    let (w, h) = (b.max_x - b.min_x + 2.0 * margin, b.max_y - b.min_y + 2.0 * margin);
    let stroke = 0.004 * size;
    let font = 0.04 * size;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0} {y0} {w} {h}" width="800" height="{}">"#,
        (800.0 * h / w).round()
    );

    let mut path = String::new();
    for (i, p) in config.vertices.iter().enumerate() {
        let _ = write!(path, "{}{} {} ", if i == 0 { "M" } else { "L" }, p.x, -p.y);
    }
    path.push('Z');
    let _ = writeln!(
        out,
        r#"  <path class="polygon" d="{path}" fill="none" stroke="black" stroke-width="{stroke}" stroke-linejoin="round"/>"#
    );
    for c in circles {
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="steelblue" stroke-width="{stroke}"/>"#,
            c.center.x, -c.center.y, c.radius
        );
    }

    // labels sit just outside each vertex, away from the centroid
    let n = config.vertices.len() as f64;
    let cx = config.vertices.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = config.vertices.iter().map(|p| p.y).sum::<f64>() / n;
    for (i, p) in config.vertices.iter().enumerate() {
        let (dx, dy) = (p.x - cx, p.y - cy);
        let len = dx.hypot(dy).max(f64::MIN_POSITIVE);
        let (lx, ly) = (p.x + 1.2 * font * dx / len, p.y + 1.2 * font * dy / len);
        let _ = writeln!(
            out,
            r#"  <text x="{lx}" y="{}" font-size="{font}" text-anchor="middle" dominant-baseline="middle">P{}</text>"#,
            -ly,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_svg(config: &PolygonConfiguration, circles: &[Circle], path: &Path) -> io::Result<()> {
    fs::write(path, svg_document(config, circles))
}
