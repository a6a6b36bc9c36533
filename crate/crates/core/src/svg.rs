//! Static SVG plots of projected root systems.

use std::fmt::Write;

use crate::coxeter::{distinct_radii, ProjectedPoint};

/// Points closer than this to the origin are drawn as a cross.
const ORIGIN_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SvgStyle {
    /// Width and height in pixels.
    pub size: u32,
    /// Glyph radius as a fraction of the plotted half-width.
    pub point_radius: f64,
    /// Orbit colours, cycled by `orbit_id`.
    pub palette: Vec<String>,
    pub guide_stroke: String,
    pub title: Option<String>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        let palette = [
            "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
        ];
        Self {
            size: 600,
            point_radius: 0.018,
            palette: palette.iter().map(|s| s.to_string()).collect(),
            guide_stroke: "#bbbbbb".into(),
            title: None,
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// One glyph per point coloured by orbit, a guide circle per distinct radius,
/// and a 5% margin around the outermost circle.
pub fn render_svg(points: &[ProjectedPoint], style: &SvgStyle) -> String {
    let rmax = points.iter().map(|p| p.radius).fold(0.0, f64::max);
    let extent = if rmax > ORIGIN_TOL { rmax } else { 1.0 };
    let half = extent * 1.05;
    let glyph = style.point_radius * half;
    let stroke = half / 400.0;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="{} {} {} {}">"#,
        num(-half),
        num(-half),
        num(2.0 * half),
        num(2.0 * half),
        s = style.size
    );
    if let Some(t) = &style.title {
        let _ = writeln!(out, "  <title>{}</title>", escape(t));
    }
    let _ = writeln!(out, r#"  <rect x="{0}" y="{0}" width="{1}" height="{1}" fill="white"/>"#, num(-half), num(2.0 * half));
    let _ = writeln!(out, r#"  <g class="guides" fill="none" stroke="{}" stroke-width="{}">"#, style.guide_stroke, num(stroke));
    for (r, _) in distinct_radii(points, 1e-6) {
        if r > ORIGIN_TOL {
            let _ = writeln!(out, r#"    <circle cx="0" cy="0" r="{}"/>"#, num(r));
        }
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g class="roots" stroke="black" stroke-width="{}">"#, num(stroke));
    for p in points {
        let colour = &style.palette[p.orbit_id % style.palette.len().max(1)];
        if p.radius <= ORIGIN_TOL {
            let d = glyph;
            let _ = writeln!(
                out,
                r#"    <path class="origin" data-root="{}" d="M {a} {a} L {b} {b} M {a} {b} L {b} {a}" stroke="{colour}" stroke-width="{}"/>"#,
                p.root_index,
                num(glyph / 3.0),
                a = num(-d),
                b = num(d),
            );
        } else {
            let _ = writeln!(
                out,
                r#"    <circle data-root="{}" data-orbit="{}" cx="{}" cy="{}" r="{}" fill="{colour}"/>"#,
                p.root_index,
                p.orbit_id,
                num(p.x),
                num(-p.y),
                num(glyph)
            );
        }
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}
