//! SVG 1.1 rendering of point and edge sets.

use std::fmt::Write;

use quasiproj_core::{EdgeSet, ProjectedPointSet};

use crate::config::RenderOptions;
use crate::export::{canonicalize, format_number as num};

/// Renders points as circles and edges as lines. The plane's `y` axis points
/// up; the view box fits the points with a 5% margin on each side.
pub fn render_svg(ps: &ProjectedPointSet, edges: Option<&EdgeSet>, opts: &RenderOptions) -> String {
    let c = canonicalize(ps, if opts.draw_edges { edges } else { None });
    let pts: Vec<[f64; 2]> = c.points.iter().map(|&[x, y]| [x, -y]).collect();

    let (mut lo, mut hi) = ([-1.0f64, -1.0], [1.0f64, 1.0]);
    if !pts.is_empty() {
        lo = [f64::INFINITY; 2];
        hi = [f64::NEG_INFINITY; 2];
        for p in &pts {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
    }
    let mut w = hi[0] - lo[0];
    let mut h = hi[1] - lo[1];
    if w.max(h) <= 0.0 {
        // single point
        lo = [lo[0] - 1.0, lo[1] - 1.0];
        w = 2.0;
        h = 2.0;
    }
    let side = w.max(h);
    let margin = 0.05 * side;
    let (x0, y0) = (lo[0] - margin - (side - w) / 2.0, lo[1] - margin - (side - h) / 2.0);
    let extent = side + 2.0 * margin;
    // point radius is given in canvas pixels
    let unit = extent / opts.canvas as f64;
    let r = opts.point_radius * unit;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"{1} {2} {3} {3}\">",
        opts.canvas,
        num(x0),
        num(y0),
        num(extent)
    );
    let _ = writeln!(out, "<rect x=\"{}\" y=\"{}\" width=\"{2}\" height=\"{2}\" fill=\"white\"/>", num(x0), num(y0), num(extent));
    let _ = writeln!(out, "<g id=\"edges\" stroke=\"#555555\" stroke-width=\"{}\">", num(0.6 * unit));
    for &(i, j) in &c.edges {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(pts[i][0]),
            num(pts[i][1]),
            num(pts[j][0]),
            num(pts[j][1])
        );
    }
    out.push_str("</g>\n");
    out.push_str("<g id=\"points\" fill=\"#1f3a93\">\n");
    for p in &pts {
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(p[0]), num(p[1]), num(r));
    }
    out.push_str("</g>\n</svg>\n");
    out
}
