//! SVG drawings. Coordinates are interval midpoints and are only a picture;
//! the exact data lives in the graph document.

use std::fmt::Write;

use twodist::graphs::EdgeGraph;

const PALETTE: [&str; 8] = [
    "#e6194b", "#3cb44b", "#4363d8", "#ffe119", "#f58231", "#911eb4", "#42d4f4", "#f032e6",
];

pub struct RenderOptions<'a> {
    pub coloring: Option<&'a [usize]>,
    /// Vertices drawn solid black.
    pub highlight: &'a [usize],
    pub size: f64,
    pub labels: bool,
}

impl Default for RenderOptions<'_> {
    fn default() -> Self {
        RenderOptions {
            coloring: None,
            highlight: &[],
            size: 800.0,
            labels: false,
        }
    }
}

pub fn render_svg(g: &EdgeGraph, coords: &[(f64, f64)], opts: &RenderOptions<'_>) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in coords {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if coords.is_empty() {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    let margin = 20.0;
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = (opts.size - 2.0 * margin) / span;
    // y grows downward in SVG
    let at = |i: usize| {
        let (x, y) = coords[i];
        (margin + (x - x0) * scale, margin + (y1 - y) * scale)
    };
    let r = (opts.size / (8.0 * (coords.len() as f64).sqrt().max(1.0))).clamp(2.0, 10.0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = opts.size
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r##"<g class="e1" stroke="#555" stroke-width="1">"##);
    for &(a, b) in g.e1() {
        line(&mut s, at(a), at(b));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g class="e2" stroke="#7fa7d9" stroke-width="1" stroke-dasharray="4 3">"##
    );
    for &(a, b) in g.e2() {
        line(&mut s, at(a), at(b));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<g class="vertices" stroke="black" stroke-width="0.8">"#
    );
    for i in 0..coords.len() {
        let (cx, cy) = at(i);
        let fill = if opts.highlight.contains(&i) {
            "black"
        } else {
            match opts.coloring {
                Some(c) => PALETTE[c[i] % PALETTE.len()],
                None => "white",
            }
        };
        let _ = writeln!(
            s,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="{fill}"/>"#
        );
        if opts.labels {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-size="{:.1}" stroke="none">{}</text>"#,
                cx + r,
                cy - r,
                2.0 * r,
                i + 1
            );
        }
    }
    let _ = writeln!(s, "</g>\n</svg>");
    s
}

fn line(s: &mut String, (ax, ay): (f64, f64), (bx, by): (f64, f64)) {
    let _ = writeln!(
        s,
        r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#
    );
}
