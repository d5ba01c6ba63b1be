use super::export::{ExperimentResult, ZeroKind};
use num_complex::Complex64;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct PointSet {
    pub label: String,
    pub color: &'static str,
    pub points: Vec<Complex64>,
}

const SIZE: f64 = 600.0;
const PAD: f64 = 40.0;

/// Square viewport `(xmin, xmax, ymin, ymax)` enclosing all finite input
/// with a 5% margin; `[-1, 1]^2` when there is nothing to show.
pub fn viewport(sets: &[PointSet], arcs: &[Vec<Complex64>], segments: &[(f64, f64)]) -> (f64, f64, f64, f64) {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for z in sets.iter().flat_map(|s| s.points.iter()).chain(arcs.iter().flatten()) {
        if z.re.is_finite() && z.im.is_finite() {
            xs.push(z.re);
            ys.push(z.im);
        }
    }
    for &(a, b) in segments {
        for x in [a, b] {
            if x.is_finite() {
                xs.push(x);
                ys.push(0.0);
            }
        }
    }
    if xs.is_empty() {
        return (-1.0, 1.0, -1.0, 1.0);
    }
    let lo = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1, y0, y1) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
    let half = (0.5 * (x1 - x0).max(y1 - y0)).max(0.5) * 1.05;
    let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
    (cx - half, cx + half, cy - half, cy + half)
}

/// Scatter plot with axes, real segments, polylines and a legend with one
/// entry per set in input order. Output depends only on the input.
pub fn render_svg(sets: &[PointSet], arcs: &[Vec<Complex64>], segments: &[(f64, f64)]) -> String {
    let (x0, x1, y0, y1) = viewport(sets, arcs, segments);
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (SIZE - 2.0 * PAD);
    let sy = |y: f64| SIZE - PAD - (y - y0) / (y1 - y0) * (SIZE - 2.0 * PAD);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    if y0 <= 0.0 && y1 >= 0.0 {
        let _ = writeln!(s, r##"<line class="axis" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#999" stroke-width="0.5"/>"##, sx(x0), sy(0.0), sx(x1), sy(0.0));
    }
    if x0 <= 0.0 && x1 >= 0.0 {
        let _ = writeln!(s, r##"<line class="axis" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#999" stroke-width="0.5"/>"##, sx(0.0), sy(y0), sx(0.0), sy(y1));
    }
    for &(a, b) in segments {
        let (a, b) = (a.max(x0), b.min(x1));
        if a < b {
            let _ = writeln!(s, r#"<line class="segment" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="green" stroke-width="3"/>"#, sx(a), sy(0.0), sx(b), sy(0.0));
        }
    }
    for arc in arcs {
        let pts: Vec<String> = arc.iter().map(|z| format!("{:.3},{:.3}", sx(z.re), sy(z.im))).collect();
        let _ = writeln!(s, r#"<polyline class="arc" points="{}" fill="none" stroke="gray" stroke-width="1"/>"#, pts.join(" "));
    }
    for set in sets {
        for z in &set.points {
            if z.re.is_finite() && z.im.is_finite() {
                let _ = writeln!(s, r#"<circle class="marker" cx="{:.3}" cy="{:.3}" r="2" fill="{}"/>"#, sx(z.re), sy(z.im), set.color);
            }
        }
    }
    for (i, set) in sets.iter().enumerate() {
        let y = 20.0 + 16.0 * i as f64;
        let _ = writeln!(s, r#"<rect class="legend-key" x="10" y="{:.1}" width="10" height="10" fill="{}"/>"#, y - 9.0, set.color);
        let _ = writeln!(s, r#"<text class="legend" x="26" y="{y:.1}" font-size="12">{}</text>"#, escape(&set.label));
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Point sets of a result, coloured blue, red, black in the usual order.
pub fn render_result(r: &ExperimentResult) -> String {
    let order = [
        (ZeroKind::ZeroQ0, "blue"),
        (ZeroKind::ZeroQ1, "red"),
        (ZeroKind::ZeroQ2, "black"),
        (ZeroKind::ZeroP, "blue"),
        (ZeroKind::Pole, "red"),
        (ZeroKind::Node, "orange"),
    ];
    let sets: Vec<PointSet> = order
        .iter()
        .map(|&(k, color)| PointSet { label: k.label().into(), color, points: r.kind_points(k) })
        .filter(|s| !s.points.is_empty())
        .collect();
    let num = |s: &str| s.parse::<f64>().unwrap_or(f64::NAN);
    let segs: Vec<(f64, f64)> = r.overlays.segments.iter().map(|[a, b]| (num(a), num(b))).collect();
    let arcs: Vec<Vec<Complex64>> = r.overlays.arcs.iter().map(|a| a.iter().map(|[x, y]| Complex64::new(num(x), num(y))).collect()).collect();
    render_svg(&sets, &arcs, &segs)
}
