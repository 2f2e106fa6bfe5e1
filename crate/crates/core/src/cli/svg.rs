use std::fmt::Write as _;

use crate::conformal::DiskMesh;
use crate::Complex64;

const RING_COLOR: &str = "#1f5fa8";
const SPOKE_COLOR: &str = "#c0392b";

fn coord(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".to_string()
    } else {
        s
    }
}

fn points(line: &[Complex64]) -> String {
    line.iter().map(|z| format!("{},{}", coord(z.re), coord(-z.im))).collect::<Vec<_>>().join(" ")
}

/// Renders the mesh as SVG 1.1 polylines. The plane's y axis points up.
pub fn render(mesh: &DiskMesh) -> String {
    let all = mesh.rings.iter().chain(&mesh.spokes).flatten();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in all {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(-z.im);
        y1 = y1.max(-z.im);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let margin = 0.05 * span;
    let (vx, vy, vw, vh) = (x0 - margin, y0 - margin, x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">",
        coord(vx),
        coord(vy),
        coord(vw),
        coord(vh),
        (800.0 * vh / vw).round().max(1.0)
    );
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"{RING_COLOR}\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">"
    );
    for ring in &mesh.rings {
        let mut closed = ring.clone();
        closed.extend(ring.first().copied());
        let _ = writeln!(out, "<polyline vector-effect=\"non-scaling-stroke\" points=\"{}\"/>", points(&closed));
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"{SPOKE_COLOR}\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">"
    );
    for spoke in &mesh.spokes {
        let _ = writeln!(out, "<polyline vector-effect=\"non-scaling-stroke\" points=\"{}\"/>", points(spoke));
    }
    out.push_str("</g>\n</svg>\n");
    out
}
