//! SVG rendering of a polygon model on a circle.

use super::polygon::PolygonModel;
use std::fmt::Write;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 160.0;

fn place(model: &PolygonModel, label: i32) -> (f64, f64) {
    let (top, bottom) = (model.circle[0], *model.circle.iter().max().unwrap());
    let mid = (top + bottom) as f64 / 2.0;
    let half = (bottom - top) as f64 / 2.0;
    let t = ((label as f64 - mid) / half).clamp(-1.0, 1.0);
    let y = SIZE / 2.0 + RADIUS * t;
    let x = if model.middle.contains(&label) {
        // the model lays points on a parabola; rescale onto the circle at this height
        let width = (bottom - top) as f64;
        let rel = model.point(label).0 / (width * width * (1.0 - t * t));
        rel * (1.0 - t * t).sqrt()
    } else if label == top || label == bottom {
        0.0
    } else if model.right.contains(&label) {
        (1.0 - t * t).sqrt()
    } else {
        -(1.0 - t * t).sqrt()
    };
    (SIZE / 2.0 + RADIUS * x, y)
}

/// Vertices in angular order around their centroid, so the outline is convex.
fn outline(points: &mut [(f64, f64)]) {
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.1).sum::<f64>() / n;
    points.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
}

pub fn render(model: &PolygonModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let c = SIZE / 2.0;
    let _ = writeln!(
        out,
        r#"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    for poly in &model.polygons {
        let mut pts: Vec<(f64, f64)> = poly.iter().map(|&l| place(model, l)).collect();
        match pts.len() {
            1 => {}
            2 => {
                let _ = writeln!(
                    out,
                    r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="steelblue" stroke-width="3"/>"#,
                    pts[0].0, pts[0].1, pts[1].0, pts[1].1
                );
            }
            _ => {
                outline(&mut pts);
                let coords: Vec<String> = pts
                    .iter()
                    .map(|p| format!("{:.2},{:.2}", p.0, p.1))
                    .collect();
                let _ = writeln!(
                    out,
                    r#"  <polygon points="{}" fill="lightsteelblue" fill-opacity="0.6" stroke="steelblue" stroke-width="2"/>"#,
                    coords.join(" ")
                );
            }
        }
    }
    for label in model.points() {
        let (x, y) = place(model, label);
        let dx = if x >= c { 8.0 } else { -8.0 };
        let anchor = if x >= c { "start" } else { "end" };
        let _ = writeln!(
            out,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="12" text-anchor="{anchor}">{label}</text>"#,
            x + dx,
            y + 4.0
        );
    }
    out.push_str("</svg>\n");
    out
}
