use std::fmt::Write;

use num_traits::{Signed, ToPrimitive};

use super::GitFan;
use crate::error::{Error, Result};
use crate::ratlinalg::QVector;
use crate::rootsys::RootSystem;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 170.0;

/// Planar picture of a rank-2 fan: the chamber, its walls and cone labels,
/// drawn in a Euclidean frame for the invariant form.
pub fn fan_svg(rs: &RootSystem, fan: &GitFan) -> Result<String> {
    if rs.rank() != 2 {
        return Err(Error::Precondition(format!(
            "SVG output needs rank 2, got {}",
            rs.rank()
        )));
    }
    // Cholesky factor of the Gram matrix; floats are used for drawing only.
    let g = |i, j| rs.gram().get(i, j).to_f64().unwrap_or(0.0);
    let l11 = g(0, 0).sqrt();
    let l21 = g(1, 0) / l11;
    let l22 = (g(1, 1) - l21 * l21).sqrt();
    let plane = |fund: &QVector| -> (f64, f64) {
        let x = rs.from_fundamental(fund);
        let (a, b) = (x[0].to_f64().unwrap_or(0.0), x[1].to_f64().unwrap_or(0.0));
        let (u, v) = (l11 * a + l21 * b, l22 * b);
        let n = (u * u + v * v).sqrt().max(f64::MIN_POSITIVE);
        (u / n, v / n)
    };
    let to_screen = |(u, v): (f64, f64), r: f64| (SIZE / 2.0 + r * u, SIZE / 2.0 - r * v);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="10" y="20" font-family="sans-serif" font-size="14">GIT fan of {}</text>"#,
        fan.type_spec
    );
    let (cx, cy) = (SIZE / 2.0, SIZE / 2.0);
    for i in 0..2 {
        let (x, y) = to_screen(plane(&QVector::unit(2, i)), RADIUS);
        let _ = writeln!(
            out,
            r#"<line x1="{cx}" y1="{cy}" x2="{x:.2}" y2="{y:.2}" stroke="black" stroke-width="2"/>"#
        );
        let (lx, ly) = to_screen(plane(&QVector::unit(2, i)), RADIUS + 14.0);
        let _ = writeln!(
            out,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">π{}</text>"#,
            i + 1
        );
    }
    for wall in &fan.walls {
        // The wall meets the open orthant along the ray (|f2|, |f1|).
        let dir = QVector(vec![wall[1].abs(), wall[0].abs()]);
        let (x, y) = to_screen(plane(&dir), RADIUS);
        let _ = writeln!(
            out,
            r##"<line x1="{cx}" y1="{cy}" x2="{x:.2}" y2="{y:.2}" stroke="#b03030" stroke-width="1.2" stroke-dasharray="5,3"/>"##
        );
    }
    for (k, cone) in fan.cones.iter().enumerate() {
        let (x, y) = to_screen(plane(&cone.sample), RADIUS * 0.65);
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">σ{k}</text>"#
        );
    }
    let _ = writeln!(out, "</svg>");
    debug_assert!(fan.walls.iter().all(|w| w.iter().any(|c| c.is_negative())));
    Ok(out)
}
