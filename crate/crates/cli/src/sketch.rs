//! ASCII picture of a phi-Newton polygon.

use crate::dto::{PhiOut, Point};

/// `#` vertex, `o` other point of the expansion, `.` lattice point on a side.
pub fn sketch(phi: &PhiOut) -> String {
    let Some(max_i) = phi.points.iter().map(|p| p.i).max() else {
        return String::from("  (no points)\n");
    };
    let max_v = phi.points.iter().map(|p| p.v).max().unwrap_or(0);
    let on_side = |i: u32, v: u32| {
        phi.sides.iter().any(|s| {
            let (a, b) = (s.start, s.end);
            if i < a.i || i > b.i {
                return false;
            }
            // v - a.v = -(h/e)(i - a.i) with h/e = height/length
            let lhs = (v as i64 - a.v as i64) * s.length as i64;
            let rhs = -(s.height as i64) * (i as i64 - a.i as i64);
            lhs == rhs
        })
    };
    let is = |pts: &[Point], i: u32, v: u32| pts.iter().any(|p| p.i == i && p.v == v);
    let mut out = String::new();
    for v in (0..=max_v).rev() {
        out.push_str(&format!("{v:>4} |"));
        for i in 0..=max_i {
            let c = if is(&phi.vertices, i, v) {
                '#'
            } else if is(&phi.points, i, v) {
                'o'
            } else if on_side(i, v) {
                '.'
            } else {
                ' '
            };
            out.push(' ');
            out.push(c);
        }
        out.push('\n');
    }
    out.push_str("     +");
    out.push_str(&"--".repeat(max_i as usize + 1));
    out.push('\n');
    out.push_str("      ");
    for i in 0..=max_i {
        out.push_str(&format!("{:>2}", i % 10));
    }
    out.push('\n');
    out
}
