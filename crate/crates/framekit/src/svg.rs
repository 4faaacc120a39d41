//! Scatter plots as standalone SVG.

use std::fmt::Write;

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 0.05;

/// Points drawn as radius-2 circles on a 1000×1000 canvas, autoscaled with
/// equal aspect ratio and a 5% margin; `y` points up.
pub fn scatter(points: &[[f64; 2]]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if !points.is_empty() {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let scale = if span > 0.0 {
            SIZE * (1.0 - 2.0 * MARGIN) / span
        } else {
            1.0
        };
        let centre = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
        for p in points {
            let x = SIZE / 2.0 + (p[0] - centre[0]) * scale;
            let y = SIZE / 2.0 - (p[1] - centre[1]) * scale;
            let _ = writeln!(
                s,
                r#"<circle cx="{:.3}" cy="{:.3}" r="2"/>"#,
                x + 0.0,
                y + 0.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// First two coordinates of the points with `|x₃| ≤ half_width`; 2-dim
/// points pass through unchanged.
pub fn slice(points: &[Vec<f64>], half_width: f64) -> Vec<[f64; 2]> {
    points
        .iter()
        .filter(|p| p.len() < 3 || p[2].abs() <= half_width)
        .map(|p| [p[0], p[1]])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circles(svg: &str) -> Vec<(f64, f64)> {
        svg.lines()
            .filter_map(|l| l.strip_prefix(r#"<circle cx=""#))
            .map(|l| {
                let (x, rest) = l.split_once('"').unwrap();
                let y = rest
                    .trim_start_matches(r#" cy=""#)
                    .split('"')
                    .next()
                    .unwrap();
                (x.parse().unwrap(), y.parse().unwrap())
            })
            .collect()
    }

    #[test]
    fn scaling_keeps_aspect_and_margin() {
        let c = circles(&scatter(&[[0.0, 0.0], [2.0, 1.0]]));
        assert_eq!(c, [(50.0, 725.0), (950.0, 275.0)]);
        let single = circles(&scatter(&[[3.0, -4.0]]));
        assert_eq!(single, [(500.0, 500.0)]);
        assert!(circles(&scatter(&[])).is_empty());
    }

    #[test]
    fn slicing() {
        let pts = vec![vec![1.0, 2.0, 0.1], vec![3.0, 4.0, -0.5], vec![5.0, 6.0]];
        assert_eq!(slice(&pts, 0.25), [[1.0, 2.0], [5.0, 6.0]]);
    }
}
