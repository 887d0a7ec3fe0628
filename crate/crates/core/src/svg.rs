//! SVG drawing of the moment polytope of a 3 × 3 orbit with its 1-skeleton.
//!
//! Points of the plane `x_1 + x_2 + x_3 = tr λ` are drawn in the orthonormal
//! basis `(1, -1, 0) / √2`, `(1, 1, -2) / √6`.

use std::fmt::Write;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hermitian::Spectrum;
use crate::scalar::Scalar;
use crate::skeleton::skeleton_graph;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;

fn project(x: &[f64]) -> (f64, f64) {
    (
        (x[0] - x[1]) / 2f64.sqrt(),
        (x[0] + x[1] - 2.0 * x[2]) / 6f64.sqrt(),
    )
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull, counterclockwise, by the monotone chain.
fn hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 1e-12
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 1e-12
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Renders the permutohedron `Q` of `lambda` (which must have three entries)
/// with one `<line>` per skeleton edge and one `<circle>` per vertex.
pub fn plot_moment_polytope(lambda: &Spectrum<BigRational>) -> Result<String> {
    if lambda.n() != 3 {
        return Err(Error::UnsupportedDimension(format!(
            "plotting needs a 3 x 3 orbit, got n = {}",
            lambda.n()
        )));
    }
    let graph = skeleton_graph(lambda);
    let pts: Vec<(f64, f64)> = graph
        .vertices
        .iter()
        .map(|v| project(&v.iter().map(|x| x.to_real::<f64>()).collect::<Vec<_>>()))
        .collect();

    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let span = (xmax - xmin).max(ymax - ymin).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
    let screen =
        |(x, y): (f64, f64)| (SIZE / 2.0 + (x - cx) * scale, SIZE / 2.0 - (y - cy) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let labels: Vec<String> = lambda.values().iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "  <title>moment polytope for lambda = ({})</title>",
        labels.join(", ")
    );
    let outline: Vec<String> = hull(&pts)
        .into_iter()
        .map(|p| {
            let (x, y) = screen(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"  <polygon points="{}" fill="#dde8f4" stroke="#335577" stroke-width="1.5"/>"##,
        outline.join(" ")
    );
    for e in &graph.edges {
        let (x1, y1) = screen(pts[e.u]);
        let (x2, y2) = screen(pts[e.v]);
        let _ = writeln!(
            out,
            r##"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#aa3333" stroke-width="1"/>"##
        );
    }
    for (v, &p) in graph.vertices.iter().zip(&pts) {
        let (x, y) = screen(p);
        let name: Vec<String> = v.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            r##"  <circle cx="{x:.3}" cy="{y:.3}" r="4" fill="#222222"><title>({})</title></circle>"##,
            name.join(", ")
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_lambda;

    #[test]
    fn hexagon() {
        let svg = plot_moment_polytope(&parse_lambda("3,2,1").unwrap()).unwrap();
        assert_eq!(svg.matches("<line").count(), 9);
        assert_eq!(svg.matches("<circle").count(), 6);
        let poly = svg.lines().find(|l| l.contains("<polygon")).unwrap();
        assert_eq!(
            poly.split("points=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .split(' ')
                .count(),
            6
        );
    }

    #[test]
    fn triangle_and_point() {
        let svg = plot_moment_polytope(&parse_lambda("5,5,4").unwrap()).unwrap();
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 3);
        let svg = plot_moment_polytope(&parse_lambda("1,1,1").unwrap()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
    }

    #[test]
    fn other_sizes_rejected() {
        assert!(matches!(
            plot_moment_polytope(&parse_lambda("2,1").unwrap()),
            Err(Error::UnsupportedDimension(_))
        ));
    }
}
