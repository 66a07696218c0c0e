//! Diameter of a planar point set via convex hull and rotating calipers.
//!
//! The windowed-sum norm reduces to the diameter of the prefix-sum walk in
//! the complex plane, so this runs once per grid point with up to a few
//! thousand input points.

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn dist_sq(a: (f64, f64), b: (f64, f64)) -> f64 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    dx * dx + dy * dy
}

/// Andrew's monotone chain; returns the hull in counterclockwise order
/// with strictly convex turns (collinear points dropped).
fn convex_hull(points: &mut Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    points.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
    points.dedup();
    let n = points.len();
    if n <= 2 {
        return points.clone();
    }
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * n);
    for &p in points.iter() {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in points.iter().rev() {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Maximum pairwise distance of `points`.
pub(crate) fn diameter(points: &[(f64, f64)]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    let mut pts = points.to_vec();
    let hull = convex_hull(&mut pts);
    let h = hull.len();
    if h == 1 {
        return 0.0;
    }
    if h == 2 {
        return dist_sq(hull[0], hull[1]).sqrt();
    }
    // Rotating calipers over antipodal pairs.
    let mut best = 0.0f64;
    let mut k = 1;
    for i in 0..h {
        let edge_a = hull[i];
        let edge_b = hull[(i + 1) % h];
        while cross(edge_a, edge_b, hull[(k + 1) % h]) > cross(edge_a, edge_b, hull[k]) {
            k = (k + 1) % h;
        }
        best = best.max(dist_sq(edge_a, hull[k]));
        best = best.max(dist_sq(edge_b, hull[k]));
    }
    best.sqrt()
}
