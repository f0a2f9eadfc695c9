//! Rotational symmetry and nearest-neighbour structure of planar point sets.

use std::f64::consts::PI;

use super::grid::{dist, GridIndex};
use super::ProjectedPointSet;

/// Matching tolerance for symmetry detection.
pub const SYMMETRY_TOL: f64 = 1e-6;
/// Relative tolerance on edge lengths.
const EDGE_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Largest `k ≤ max_order` with a `2π/k` rotation symmetry.
    pub order: u32,
    /// Whether some reflection through the centroid is also a symmetry.
    pub mirror: bool,
}

fn centroid(points: &[[f64; 2]]) -> [f64; 2] {
    let n = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(x, y), p| (x + p[0], y + p[1]));
    [sx / n, sy / n]
}

/// Whether `map` sends the point set bijectively onto itself within `tol`.
fn is_symmetry(points: &[[f64; 2]], index: &GridIndex, map: impl Fn([f64; 2]) -> [f64; 2], tol: f64) -> bool {
    let coord = |i: usize| points[i];
    let mut used = vec![false; points.len()];
    for &p in points {
        let Some(j) = index.nearest_within(&coord, map(p), tol, |j| !used[j]) else {
            return false;
        };
        used[j] = true;
    }
    true
}

fn rotation(c: [f64; 2], theta: f64) -> impl Fn([f64; 2]) -> [f64; 2] {
    let (s, co) = theta.sin_cos();
    move |p| {
        let (x, y) = (p[0] - c[0], p[1] - c[1]);
        [c[0] + co * x - s * y, c[1] + s * x + co * y]
    }
}

/// Reflection in the line through `c` at angle `phi`.
fn reflection(c: [f64; 2], phi: f64) -> impl Fn([f64; 2]) -> [f64; 2] {
    let (s, co) = (2.0 * phi).sin_cos();
    move |p| {
        let (x, y) = (p[0] - c[0], p[1] - c[1]);
        [c[0] + co * x + s * y, c[1] + s * x - co * y]
    }
}

/// Largest rotation order about the centroid up to `max_order`, and
/// whether the set also has a mirror line through the centroid.
pub fn detect_symmetry_order(ps: &ProjectedPointSet, max_order: u32) -> SymmetryReport {
    let points = ps.coords();
    let max_order = max_order.max(1);
    if points.is_empty() {
        return SymmetryReport {
            order: max_order,
            mirror: true,
        };
    }
    let c = centroid(&points);
    let extent = points.iter().map(|&p| dist(p, c)).fold(0.0, f64::max);
    let index = GridIndex::from_points((extent / 64.0).max(4.0 * SYMMETRY_TOL), &points);

    let order = (1..=max_order)
        .rev()
        .find(|&k| k == 1 || is_symmetry(&points, &index, rotation(c, 2.0 * PI / k as f64), SYMMETRY_TOL))
        .unwrap_or(1);

    // a mirror maps the innermost off-centre ring onto itself, so its axis
    // bisects some pair (p, q) of that ring for a fixed p
    let radii: Vec<f64> = points.iter().map(|&p| dist(p, c)).collect();
    let r_min = radii.iter().copied().filter(|&r| r > SYMMETRY_TOL).fold(f64::INFINITY, f64::min);
    let mirror = if !r_min.is_finite() {
        true
    } else {
        let ring: Vec<[f64; 2]> = points
            .iter()
            .zip(&radii)
            .filter(|(_, &r)| (r - r_min).abs() <= SYMMETRY_TOL)
            .map(|(&p, _)| p)
            .collect();
        let angle = |p: [f64; 2]| (p[1] - c[1]).atan2(p[0] - c[0]);
        let p0 = angle(ring[0]);
        ring.iter()
            .any(|&q| is_symmetry(&points, &index, reflection(c, 0.5 * (p0 + angle(q))), SYMMETRY_TOL))
    };
    SymmetryReport { order, mirror }
}

/// Pairs of points at the minimal distance.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSet {
    /// `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub edge_length: f64,
}

impl EdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// All pairs at the smallest pairwise distance (within relative 1e-6).
///
/// Uses a grid whose cell size starts at the mean spacing and doubles
/// until a pair is found within one cell, so the expected cost is linear.
/// Fewer than two points give an empty edge set of length 0.
pub fn minimal_edges(ps: &ProjectedPointSet) -> EdgeSet {
    let points = ps.coords();
    let n = points.len();
    if n < 2 {
        return EdgeSet {
            edges: Vec::new(),
            edge_length: 0.0,
        };
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let (w, h) = (hi[0] - lo[0], hi[1] - lo[1]);
    let mut cell = ((w * h / n as f64).sqrt()).max(w.max(h) / n as f64).max(1e-12);

    let d_min = loop {
        let index = GridIndex::from_points(cell, &points);
        let coord = |i: usize| points[i];
        let mut best = f64::INFINITY;
        for (i, &p) in points.iter().enumerate() {
            for j in index.candidates(p, cell) {
                if j > i {
                    best = best.min(dist(p, coord(j)));
                }
            }
        }
        if best <= cell {
            break best;
        }
        cell *= 2.0;
    };

    let reach = d_min * (1.0 + EDGE_REL_TOL);
    let index = GridIndex::from_points(reach, &points);
    let mut edges = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        for j in index.candidates(p, reach) {
            if j > i && dist(p, points[j]) <= reach {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    EdgeSet {
        edges,
        edge_length: d_min,
    }
}

/// Number of edges at each point.
pub fn vertex_degrees(n: usize, edges: &EdgeSet) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(i, j) in &edges.edges {
        deg[i] += 1;
        deg[j] += 1;
    }
    deg
}

/// Angles in `[0, 2π)` of the edges at vertex `v`, sorted.
pub fn incident_angles(ps: &ProjectedPointSet, edges: &EdgeSet, v: usize) -> Vec<f64> {
    let p = &ps.points[v];
    let mut out: Vec<f64> = edges
        .edges
        .iter()
        .filter_map(|&(i, j)| match (i == v, j == v) {
            (true, _) => Some(j),
            (_, true) => Some(i),
            _ => None,
        })
        .map(|k| {
            let q = &ps.points[k];
            (q.y - p.y).atan2(q.x - p.x).rem_euclid(2.0 * PI)
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Points at least `margin` inside the largest centroid-centred disc that
/// contains the whole set; their neighbourhoods are not cut by the boundary.
pub fn interior_vertices(ps: &ProjectedPointSet, margin: f64) -> Vec<usize> {
    let points = ps.coords();
    if points.is_empty() {
        return Vec::new();
    }
    let c = centroid(&points);
    let r_out = points.iter().map(|&p| dist(p, c)).fold(0.0, f64::max);
    (0..points.len())
        .filter(|&i| dist(points[i], c) + margin <= r_out)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GroupId;

    fn set(coords: &[[f64; 2]]) -> ProjectedPointSet {
        ProjectedPointSet::from_coords(GroupId::F4, [0, 3], coords)
    }

    fn regular(k: usize, r: f64, phase: f64) -> Vec<[f64; 2]> {
        (0..k)
            .map(|i| {
                let t = phase + 2.0 * PI * i as f64 / k as f64;
                [r * t.cos(), r * t.sin()]
            })
            .collect()
    }

    #[test]
    fn single_point_is_fully_symmetric() {
        let r = detect_symmetry_order(&set(&[[0.3, -1.0]]), 24);
        assert_eq!(r, SymmetryReport { order: 24, mirror: true });
    }

    #[test]
    fn polygons() {
        for k in [3, 4, 5, 6, 8, 12] {
            let mut pts = regular(k, 1.0, 0.1);
            pts.push([0.0, 0.0]);
            let r = detect_symmetry_order(&set(&pts), 24);
            assert_eq!(r.order as usize, k);
            assert!(r.mirror);
        }
    }

    #[test]
    fn chiral_set_has_no_mirror() {
        // two rings of 6 twisted against each other by a generic angle
        let mut pts = regular(6, 1.0, 0.0);
        pts.extend(regular(6, 2.0, 0.2));
        let r = detect_symmetry_order(&set(&pts), 24);
        assert_eq!(r.order, 6);
        assert!(!r.mirror);
    }

    #[test]
    fn off_centre_set() {
        let pts: Vec<[f64; 2]> = regular(4, 1.0, 0.0).iter().map(|p| [p[0] + 5.0, p[1] - 2.0]).collect();
        assert_eq!(detect_symmetry_order(&set(&pts), 12).order, 4);
    }

    #[test]
    fn two_points_one_edge() {
        let e = minimal_edges(&set(&[[0.0, 0.0], [3.0, 4.0]]));
        assert_eq!(e.edges, vec![(0, 1)]);
        assert!((e.edge_length - 5.0).abs() < 1e-12);
    }

    #[test]
    fn square_grid_edges() {
        let mut pts = Vec::new();
        for i in 0..7 {
            for j in 0..7 {
                pts.push([i as f64 * 0.5, j as f64 * 0.5]);
            }
        }
        let ps = set(&pts);
        let e = minimal_edges(&ps);
        assert_eq!(e.len(), 2 * 7 * 6);
        assert!((e.edge_length - 0.5).abs() < 1e-12);
        let deg = vertex_degrees(ps.len(), &e);
        assert_eq!(deg[3 * 7 + 3], 4);
        assert_eq!(deg[0], 2);
        let a = incident_angles(&ps, &e, 3 * 7 + 3);
        let expect = [0.0, 0.5 * PI, PI, 1.5 * PI];
        for (x, y) in a.iter().zip(expect) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn sparse_far_points() {
        // a single close pair among widely spread points
        let mut pts: Vec<[f64; 2]> = (0..50).map(|i| [i as f64 * 100.0, (i * i) as f64]).collect();
        pts.push([0.001, 0.0]);
        let e = minimal_edges(&set(&pts));
        assert_eq!(e.edges, vec![(0, 50)]);
    }

    #[test]
    fn interior() {
        let mut pts = regular(6, 2.0, 0.0);
        pts.push([0.0, 0.0]);
        assert_eq!(interior_vertices(&set(&pts), 1.0), vec![6]);
    }
}
