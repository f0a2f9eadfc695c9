//! Components in the orthonormal frame and the cut-and-project filter.

mod analysis;
mod grid;

pub use analysis::{
    detect_symmetry_order, incident_angles, interior_vertices, minimal_edges, vertex_degrees, EdgeSet,
    SymmetryReport, SYMMETRY_TOL,
};
pub use grid::GridIndex;

use std::cmp::Ordering;

use crate::coxeter::{to_weight, Basis, GroupId, LatticeVector};
use crate::error::{Error, Result};
use crate::spectral::SpectralFrame;
use crate::window::WindowSpec;

/// Projected points closer than this are merged.
pub const DEDUP_TOL: f64 = 1e-8;

/// Components of a vector along `x̂_1 … x̂_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentVector {
    pub group: GroupId,
    pub values: Vec<f64>,
}

impl ComponentVector {
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }
}

fn weight_coeffs(frame: &SpectralFrame, v: &LatticeVector) -> Result<Vec<i64>> {
    if v.len() != frame.rank() {
        return Err(Error::RankMismatch {
            expected: frame.rank(),
            found: v.len(),
        });
    }
    Ok(match v.basis {
        Basis::Weight => v.coeffs.clone(),
        Basis::Root => to_weight(&frame.data, v)?.coeffs,
    })
}

fn dot(f: &[f64], a: &[i64]) -> f64 {
    f.iter().zip(a).map(|(f, &x)| f * x as f64).sum()
}

/// Scalar products of `v` with every frame vector.
pub fn components(v: &LatticeVector, frame: &SpectralFrame) -> Result<ComponentVector> {
    let a = weight_coeffs(frame, v)?;
    Ok(ComponentVector {
        group: frame.group(),
        values: frame.vectors.iter().map(|x| dot(&x.functional, &a)).collect(),
    })
}

/// Components of a real weight-coordinate vector.
pub fn components_f64(a: &[f64], frame: &SpectralFrame) -> Vec<f64> {
    frame
        .vectors
        .iter()
        .map(|x| x.functional.iter().zip(a).map(|(f, v)| f * v).sum())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedPoint {
    pub x: f64,
    pub y: f64,
    pub source: LatticeVector,
}

/// Planar point set, ordered by source coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedPointSet {
    pub group: GroupId,
    pub par_axes: [usize; 2],
    pub points: Vec<ProjectedPoint>,
    pub dedup_tol: f64,
}

impl ProjectedPointSet {
    pub fn empty(group: GroupId, par_axes: [usize; 2]) -> Self {
        Self {
            group,
            par_axes,
            points: Vec::new(),
            dedup_tol: DEDUP_TOL,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn coords(&self) -> Vec<[f64; 2]> {
        self.points.iter().map(|p| [p.x, p.y]).collect()
    }

    /// Point set over bare coordinates; every source is the zero vector.
    pub fn from_coords(group: GroupId, par_axes: [usize; 2], coords: &[[f64; 2]]) -> Self {
        let n = crate::coxeter::cartan_matrix(group).rank();
        Self {
            group,
            par_axes,
            points: coords
                .iter()
                .map(|&[x, y]| ProjectedPoint {
                    x,
                    y,
                    source: LatticeVector::zero(n, Basis::Weight),
                })
                .collect(),
            dedup_tol: DEDUP_TOL,
        }
    }
}

/// Keeps lattice points whose perpendicular components fall in `window` and
/// returns their parallel components.
///
/// With `clip = Some(r)` points whose parallel components have norm above
/// `r` are dropped as well. Coincident images are merged, keeping the
/// source that sorts first.
pub fn cut_and_project<I>(
    points: I,
    frame: &SpectralFrame,
    par_axes: [usize; 2],
    window: &WindowSpec,
    clip: Option<f64>,
) -> Result<ProjectedPointSet>
where
    I: IntoIterator<Item = LatticeVector>,
{
    let n = frame.rank();
    for &axis in par_axes.iter().chain(&window.perp_axes) {
        if axis >= n {
            return Err(Error::AxisOutOfRange { axis, rank: n });
        }
    }
    if par_axes[0] == par_axes[1] {
        return Err(Error::AxisOverlap(par_axes[0]));
    }
    if let Some(&axis) = window.perp_axes.iter().find(|a| par_axes.contains(a)) {
        return Err(Error::AxisOverlap(axis));
    }
    if !window.radius.is_finite() {
        return Err(Error::InvalidArgument("window radius must be finite".into()));
    }

    let fx = &frame.vectors[par_axes[0]].functional;
    let fy = &frame.vectors[par_axes[1]].functional;
    let perp: Vec<&[f64]> = window
        .perp_axes
        .iter()
        .map(|&i| frame.vectors[i].functional.as_slice())
        .collect();
    let clip_sq = clip.map(|r| r * r);

    let mut kept = Vec::new();
    for v in points {
        let a = weight_coeffs(frame, &v)?;
        let r = perp.iter().map(|f| dot(f, &a).powi(2)).sum::<f64>().sqrt();
        if !window.contains(r) {
            continue;
        }
        let (x, y) = (dot(fx, &a), dot(fy, &a));
        if clip_sq.is_some_and(|c| x * x + y * y > c) {
            continue;
        }
        kept.push(ProjectedPoint {
            x,
            y,
            source: LatticeVector::weight(a),
        });
    }
    kept.sort_by(|p, q| p.source.coeffs.cmp(&q.source.coeffs));

    let mut index = GridIndex::new(DEDUP_TOL.max(1e-12));
    let mut out = Vec::with_capacity(kept.len());
    for p in kept {
        if index.any_within(&out_coords(&out), [p.x, p.y], DEDUP_TOL) {
            continue;
        }
        index.insert(out.len(), [p.x, p.y]);
        out.push(p);
    }
    Ok(ProjectedPointSet {
        group: frame.group(),
        par_axes,
        points: out,
        dedup_tol: DEDUP_TOL,
    })
}

fn out_coords(points: &[ProjectedPoint]) -> impl Fn(usize) -> [f64; 2] + '_ {
    move |i| [points[i].x, points[i].y]
}

/// Total order on `(x, y)` used for canonical output.
pub fn cmp_xy(a: &[f64; 2], b: &[f64; 2]) -> Ordering {
    a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1]))
}
