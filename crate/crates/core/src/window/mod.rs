//! Lattice enumeration, Voronoi-cell vertex tables and the ball window in the
//! perpendicular space.

mod enumerate;

pub use enumerate::{
    enumerate_lattice, enumerate_with, Generators, LatticeIter, LatticeKind, DEFAULT_POINT_BUDGET,
};

use nalgebra::DMatrix;

use crate::coxeter::{orbit_points, ratio_to_f64, Family, GroupId, Orbit, Rational, RootSystemData};
use crate::error::{Error, Result};
use crate::spectral::SpectralFrame;

/// Points whose perpendicular norm exceeds the radius by at most this much
/// are still inside the (closed) window.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Vertex set of the Voronoi cell around the origin, as a union of scaled
/// Weyl orbits.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiSpec {
    pub group: GroupId,
    pub kind: LatticeKind,
    pub orbits: Vec<Orbit>,
    pub vertex_count: usize,
}

impl VoronoiSpec {
    pub fn from_orbits(group: GroupId, kind: LatticeKind, orbits: Vec<Orbit>) -> Self {
        let vertex_count = orbits.iter().map(Orbit::len).sum();
        Self {
            group,
            kind,
            orbits,
            vertex_count,
        }
    }

    /// Every vertex as `(scale, weight coordinates)`.
    pub fn vertices(&self) -> impl Iterator<Item = (Rational, &[i64])> {
        self.orbits
            .iter()
            .flat_map(|o| o.points.iter().map(move |p| (o.scale, p.as_slice())))
    }
}

/// Seeds and scales of the Voronoi vertices for the supported lattices.
fn voronoi_seeds(group: GroupId, kind: LatticeKind) -> Option<Vec<(Vec<i64>, Rational)>> {
    let n = group.rank();
    let unit = |k: usize| {
        let mut v = vec![0; n];
        v[k] = 1;
        v
    };
    let one = Rational::from_integer(1);
    match (group.family(), n, kind) {
        // dual of the root polytope: union of all fundamental orbits
        (Family::A, _, LatticeKind::Root) => Some((0..n).map(|k| (unit(k), one)).collect()),
        (Family::A, _, LatticeKind::Weight) => Some(vec![(vec![1; n], Rational::new(1, n as i64 + 1))]),
        (Family::F, 4, _) => Some(vec![(unit(3), Rational::new(1, 2))]),
        (Family::B, 6, LatticeKind::Root) => Some(vec![(unit(5), one)]),
        (Family::E, 6, LatticeKind::Root) => Some(vec![(unit(0), one), (unit(4), one)]),
        (Family::E, 6, LatticeKind::Weight) => Some(vec![(unit(2), Rational::new(1, 3))]),
        _ => None,
    }
}

/// Voronoi-cell vertices of `(group, kind)`.
pub fn voronoi_vertices(data: &RootSystemData, kind: LatticeKind) -> Result<VoronoiSpec> {
    let seeds = voronoi_seeds(data.group, kind).ok_or(Error::Unsupported {
        group: data.group,
        kind,
    })?;
    let mut orbits = Vec::with_capacity(seeds.len());
    for (seed, scale) in seeds {
        let points = orbit_points(data, &seed, crate::coxeter::DEFAULT_ORBIT_BUDGET)?;
        orbits.push(Orbit { seed, scale, points });
    }
    Ok(VoronoiSpec::from_orbits(data.group, kind, orbits))
}

/// Ball window in the span of `perp_axes`.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSpec {
    /// 0-based frame indices spanning the perpendicular space.
    pub perp_axes: Vec<usize>,
    pub radius: f64,
    pub boundary_tol: f64,
    /// Smallest projected vertex norm; equal to `radius` when all vertices
    /// project onto one sphere.
    pub min_vertex_norm: f64,
}

impl WindowSpec {
    /// A window with an explicit radius.
    pub fn with_radius(perp_axes: Vec<usize>, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!("window radius must be positive, got {radius}")));
        }
        Ok(Self {
            perp_axes,
            radius,
            boundary_tol: BOUNDARY_TOL,
            min_vertex_norm: radius,
        })
    }

    pub fn contains(&self, perp_norm: f64) -> bool {
        perp_norm <= self.radius + self.boundary_tol
    }
}

fn check_axes(frame: &SpectralFrame, axes: &[usize]) -> Result<()> {
    for &axis in axes {
        if axis >= frame.rank() {
            return Err(Error::AxisOutOfRange {
                axis,
                rank: frame.rank(),
            });
        }
    }
    Ok(())
}

/// Norm of the components of a weight-coordinate vector along `axes`.
pub(crate) fn axes_norm(frame: &SpectralFrame, a: &[i64], axes: &[usize]) -> f64 {
    axes.iter()
        .map(|&i| {
            let q: f64 = frame.vectors[i]
                .functional
                .iter()
                .zip(a)
                .map(|(f, &x)| f * x as f64)
                .sum();
            q * q
        })
        .sum::<f64>()
        .sqrt()
}

/// Radius of the circumscribed ball of the Voronoi cell projected onto the
/// span of `perp_axes`, with the orbit scale factors applied.
pub fn window_radius(voronoi: &VoronoiSpec, frame: &SpectralFrame, perp_axes: &[usize]) -> Result<WindowSpec> {
    if perp_axes.is_empty() {
        return Err(Error::InvalidArgument("window needs at least one axis".into()));
    }
    check_axes(frame, perp_axes)?;
    if voronoi.group != frame.group() {
        return Err(Error::InvalidArgument(format!(
            "Voronoi cell of {} used with frame of {}",
            voronoi.group,
            frame.group()
        )));
    }
    let mut max: f64 = 0.0;
    let mut min = f64::INFINITY;
    for (scale, a) in voronoi.vertices() {
        let r = ratio_to_f64(&scale).abs() * axes_norm(frame, a, perp_axes);
        max = max.max(r);
        min = min.min(r);
    }
    if max <= 1e-12 {
        return Err(Error::EmptyWindow);
    }
    Ok(WindowSpec {
        perp_axes: perp_axes.to_vec(),
        radius: max,
        boundary_tol: BOUNDARY_TOL,
        min_vertex_norm: min,
    })
}

/// Largest radius `r` such that every lattice point whose parallel
/// component has norm at most `r` and which lies in `window` is inside the
/// enumerated box of the given `range`.
///
/// Clipping the projected set to this disc removes the box's corners, which
/// would otherwise break the rotational symmetry of the output. Returns
/// `None` if some axis is neither parallel nor in the window, since then no
/// such disc exists.
pub fn complete_disc_radius(
    frame: &SpectralFrame,
    generators: Generators,
    range: u32,
    par_axes: [usize; 2],
    window: &WindowSpec,
) -> Option<f64> {
    let n = frame.rank();
    let rows = generators.weight_rows(&frame.data);
    // e[k][i]: component i of generator k
    let e = DMatrix::from_fn(n, n, |k, i| {
        frame.vectors[i]
            .functional
            .iter()
            .zip(&rows[k])
            .map(|(f, &x)| f * x as f64)
            .sum::<f64>()
    });
    // coefficient k of v is (v, u_k) with u_k column k of e⁻¹
    let inv = e.try_inverse()?;
    let mut best = f64::INFINITY;
    for k in 0..n {
        let mut par = 0.0;
        let mut perp = 0.0;
        let mut other = 0.0;
        for i in 0..n {
            let u = inv[(i, k)];
            if par_axes.contains(&i) {
                par += u * u;
            } else if window.perp_axes.contains(&i) {
                perp += u * u;
            } else {
                other += u * u;
            }
        }
        if other.sqrt() > 1e-12 {
            return None;
        }
        if par.sqrt() <= 1e-12 {
            continue;
        }
        let r = (range as f64 + 1.0 - (window.radius + window.boundary_tol) * perp.sqrt()) / par.sqrt();
        best = best.min(r);
    }
    if !best.is_finite() {
        return Some(f64::INFINITY);
    }
    Some((best - 1e-7).max(0.0))
}
