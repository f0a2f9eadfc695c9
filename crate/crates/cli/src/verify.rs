//! Self-checks behind `quasiproj verify`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use quasiproj_core::{
    cartan_matrix, coxeter_rotation_angles, eigensystem, group_order, incident_angles, interior_vertices,
    minimal_edges, orbit_points, orthonormal_frame, voronoi_vertices, vertex_degrees, GroupId, LatticeKind,
    ProjectedPointSet,
};

use crate::config::{PlaneSelect, RunConfig};
use crate::error::{CliError, Result};
use crate::pipeline::{project, MAX_SYMMETRY_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Exponents,
    Orbits,
    Orders,
    Frames,
    Symmetry,
    All,
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exponents" => Suite::Exponents,
            "orbits" => Suite::Orbits,
            "orders" => Suite::Orders,
            "frames" => Suite::Frames,
            "symmetry" => Suite::Symmetry,
            "all" => Suite::All,
            _ => return Err(CliError::config(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Groups whose eigenvalues are checked against the exponent formula.
pub fn exponent_groups() -> Vec<GroupId> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(format!("A{n}"));
    }
    for n in 2..=8 {
        out.push(format!("B{n}"));
        out.push(format!("C{n}"));
    }
    for n in 4..=8 {
        out.push(format!("D{n}"));
    }
    out.extend(["E6", "F4", "G2"].map(String::from));
    out.iter().map(|s| s.parse().expect("valid group")).collect()
}

fn exponents() -> Vec<Check> {
    exponent_groups()
        .into_iter()
        .map(|g| {
            let data = cartan_matrix(g);
            match eigensystem(&data) {
                Ok(pairs) => {
                    let mut got: Vec<f64> = pairs.iter().map(|p| p.eigenvalue).collect();
                    got.sort_by(f64::total_cmp);
                    let mut want: Vec<f64> = data.exponents.iter().map(|&m| data.closed_form_eigenvalue(m)).collect();
                    want.sort_by(f64::total_cmp);
                    let err = got.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                    Check::new(format!("eigenvalues {g}"), err < 1e-9, format!("max error {err:.2e}"))
                }
                Err(e) => Check::new(format!("eigenvalues {g}"), false, e.to_string()),
            }
        })
        .collect()
}

fn orbit_size(g: GroupId, seed: usize) -> Result<usize> {
    let data = cartan_matrix(g);
    let mut v = vec![0; g.rank()];
    v[seed] = 1;
    Ok(orbit_points(&data, &v, u64::MAX)?.len())
}

fn orbits() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (g, want) in [
        (GroupId::B6, [12, 60, 160, 240, 192, 64]),
        (GroupId::E6, [27, 216, 720, 216, 27, 72]),
    ] {
        let got = (0..6).map(|i| orbit_size(g, i)).collect::<Result<Vec<_>>>()?;
        out.push(Check::new(
            format!("fundamental orbits {g}"),
            got == want,
            format!("{got:?}"),
        ));
    }
    for (g, kind, want) in [
        (GroupId::F4, LatticeKind::Root, 24),
        (GroupId::E6, LatticeKind::Root, 54),
        (GroupId::E6, LatticeKind::Weight, 720),
    ] {
        let got = voronoi_vertices(&cartan_matrix(g), kind)?.vertex_count;
        out.push(Check::new(
            format!("Voronoi vertices {g} {kind}"),
            got == want,
            got.to_string(),
        ));
    }
    Ok(out)
}

fn orders() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (g, want) in [(GroupId::F4, 1152), (GroupId::B6, 46080), (GroupId::E6, 51840)] {
        let got = group_order(&cartan_matrix(g))?;
        out.push(Check::new(format!("order {g}"), got == want, got.to_string()));
    }
    Ok(out)
}

/// Rotation angles of the Coxeter element per plane, in degrees.
pub fn rotation_degrees(g: GroupId) -> Result<Vec<f64>> {
    let frame = orthonormal_frame(&cartan_matrix(g))?;
    Ok(coxeter_rotation_angles(&frame)?
        .iter()
        .map(|r| r.angle.to_degrees())
        .collect())
}

fn frames() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (g, want) in [
        (GroupId::F4, vec![30.0, 150.0]),
        (GroupId::B6, vec![30.0, 90.0, 150.0]),
        (GroupId::E6, vec![30.0, 120.0, 150.0]),
    ] {
        let frame = orthonormal_frame(&cartan_matrix(g))?;
        let defect = frame.orthonormality_defect();
        out.push(Check::new(
            format!("orthonormal frame {g}"),
            defect < 1e-9,
            format!("defect {defect:.2e}"),
        ));
        let mut got = rotation_degrees(g)?;
        got.sort_by(f64::total_cmp);
        let ok = got.len() == want.len() && got.iter().zip(&want).all(|(a, b)| (a - b).abs() < 1e-9);
        out.push(Check::new(format!("rotation angles {g}"), ok, format!("{got:?}")));
    }
    Ok(out)
}

/// Angular gaps between consecutive edges at every interior vertex, keyed
/// by vertex index.
pub fn interior_gaps(set: &ProjectedPointSet) -> BTreeMap<usize, Vec<f64>> {
    let edges = minimal_edges(set);
    interior_vertices(set, 1.5 * edges.edge_length)
        .into_iter()
        .map(|v| {
            let a = incident_angles(set, &edges, v);
            let gaps = (0..a.len())
                .map(|k| if k + 1 < a.len() { a[k + 1] - a[k] } else { a[0] + 2.0 * PI - a[k] })
                .collect();
            (v, gaps)
        })
        .collect()
}

/// Whether every interior vertex has `degree` edges at equal angles
/// (within 1e-4 rad), with a histogram of the degrees seen.
pub fn regular_vertex_check(set: &ProjectedPointSet, degree: usize) -> (bool, String) {
    let gaps = interior_gaps(set);
    let edges = minimal_edges(set);
    let deg = vertex_degrees(set.len(), &edges);
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for v in gaps.keys() {
        *hist.entry(deg[*v]).or_default() += 1;
    }
    let target = 2.0 * PI / degree as f64;
    let ok = !gaps.is_empty()
        && gaps
            .values()
            .all(|g| g.len() == degree && g.iter().all(|x| (x - target).abs() < 1e-4));
    (
        ok,
        format!("interior degrees {hist:?}, edge length {:.6}", edges.edge_length),
    )
}

fn projection(g: GroupId, kind: LatticeKind, range: u32, plane: PlaneSelect) -> Result<ProjectedPointSet> {
    let mut cfg = RunConfig::new(g, kind);
    cfg.range = range;
    cfg.plane = plane;
    Ok(project(&cfg)?.set)
}

fn symmetry() -> Result<Vec<Check>> {
    use quasiproj_core::detect_symmetry_order as sym;
    let mut out = Vec::new();
    let dihedral = |name: &str, set: &ProjectedPointSet, k: u32| {
        let s = sym(set, MAX_SYMMETRY_ORDER);
        Check::new(
            name,
            s.order == k && s.mirror,
            format!("order {} mirror {} ({} points)", s.order, s.mirror, set.len()),
        )
    };
    let f4 = projection(GroupId::F4, LatticeKind::Root, 3, PlaneSelect::Index(1))?;
    out.push(dihedral("F4 root plane 1", &f4, 12));
    let f4_swap = projection(GroupId::F4, LatticeKind::Root, 3, PlaneSelect::Axes(2, 3))?;
    out.push(dihedral("F4 root plane swapped", &f4_swap, 12));
    let b6 = projection(GroupId::B6, LatticeKind::Root, 2, PlaneSelect::Index(1))?;
    out.push(dihedral("B6 root plane 1", &b6, 12));
    let e6 = projection(GroupId::E6, LatticeKind::Root, 2, PlaneSelect::Index(1))?;
    out.push(dihedral("E6 root plane 1", &e6, 12));

    let square = projection(GroupId::B6, LatticeKind::Root, 2, PlaneSelect::Index(2))?;
    out.push(dihedral("B6 root plane 2", &square, 4));
    let (ok, detail) = regular_vertex_check(&square, 4);
    out.push(Check::new("B6 root plane 2 square edges", ok, detail));

    let hex = projection(GroupId::E6, LatticeKind::Weight, 2, PlaneSelect::Index(2))?;
    let s = sym(&hex, MAX_SYMMETRY_ORDER);
    out.push(Check::new(
        "E6 weight plane 2 three-fold",
        s.order.is_multiple_of(3) && s.mirror,
        format!("order {} mirror {} ({} points)", s.order, s.mirror, hex.len()),
    ));
    let (ok, detail) = regular_vertex_check(&hex, 3);
    out.push(Check::new("E6 weight plane 2 honeycomb edges", ok, detail));
    Ok(out)
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Exponents => exponents(),
        Suite::Orbits => orbits()?,
        Suite::Orders => orders()?,
        Suite::Frames => frames()?,
        Suite::Symmetry => symmetry()?,
        Suite::All => {
            let mut all = exponents();
            all.extend(orbits()?);
            all.extend(orders()?);
            all.extend(frames()?);
            all.extend(symmetry()?);
            all
        }
    })
}
