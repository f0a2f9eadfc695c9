//! CSV and JSON output with a fixed 12-significant-digit number format.

use std::fs;
use std::path::Path;

use quasiproj_core::{cmp_xy, EdgeSet, GroupId, LatticeKind, ProjectedPointSet};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest text that reads back as [`round12`]`(x)`.
pub fn format_number(x: f64) -> String {
    round12(x).to_string()
}

/// Points rounded and sorted by `(x, y)`, with edges renumbered to match.
#[derive(Debug, Clone, PartialEq)]
pub struct Canonical {
    pub points: Vec<[f64; 2]>,
    pub edges: Vec<(usize, usize)>,
}

pub fn canonicalize(ps: &ProjectedPointSet, edges: Option<&EdgeSet>) -> Canonical {
    let rounded: Vec<[f64; 2]> = ps.points.iter().map(|p| [round12(p.x), round12(p.y)]).collect();
    let mut order: Vec<usize> = (0..rounded.len()).collect();
    order.sort_by(|&a, &b| cmp_xy(&rounded[a], &rounded[b]).then(a.cmp(&b)));
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut e: Vec<(usize, usize)> = edges
        .map(|es| {
            es.edges
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (rank[i], rank[j]);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .unwrap_or_default();
    e.sort_unstable();
    Canonical {
        points: order.iter().map(|&i| rounded[i]).collect(),
        edges: e,
    }
}

pub fn to_csv(ps: &ProjectedPointSet) -> String {
    let mut out = String::from("x,y\n");
    for [x, y] in canonicalize(ps, None).points {
        out.push_str(&format_number(x));
        out.push(',');
        out.push_str(&format_number(y));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub group: String,
    pub lattice: LatticeKind,
    pub range: u32,
    /// 1-based parallel axes.
    pub plane: [usize; 2],
    pub radius: f64,
    pub count: usize,
}

impl Meta {
    pub fn new(group: GroupId, lattice: LatticeKind, range: u32, par_axes: [usize; 2], radius: f64, count: usize) -> Self {
        Self {
            group: group.to_string(),
            lattice,
            range,
            plane: [par_axes[0] + 1, par_axes[1] + 1],
            radius: round12(radius),
            count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub meta: Meta,
    pub points: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

/// JSON document with one point or edge per line.
pub fn to_json(ps: &ProjectedPointSet, edges: Option<&EdgeSet>, meta: Meta) -> String {
    let c = canonicalize(ps, edges);
    let meta = Meta {
        count: c.points.len(),
        ..meta
    };
    let mut out = String::from("{\n  \"meta\": ");
    out.push_str(&serde_json::to_string(&meta).expect("meta serializes"));
    out.push_str(",\n  \"points\": [");
    let rows: Vec<String> = c
        .points
        .iter()
        .map(|&[x, y]| format!("\n    [{}, {}]", format_number(x), format_number(y)))
        .collect();
    out.push_str(&rows.join(","));
    out.push_str(if rows.is_empty() { "],\n" } else { "\n  ],\n" });
    out.push_str("  \"edges\": [");
    let rows: Vec<String> = c.edges.iter().map(|(i, j)| format!("\n    [{i}, {j}]")).collect();
    out.push_str(&rows.join(","));
    out.push_str(if rows.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}

pub fn from_json(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| CliError::config(format!("invalid point document: {e}")))
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[[f64; 2]]) -> ProjectedPointSet {
        ProjectedPointSet::from_coords(GroupId::F4, [0, 3], coords)
    }

    #[test]
    fn numbers() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(-1e-17), "-0.00000000000000001");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(2f64.sqrt() * 1e6), "1414213.56237");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
    }

    #[test]
    fn empty_csv() {
        assert_eq!(to_csv(&set(&[])), "x,y\n");
    }

    #[test]
    fn csv_sorted() {
        let csv = to_csv(&set(&[[1.0, 0.0], [-1.0, 2.0], [-1.0, -2.0]]));
        assert_eq!(csv, "x,y\n-1,-2\n-1,2\n1,0\n");
    }

    #[test]
    fn edges_follow_points() {
        let ps = set(&[[1.0, 0.0], [0.0, 0.0], [-1.0, 0.0]]);
        let edges = EdgeSet {
            edges: vec![(0, 1), (1, 2)],
            edge_length: 1.0,
        };
        let c = canonicalize(&ps, Some(&edges));
        assert_eq!(c.points, vec![[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(c.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn json_round_trip() {
        let ps = set(&[[0.1 + 0.2, 1.0 / 7.0], [-3.5e-5, 12345.678901234]]);
        let meta = Meta::new(GroupId::F4, LatticeKind::Root, 3, [0, 3], 0.444, 0);
        let text = to_json(&ps, None, meta);
        let doc = from_json(&text).unwrap();
        assert_eq!(doc.meta.count, 2);
        assert_eq!(doc.meta.plane, [1, 4]);
        let back: Vec<String> = doc.points.iter().flat_map(|p| p.map(format_number)).collect();
        let orig: Vec<String> = canonicalize(&ps, None).points.iter().flat_map(|p| p.map(format_number)).collect();
        assert_eq!(back, orig);
        assert!(from_json("{}").is_err());
        let empty = to_json(&set(&[]), None, Meta::new(GroupId::F4, LatticeKind::Root, 0, [0, 3], 1.0, 0));
        assert_eq!(from_json(&empty).unwrap().points, Vec::<[f64; 2]>::new());
    }
}
