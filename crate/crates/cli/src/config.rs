//! Run configuration: a flat `key = value` file merged with command-line
//! flags, flags winning.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use quasiproj_core::{GroupId, LatticeKind, DEFAULT_POINT_BUDGET};

use crate::error::{CliError, Result};

/// Keys accepted in config files and their flag equivalents.
pub const KEYS: &[&str] = &[
    "group",
    "lattice",
    "range",
    "plane",
    "axes",
    "window",
    "clip",
    "csv",
    "json",
    "svg",
    "edges",
    "point_radius",
    "canvas",
    "budget",
];

/// Which two frame axes span the parallel plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneSelect {
    /// 1-based plane number `k`, the span of `x̂_k, x̂_{n+1-k}`.
    Index(usize),
    /// Explicit 1-based axis pair.
    Axes(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowMode {
    Auto,
    Radius(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub point_radius: f64,
    /// Width and height of the SVG canvas in px.
    pub canvas: u32,
    pub draw_edges: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            point_radius: 3.0,
            canvas: 800,
            draw_edges: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub group: GroupId,
    pub lattice: LatticeKind,
    pub range: u32,
    pub plane: PlaneSelect,
    pub window: WindowMode,
    /// Restrict the output to the disc the enumerated box covers completely.
    pub clip: bool,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    /// Compute minimal-distance edges.
    pub edges: bool,
    pub render: RenderOptions,
    pub budget: u64,
}

impl RunConfig {
    /// Default range for a rank: 3 for rank ≤ 4, 2 above.
    pub fn default_range(rank: usize) -> u32 {
        if rank <= 4 {
            3
        } else {
            2
        }
    }

    pub fn new(group: GroupId, lattice: LatticeKind) -> Self {
        Self {
            group,
            lattice,
            range: Self::default_range(group.rank()),
            plane: PlaneSelect::Index(1),
            window: WindowMode::Auto,
            clip: true,
            csv: None,
            json: None,
            svg: None,
            edges: false,
            render: RenderOptions::default(),
            budget: DEFAULT_POINT_BUDGET,
        }
    }

    /// Builds a config from key/value pairs (file entries overlaid with
    /// flags).
    pub fn from_pairs(pairs: &BTreeMap<String, String>) -> Result<Self> {
        for key in pairs.keys() {
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::config(format!("unknown key {key:?}")));
            }
        }
        let get = |k: &str| pairs.get(k).map(String::as_str);
        let group: GroupId = get("group")
            .ok_or_else(|| CliError::config("missing group"))?
            .parse()?;
        let lattice: LatticeKind = get("lattice").unwrap_or("root").parse()?;
        let mut cfg = RunConfig::new(group, lattice);
        if let Some(v) = get("range") {
            cfg.range = parse_num("range", v)?;
        }
        if let Some(v) = get("plane") {
            cfg.plane = PlaneSelect::Index(parse_num("plane", v)?);
        }
        if let Some(v) = get("axes") {
            let axes = parse_list(v)?;
            let [i, j] = axes[..] else {
                return Err(CliError::config(format!("axes needs two entries, got {v:?}")));
            };
            cfg.plane = PlaneSelect::Axes(i, j);
        }
        if let Some(v) = get("window") {
            cfg.window = match v.trim() {
                "auto" => WindowMode::Auto,
                r => WindowMode::Radius(parse_num("window", r)?),
            };
        }
        if let Some(v) = get("clip") {
            cfg.clip = parse_bool("clip", v)?;
        }
        cfg.csv = get("csv").map(PathBuf::from);
        cfg.json = get("json").map(PathBuf::from);
        cfg.svg = get("svg").map(PathBuf::from);
        if let Some(v) = get("edges") {
            cfg.edges = parse_bool("edges", v)?;
            cfg.render.draw_edges = cfg.edges;
        }
        if let Some(v) = get("point_radius") {
            cfg.render.point_radius = parse_num("point_radius", v)?;
        }
        if let Some(v) = get("canvas") {
            cfg.render.canvas = parse_num("canvas", v)?;
        }
        if let Some(v) = get("budget") {
            cfg.budget = parse_num("budget", v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.group.rank();
        match self.plane {
            PlaneSelect::Index(k) if k == 0 || k > n / 2 => {
                return Err(CliError::config(format!(
                    "plane {k} out of range 1..={} for {}",
                    n / 2,
                    self.group
                )))
            }
            PlaneSelect::Axes(i, j) => {
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(CliError::config(format!("axes {i},{j} out of range 1..={n}")));
                }
                if i == j {
                    return Err(CliError::config(format!("axes {i},{j} coincide")));
                }
            }
            _ => {}
        }
        if let WindowMode::Radius(r) = self.window {
            if !(r > 0.0 && r.is_finite()) {
                return Err(CliError::config(format!("window radius must be positive, got {r}")));
            }
        }
        if !(self.render.point_radius > 0.0 && self.render.point_radius.is_finite()) {
            return Err(CliError::config("point_radius must be positive"));
        }
        if self.render.canvas == 0 {
            return Err(CliError::config("canvas must be positive"));
        }
        Ok(())
    }

    /// 0-based parallel axes.
    pub fn par_axes(&self) -> [usize; 2] {
        let n = self.group.rank();
        match self.plane {
            PlaneSelect::Index(k) => [k - 1, n - k],
            PlaneSelect::Axes(i, j) => [i - 1, j - 1],
        }
    }

    /// 0-based window axes: everything not parallel.
    pub fn perp_axes(&self) -> Vec<usize> {
        let par = self.par_axes();
        (0..self.group.rank()).filter(|i| !par.contains(i)).collect()
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::config(format!("line {}: expected key = value", no + 1)))?;
        let k = k.trim().replace('-', "_");
        if k.is_empty() {
            return Err(CliError::config(format!("line {}: empty key", no + 1)));
        }
        out.insert(k, v.trim().to_string());
    }
    Ok(out)
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| CliError::config(format!("invalid {key} value {v:?}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v.trim() {
        "true" | "on" | "yes" | "1" => Ok(true),
        "false" | "off" | "no" | "0" => Ok(false),
        _ => Err(CliError::config(format!("invalid {key} value {v:?}"))),
    }
}

/// `"2,3"` → `[2, 3]`.
pub fn parse_list(v: &str) -> Result<Vec<usize>> {
    v.split(',')
        .map(|s| parse_num("axis", s))
        .collect()
}
