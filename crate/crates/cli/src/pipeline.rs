//! enumerate → window → cut-and-project → analysis → export.

use std::fmt;
use std::time::{Duration, Instant};

use quasiproj_core::{
    cartan_matrix, complete_disc_radius, cut_and_project, detect_symmetry_order, enumerate_with, minimal_edges,
    orthonormal_frame, voronoi_vertices, window_radius, EdgeSet, Generators, ProjectedPointSet, SymmetryReport,
    WindowSpec,
};

use crate::config::{RunConfig, WindowMode};
use crate::error::Result;
use crate::export::{format_number, to_csv, to_json, write_file, Meta};
use crate::svg::render_svg;

/// Symmetry orders are searched up to this bound.
pub const MAX_SYMMETRY_ORDER: u32 = 24;

#[derive(Debug, Clone)]
pub struct Projection {
    pub set: ProjectedPointSet,
    pub window: WindowSpec,
    /// Radius of the parallel disc the output was clipped to.
    pub clip: Option<f64>,
    pub candidates: u64,
    pub edges: Option<EdgeSet>,
}

/// Runs the projection without writing anything.
pub fn project(cfg: &RunConfig) -> Result<Projection> {
    cfg.validate()?;
    let data = cartan_matrix(cfg.group);
    let frame = orthonormal_frame(&data)?;
    let par = cfg.par_axes();
    let perp = cfg.perp_axes();
    let window = match cfg.window {
        WindowMode::Auto => window_radius(&voronoi_vertices(&data, cfg.lattice)?, &frame, &perp)?,
        WindowMode::Radius(r) => WindowSpec::with_radius(perp, r)?,
    };
    let gens = Generators::preferred(cfg.group, cfg.lattice);
    let clip = if cfg.clip {
        complete_disc_radius(&frame, gens, cfg.range, par, &window)
    } else {
        None
    };
    let points = enumerate_with(&data, gens, cfg.range, cfg.budget)?;
    let candidates = points.total();
    let set = cut_and_project(points, &frame, par, &window, clip)?;
    let edges = (cfg.edges && set.len() >= 2).then(|| minimal_edges(&set));
    Ok(Projection {
        set,
        window,
        clip,
        candidates,
        edges,
    })
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub config: RunConfig,
    pub count: usize,
    pub candidates: u64,
    pub radius: f64,
    pub min_vertex_norm: f64,
    pub clip: Option<f64>,
    pub symmetry: SymmetryReport,
    pub edge_count: Option<usize>,
    pub edge_length: Option<f64>,
    pub elapsed: Duration,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        let [i, j] = c.par_axes();
        writeln!(f, "group      {} {} lattice, range {}", c.group, c.lattice, c.range)?;
        writeln!(f, "plane      x{} x{}", i + 1, j + 1)?;
        writeln!(
            f,
            "window     R0 = {} (vertex norms from {})",
            format_number(self.radius),
            format_number(self.min_vertex_norm)
        )?;
        match self.clip {
            Some(r) => writeln!(f, "clip       parallel disc of radius {}", format_number(r))?,
            None => writeln!(f, "clip       none")?,
        }
        writeln!(f, "points     {} of {} candidates", self.count, self.candidates)?;
        writeln!(
            f,
            "symmetry   {}{}",
            self.symmetry.order,
            if self.symmetry.mirror { " with mirror" } else { " (no mirror)" }
        )?;
        if let (Some(n), Some(l)) = (self.edge_count, self.edge_length) {
            writeln!(f, "edges      {} of length {}", n, format_number(l))?;
        }
        write!(f, "time       {:.3} s", self.elapsed.as_secs_f64())
    }
}

/// Projects, analyses and writes every configured output.
pub fn run_pipeline(cfg: &RunConfig) -> Result<Summary> {
    let start = Instant::now();
    let p = project(cfg)?;
    let symmetry = detect_symmetry_order(&p.set, MAX_SYMMETRY_ORDER);
    let edges = p.edges.as_ref();

    if let Some(path) = &cfg.csv {
        write_file(path, &to_csv(&p.set))?;
    }
    if let Some(path) = &cfg.json {
        let meta = Meta::new(cfg.group, cfg.lattice, cfg.range, cfg.par_axes(), p.window.radius, p.set.len());
        write_file(path, &to_json(&p.set, edges, meta))?;
    }
    if let Some(path) = &cfg.svg {
        write_file(path, &render_svg(&p.set, edges, &cfg.render))?;
    }

    Ok(Summary {
        config: cfg.clone(),
        count: p.set.len(),
        candidates: p.candidates,
        radius: p.window.radius,
        min_vertex_norm: p.window.min_vertex_norm,
        clip: p.clip,
        symmetry,
        edge_count: edges.map(EdgeSet::len),
        edge_length: edges.map(|e| e.edge_length),
        elapsed: start.elapsed(),
    })
}
