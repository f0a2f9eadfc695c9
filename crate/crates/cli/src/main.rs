use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use quasiproj_core::{
    cartan_matrix, eigensystem, orthonormal_frame, parse_ratio, voronoi_vertices, weyl_orbit_bounded, window_radius,
    Basis, GroupId, LatticeKind, LatticeVector, DEFAULT_ORBIT_BUDGET,
};
use quasiproj_cli::config::{parse_config, parse_list, RunConfig};
use quasiproj_cli::export::format_number;
use quasiproj_cli::verify::{run_suite, Suite};
use quasiproj_cli::{run_pipeline, CliError, Result};

#[derive(Parser)]
#[command(name = "quasiproj", version, about = "Planar quasicrystals by projecting Coxeter-Weyl lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan eigenvalues against the exponent formula.
    Eigen {
        #[arg(long)]
        group: String,
    },
    /// Weyl orbit of a seed vector.
    Orbit {
        #[arg(long)]
        group: String,
        /// Comma-separated integer coefficients.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value = "weight")]
        basis: String,
        /// Rational scale such as `1/3`.
        #[arg(long, default_value = "1")]
        scale: String,
        /// Print the orbit as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ORBIT_BUDGET)]
        budget: u64,
    },
    /// Voronoi vertex count and window radius.
    Window {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "root")]
        lattice: String,
        /// 1-based perpendicular axes, e.g. `2,3`.
        #[arg(long)]
        perp: String,
    },
    /// Cut-and-project a lattice onto a plane.
    Project(Box<ProjectArgs>),
    /// Run built-in checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct ProjectArgs {
    /// Flat `key = value` file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long)]
    range: Option<String>,
    /// 1-based plane number.
    #[arg(long)]
    plane: Option<String>,
    /// Explicit 1-based axis pair, e.g. `2,3`.
    #[arg(long)]
    axes: Option<String>,
    /// `auto` or a radius.
    #[arg(long)]
    window: Option<String>,
    #[arg(long)]
    csv: Option<String>,
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    svg: Option<String>,
    /// Compute and draw minimal-distance edges.
    #[arg(long)]
    edges: bool,
    /// Keep every windowed point of the box instead of the complete disc.
    #[arg(long)]
    no_clip: bool,
    #[arg(long)]
    point_radius: Option<String>,
    #[arg(long)]
    canvas: Option<String>,
    #[arg(long)]
    budget: Option<String>,
}

impl ProjectArgs {
    fn into_config(self) -> Result<RunConfig> {
        let mut pairs = match &self.config {
            Some(path) => parse_config(&fs::read_to_string(path).map_err(|e| CliError::io(path, e))?)?,
            None => BTreeMap::new(),
        };
        // a plane given on the command line replaces either form in the file
        if self.plane.is_some() {
            pairs.remove("axes");
        }
        if self.axes.is_some() {
            pairs.remove("plane");
        }
        let mut set = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                pairs.insert(k.to_string(), v);
            }
        };
        set("group", self.group);
        set("lattice", self.lattice);
        set("range", self.range);
        set("plane", self.plane);
        set("axes", self.axes);
        set("window", self.window);
        set("csv", self.csv);
        set("json", self.json);
        set("svg", self.svg);
        set("edges", self.edges.then(|| "true".into()));
        set("clip", self.no_clip.then(|| "false".into()));
        set("point_radius", self.point_radius);
        set("canvas", self.canvas);
        set("budget", self.budget);
        RunConfig::from_pairs(&pairs)
    }
}

fn group(s: &str) -> Result<GroupId> {
    Ok(s.parse()?)
}

fn eigen(g: GroupId) -> Result<()> {
    let data = cartan_matrix(g);
    let frame = orthonormal_frame(&data)?;
    println!("{g}: h = {}", data.coxeter_number);
    println!("{:>3} {:>4} {:>16} {:>16}", "i", "m", "eigenvalue", "2(1-cos(m pi/h))");
    for (i, p) in eigensystem(&data)?.iter().enumerate() {
        println!(
            "{:>3} {:>4} {:>16} {:>16}",
            i + 1,
            p.exponent,
            format_number(p.eigenvalue),
            format_number(data.closed_form_eigenvalue(p.exponent))
        );
    }
    println!("orthonormality defect {:.2e}", frame.orthonormality_defect());
    Ok(())
}

fn orbit(g: GroupId, seed: &str, basis: &str, scale: &str, json: bool, budget: u64) -> Result<()> {
    let data = cartan_matrix(g);
    let coeffs = seed
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| CliError::config(format!("invalid seed {seed:?}")))?;
    let basis = match basis {
        "weight" => Basis::Weight,
        "root" => Basis::Root,
        _ => return Err(CliError::config(format!("unknown basis {basis:?}"))),
    };
    let scale = parse_ratio(scale).ok_or_else(|| CliError::config(format!("invalid scale {scale:?}")))?;
    let orbit = weyl_orbit_bounded(&data, &LatticeVector { coeffs, basis }, scale, budget)?;
    if json {
        println!("{}", serde_json::to_string(&orbit).expect("orbit serializes"));
    } else {
        println!("{}", orbit.len());
    }
    Ok(())
}

fn window(g: GroupId, lattice: &str, perp: &str) -> Result<()> {
    let data = cartan_matrix(g);
    let kind: LatticeKind = lattice.parse()?;
    let axes = parse_list(perp)?;
    if axes.iter().any(|&a| a == 0 || a > g.rank()) {
        return Err(CliError::config(format!("perp axes {perp:?} out of range 1..={}", g.rank())));
    }
    let axes: Vec<usize> = axes.iter().map(|a| a - 1).collect();
    let frame = orthonormal_frame(&data)?;
    let cell = voronoi_vertices(&data, kind)?;
    let w = window_radius(&cell, &frame, &axes)?;
    println!("vertices {}", cell.vertex_count);
    println!("R0 {}", format_number(w.radius));
    println!("min {}", format_number(w.min_vertex_norm));
    Ok(())
}

fn verify(suite: &str) -> Result<()> {
    let checks = run_suite(suite.parse::<Suite>()?)?;
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} of {} checks passed", checks.len() - failed, checks.len());
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eigen { group: g } => eigen(group(&g)?),
        Command::Orbit {
            group: g,
            seed,
            basis,
            scale,
            json,
            budget,
        } => orbit(group(&g)?, &seed, &basis, &scale, json, budget),
        Command::Window { group: g, lattice, perp } => window(group(&g)?, &lattice, &perp),
        Command::Project(args) => {
            let summary = run_pipeline(&args.into_config()?)?;
            println!("{summary}");
            Ok(())
        }
        Command::Verify { suite } => verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("{}", CliError::config(first).report());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.report());
            e.exit()
        }
    }
}
