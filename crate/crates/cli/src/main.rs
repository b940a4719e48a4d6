//! `perco-dual`: duality checks, crossing witnesses, surrounding envelopes,
//! exhaustive enumeration, Monte Carlo runs and SVG rendering for site
//! percolation on the square tiling.
//!
//! Exit codes: 0 success and all verdicts hold, 1 usage or input error,
//! 2 internal property violation, 3 requested witness absent.

mod mc;
mod output;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use perco_dual_core::{
    construct_vacant_plus_td, construct_vacant_star_td, duality_report, find_crossing,
    parse_configuration, surrounding_vacant_cycle, AdjacencyKind, Cell, CellState, Configuration,
    CrossingSpec, Error as CoreError, Orientation, Rect,
};

const DEFAULT_ENUM_CAP: u32 = 20;

#[derive(Parser)]
#[command(
    name = "perco-dual",
    version,
    about = "Exact crossing duality on the square site-percolation lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate all eight crossing events and the two exclusivity verdicts.
    Check {
        #[arg(long)]
        grid: PathBuf,
        /// Rectangle as MxN; defaults to the full grid.
        #[arg(long)]
        rect: Option<String>,
    },
    /// Produce a crossing witness for one event, constructively when the
    /// event is a vacant top-down crossing whose dual precondition holds.
    Witness {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        rect: Option<String>,
        #[command(flatten)]
        spec: SpecFlags,
    },
    /// Compute the surrounding vacant cycle of the component at a seed cell.
    Envelope {
        #[arg(long)]
        grid: PathBuf,
        /// Seed cell as C,R.
        #[arg(long)]
        seed_cell: String,
        /// Also write an SVG rendering to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 24)]
        cell_px: u32,
    },
    /// Count all eight events over every configuration of an MxN window.
    Enumerate {
        #[arg(long)]
        rect: String,
    },
    /// Estimate all eight event probabilities over seeded random windows.
    Mc {
        #[arg(long)]
        rect: String,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Render a grid (and optional overlays) as a deterministic SVG.
    Render {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated overlays: cells, boundary, skeleton, witness.
        #[arg(long, default_value = "cells")]
        layers: String,
        #[arg(long)]
        rect: Option<String>,
        /// Seed cell for the boundary and skeleton overlays; defaults to the
        /// first occupied cell.
        #[arg(long)]
        seed_cell: Option<String>,
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long, default_value_t = 24)]
        cell_px: u32,
    },
}

#[derive(Args, Default)]
struct SpecFlags {
    /// Left-right orientation.
    #[arg(long, conflicts_with = "td")]
    lr: bool,
    /// Top-down orientation.
    #[arg(long)]
    td: bool,
    /// Plus (edge) adjacency.
    #[arg(long, conflicts_with = "star")]
    plus: bool,
    /// Star (corner) adjacency.
    #[arg(long)]
    star: bool,
    /// Occupied cells.
    #[arg(long, conflicts_with = "vacant")]
    occupied: bool,
    /// Vacant cells.
    #[arg(long)]
    vacant: bool,
}

impl SpecFlags {
    fn parse(&self) -> Result<CrossingSpec, CliError> {
        let orientation = match (self.lr, self.td) {
            (true, false) => Orientation::LeftRight,
            (false, true) => Orientation::TopDown,
            _ => return Err(CliError::usage("exactly one of --lr/--td is required")),
        };
        let kind = match (self.plus, self.star) {
            (true, false) => AdjacencyKind::Plus,
            (false, true) => AdjacencyKind::Star,
            _ => return Err(CliError::usage("exactly one of --plus/--star is required")),
        };
        let state = match (self.occupied, self.vacant) {
            (true, false) => CellState::Occupied,
            (false, true) => CellState::Vacant,
            _ => {
                return Err(CliError::usage(
                    "exactly one of --occupied/--vacant is required",
                ))
            }
        };
        Ok(CrossingSpec::new(orientation, kind, state))
    }

    fn is_empty(&self) -> bool {
        !(self.lr || self.td || self.plus || self.star || self.occupied || self.vacant)
    }
}

pub(crate) struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: msg.into(),
        }
    }

    fn violation(msg: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: msg.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        CliError::usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprintln!("{e}");
                    ExitCode::from(1)
                }
            }
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { grid, rect } => cmd_check(&grid, rect.as_deref()),
        Command::Witness { grid, rect, spec } => cmd_witness(&grid, rect.as_deref(), &spec),
        Command::Envelope {
            grid,
            seed_cell,
            svg,
            cell_px,
        } => cmd_envelope(&grid, &seed_cell, svg.as_deref(), cell_px),
        Command::Enumerate { rect } => cmd_enumerate(&rect),
        Command::Mc {
            rect,
            p,
            trials,
            seed,
            workers,
        } => cmd_mc(&rect, p, trials, seed, workers),
        Command::Render {
            grid,
            out,
            layers,
            rect,
            seed_cell,
            spec,
            cell_px,
        } => cmd_render(
            &grid,
            &out,
            &layers,
            rect.as_deref(),
            seed_cell.as_deref(),
            &spec,
            cell_px,
        ),
    }
}

fn load_grid(path: &std::path::Path) -> Result<Configuration, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Ok(parse_configuration(&text)?)
}

fn parse_rect(arg: Option<&str>, cfg: Option<&Configuration>) -> Result<Rect, CliError> {
    let spec = match (arg, cfg) {
        (Some(s), _) => s.to_string(),
        (None, Some(cfg)) => format!("{}x{}", cfg.width(), cfg.height()),
        (None, None) => return Err(CliError::usage("--rect MxN is required")),
    };
    let (m, n) = spec
        .split_once(['x', 'X'])
        .ok_or_else(|| CliError::usage(format!("bad rectangle {spec:?}, expected MxN")))?;
    let m: i32 = m
        .parse()
        .map_err(|_| CliError::usage(format!("bad rectangle width {m:?}")))?;
    let n: i32 = n
        .parse()
        .map_err(|_| CliError::usage(format!("bad rectangle height {n:?}")))?;
    if m <= 0 || n <= 0 {
        return Err(CliError::usage("rectangle dimensions must be positive"));
    }
    if let Some(cfg) = cfg {
        if m > cfg.width() || n > cfg.height() {
            return Err(CliError::usage(format!(
                "rectangle {m}x{n} does not fit in the {}x{} grid",
                cfg.width(),
                cfg.height()
            )));
        }
    }
    Ok(Rect::new(m, n))
}

fn parse_cell(arg: &str) -> Result<Cell, CliError> {
    let (c, r) = arg
        .split_once(',')
        .ok_or_else(|| CliError::usage(format!("bad cell {arg:?}, expected C,R")))?;
    let col = c
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad cell column {c:?}")))?;
    let row = r
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad cell row {r:?}")))?;
    Ok(Cell::new(col, row))
}

fn cmd_check(grid: &std::path::Path, rect: Option<&str>) -> Result<u8, CliError> {
    let cfg = load_grid(grid)?;
    let rect = parse_rect(rect, Some(&cfg))?;
    let report = duality_report(&cfg, &rect);
    println!("{}", output::check_json(&rect, &report));
    if report.holds() {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn cmd_witness(
    grid: &std::path::Path,
    rect: Option<&str>,
    flags: &SpecFlags,
) -> Result<u8, CliError> {
    let cfg = load_grid(grid)?;
    let rect = parse_rect(rect, Some(&cfg))?;
    let spec = flags.parse()?;
    let (witness, method) = constructive_or_detect(&cfg, &rect, spec)?;
    match witness {
        Some(w) => {
            println!("{}", output::witness_json(&w, method));
            Ok(0)
        }
        None => {
            println!("null");
            Ok(3)
        }
    }
}

/// Use the constructive route for vacant top-down specs whenever its
/// precondition (no dual occupied left-right crossing) holds; fall back to
/// the detector otherwise.
fn constructive_or_detect(
    cfg: &Configuration,
    rect: &Rect,
    spec: CrossingSpec,
) -> Result<(Option<perco_dual_core::CrossingWitness>, &'static str), CliError> {
    if spec.orientation == Orientation::TopDown && spec.state == CellState::Vacant {
        let attempt = match spec.kind {
            AdjacencyKind::Plus => construct_vacant_plus_td(cfg, rect),
            AdjacencyKind::Star => construct_vacant_star_td(cfg, rect),
        };
        return match attempt {
            Ok(w) => Ok((Some(w), "construction")),
            Err(CoreError::CrossingExists { .. }) => {
                Ok((find_crossing(cfg, rect, spec), "detector"))
            }
            Err(e) => Err(CliError::violation(e.to_string())),
        };
    }
    Ok((find_crossing(cfg, rect, spec), "detector"))
}

fn cmd_envelope(
    grid: &std::path::Path,
    seed_cell: &str,
    svg: Option<&std::path::Path>,
    cell_px: u32,
) -> Result<u8, CliError> {
    let cfg = load_grid(grid)?;
    let seed = parse_cell(seed_cell)?;
    if cfg.cell_state(seed) != CellState::Occupied {
        return Err(CliError::usage(format!(
            "seed cell ({},{}) is vacant",
            seed.col, seed.row
        )));
    }
    let comp =
        perco_dual_core::connected_component(&cfg, seed, AdjacencyKind::Star, CellState::Occupied)?;
    let env = surrounding_vacant_cycle(&cfg, &comp)?;
    println!("{}", output::envelope_json(seed, &env));
    if let Some(path) = svg {
        let scene = render::Scene {
            cfg: &cfg,
            envelope: Some(&env),
            witness: None,
            layers: render::Layers {
                cells: true,
                boundary: true,
                skeleton: true,
                witness: false,
            },
        };
        std::fs::write(path, render::render_svg(&scene, cell_px)?)?;
    }
    if env.report.all_passed() {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn enumeration_cap() -> u32 {
    std::env::var("PERCO_ENUM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn cmd_enumerate(rect: &str) -> Result<u8, CliError> {
    let rect = parse_rect(Some(rect), None)?;
    let (m, n) = (rect.width(), rect.height());
    let cap = enumeration_cap();
    let mut counts = Vec::new();
    for spec in CrossingSpec::all() {
        let count = perco_dual_core::oracle::crossing_count_with_cap(m, n, spec, cap)?;
        counts.push((spec, count));
    }
    let violations = perco_dual_core::oracle::exhaustive_exclusivity_with_cap(m, n, cap)?;
    println!(
        "{}",
        output::enumerate_json(&rect, &counts, violations.len() as u64)
    );
    if violations.is_empty() {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn cmd_mc(rect: &str, p: f64, trials: u64, seed: u64, workers: usize) -> Result<u8, CliError> {
    let rect = parse_rect(Some(rect), None)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::usage(format!("probability {p} out of range")));
    }
    if trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let workers = workers.max(1);
    let counts = mc::run(&rect, p, trials, seed, workers);
    println!("{}", output::mc_json(&rect, p, trials, seed, &counts));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    grid: &std::path::Path,
    out: &std::path::Path,
    layers: &str,
    rect: Option<&str>,
    seed_cell: Option<&str>,
    spec: &SpecFlags,
    cell_px: u32,
) -> Result<u8, CliError> {
    let cfg = load_grid(grid)?;
    let layers = render::Layers::parse(layers)?;
    let envelope = if layers.boundary || layers.skeleton {
        let seed = match seed_cell {
            Some(s) => parse_cell(s)?,
            None => cfg
                .occupied_cells()
                .iter()
                .next()
                .copied()
                .ok_or_else(|| CliError::usage("grid has no occupied cell to surround"))?,
        };
        if cfg.cell_state(seed) != CellState::Occupied {
            return Err(CliError::usage(format!(
                "seed cell ({},{}) is vacant",
                seed.col, seed.row
            )));
        }
        let comp = perco_dual_core::connected_component(
            &cfg,
            seed,
            AdjacencyKind::Star,
            CellState::Occupied,
        )?;
        Some(surrounding_vacant_cycle(&cfg, &comp)?)
    } else {
        None
    };
    let witness = if layers.witness {
        if spec.is_empty() {
            return Err(CliError::usage(
                "the witness layer needs --lr/--td, --plus/--star and --occupied/--vacant",
            ));
        }
        let rect = parse_rect(rect, Some(&cfg))?;
        let (w, _) = constructive_or_detect(&cfg, &rect, spec.parse()?)?;
        w
    } else {
        None
    };
    let scene = render::Scene {
        cfg: &cfg,
        envelope: envelope.as_ref(),
        witness: witness.as_ref(),
        layers,
    };
    std::fs::write(out, render::render_svg(&scene, cell_px)?)?;
    Ok(0)
}
