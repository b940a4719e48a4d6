//! Deterministic SVG rendering: integer pixel geometry only, fixed palette,
//! byte-identical output for identical inputs.

use std::fmt::Write;

use perco_dual_core::{Cell, Configuration, CrossingWitness, EnvelopeResult};

use crate::CliError;

const OCCUPIED_FILL: &str = "#555555";
const VACANT_FILL: &str = "#ffffff";
const GRID_STROKE: &str = "#cccccc";
const ENVELOPE_STROKE: &str = "#888888";
const BOUNDARY_STROKE: &str = "#222222";
const SKELETON_STROKE: &str = "#b22222";
const WITNESS_STROKE: &str = "#1f6fb2";

#[derive(Debug, Clone, Copy, Default)]
pub struct Layers {
    pub cells: bool,
    pub boundary: bool,
    pub skeleton: bool,
    pub witness: bool,
}

impl Layers {
    pub fn parse(arg: &str) -> Result<Layers, CliError> {
        // the cell grid is always drawn; overlays toggle on top of it
        let mut layers = Layers {
            cells: true,
            ..Layers::default()
        };
        for token in arg.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "cells" => layers.cells = true,
                "boundary" => layers.boundary = true,
                "skeleton" => layers.skeleton = true,
                "witness" => layers.witness = true,
                other => {
                    return Err(CliError::usage(format!(
                        "unknown layer {other:?}; expected cells, boundary, skeleton or witness"
                    )))
                }
            }
        }
        Ok(layers)
    }
}

pub struct Scene<'a> {
    pub cfg: &'a Configuration,
    pub envelope: Option<&'a EnvelopeResult>,
    pub witness: Option<&'a CrossingWitness>,
    pub layers: Layers,
}

pub fn render_svg(scene: &Scene<'_>, cell_px: u32) -> Result<String, CliError> {
    if cell_px < 2 || !cell_px.is_multiple_of(2) {
        return Err(CliError::usage("--cell-px must be an even number >= 2"));
    }
    let px = cell_px as i64;
    let half = px / 2;
    let (w, h) = (scene.cfg.width() as i64, scene.cfg.height() as i64);
    let (width, height) = (w * px, h * px);
    // doubled coordinates to pixels, with y growing upward on the grid
    let sx = |x: i32| x as i64 * half;
    let sy = |y: i32| height - y as i64 * half;
    let cell_rect = |c: &Cell| {
        let x = c.col as i64 * px;
        let y = height - (c.row as i64 + 1) * px;
        (x, y)
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        svg,
        "  <defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">\
         <path d=\"M0,6 L6,0\" stroke=\"{WITNESS_STROKE}\" stroke-width=\"1\"/></pattern></defs>"
    );

    if scene.layers.cells {
        for row in 0..scene.cfg.height() {
            for col in 0..scene.cfg.width() {
                let c = Cell::new(col, row);
                let (x, y) = cell_rect(&c);
                let fill = if scene.cfg.is_occupied(c) {
                    OCCUPIED_FILL
                } else {
                    VACANT_FILL
                };
                let _ = writeln!(
                    svg,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{px}\" height=\"{px}\" \
                     fill=\"{fill}\" stroke=\"{GRID_STROKE}\" stroke-width=\"1\"/>"
                );
            }
        }
    }

    if let Some(env) = scene.envelope {
        if scene.layers.boundary {
            for c in env.ring.cells() {
                let (x, y) = cell_rect(c);
                let _ = writeln!(
                    svg,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{px}\" height=\"{px}\" fill=\"none\" \
                     stroke=\"{ENVELOPE_STROKE}\" stroke-width=\"2\" stroke-dasharray=\"3,3\"/>"
                );
            }
            let points: Vec<String> = env
                .outer_boundary
                .vertices()
                .iter()
                .map(|v| format!("{},{}", sx(v.x), sy(v.y)))
                .collect();
            let _ = writeln!(
                svg,
                "  <polygon points=\"{}\" fill=\"none\" stroke=\"{BOUNDARY_STROKE}\" \
                 stroke-width=\"2\"/>",
                points.join(" ")
            );
        }
        if scene.layers.skeleton {
            let points: Vec<String> = env
                .skeleton
                .cycle()
                .vertices()
                .iter()
                .map(|v| format!("{},{}", sx(v.x), sy(v.y)))
                .collect();
            let _ = writeln!(
                svg,
                "  <polygon points=\"{}\" fill=\"none\" stroke=\"{SKELETON_STROKE}\" \
                 stroke-width=\"2\" stroke-dasharray=\"6,4\"/>",
                points.join(" ")
            );
        }
    }

    if scene.layers.witness {
        if let Some(witness) = scene.witness {
            for c in &witness.cells {
                let (x, y) = cell_rect(c);
                let _ = writeln!(
                    svg,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{px}\" height=\"{px}\" \
                     fill=\"url(#hatch)\" stroke=\"{WITNESS_STROKE}\" stroke-width=\"2\"/>"
                );
            }
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
