//! JSON builders for the command outputs. `serde_json` maps are sorted, so
//! every output is byte-deterministic for identical inputs.

use serde_json::{json, Map, Value};

use perco_dual_core::{Cell, CrossingSpec, CrossingWitness, DualityReport, EnvelopeResult, Rect};

fn cell_value(c: &Cell) -> Value {
    json!([c.col, c.row])
}

fn cells_value<'a, I: IntoIterator<Item = &'a Cell>>(cells: I) -> Value {
    Value::Array(cells.into_iter().map(cell_value).collect())
}

fn vertices_value(cycle: &perco_dual_core::Cycle) -> Value {
    Value::Array(cycle.vertices().iter().map(|v| json!([v.x, v.y])).collect())
}

fn rect_value(r: &Rect) -> Value {
    Value::String(format!("{}x{}", r.width(), r.height()))
}

pub fn check_json(rect: &Rect, report: &DualityReport) -> String {
    let mut events = Map::new();
    for spec in CrossingSpec::all() {
        events.insert(spec.label().into(), Value::Bool(report.event(spec)));
    }
    json!({
        "rect": rect_value(rect),
        "events": events,
        "exclusivity": {
            "lr_plus_occupied_xor_td_star_vacant": report.exclusivity_plus_lr,
            "lr_star_occupied_xor_td_plus_vacant": report.exclusivity_star_lr,
        },
        "holds": report.holds(),
    })
    .to_string()
}

pub fn witness_json(w: &CrossingWitness, method: &str) -> String {
    json!({
        "spec": w.spec.label(),
        "method": method,
        "cells": cells_value(&w.cells),
    })
    .to_string()
}

pub fn envelope_json(seed: Cell, env: &EnvelopeResult) -> String {
    let checks: Vec<Value> = env
        .report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    json!({
        "coordinate_system": "doubled",
        "seed_cell": cell_value(&seed),
        "ring_cells": cells_value(env.ring.cells()),
        "skeleton_vertices": vertices_value(env.skeleton.cycle()),
        "outer_boundary_vertices": vertices_value(&env.outer_boundary),
        "frontier_cells": cells_value(env.frontier.iter()),
        "report": {
            "all_passed": env.report.all_passed(),
            "checks": checks,
        },
    })
    .to_string()
}

pub fn enumerate_json(rect: &Rect, counts: &[(CrossingSpec, u64)], violations: u64) -> String {
    let total = 1u64 << rect.cell_count();
    let mut count_map = Map::new();
    for (spec, count) in counts {
        count_map.insert(spec.label().into(), json!(count));
    }
    let mut pair_sums = Map::new();
    for (spec, count) in counts {
        let dual = spec.dual();
        if let Some((_, dual_count)) = counts.iter().find(|(s, _)| *s == dual) {
            let key = format!(
                "{}+{}",
                spec.label().min(dual.label()),
                spec.label().max(dual.label())
            );
            pair_sums.insert(key, json!(count + dual_count));
        }
    }
    json!({
        "rect": rect_value(rect),
        "configs": total,
        "counts": count_map,
        "pair_sums": pair_sums,
        "violations": violations,
    })
    .to_string()
}

pub fn mc_json(
    rect: &Rect,
    p: f64,
    trials: u64,
    seed: u64,
    counts: &[(CrossingSpec, u64)],
) -> String {
    let mut estimates = Map::new();
    for (spec, count) in counts {
        estimates.insert(spec.label().into(), json!(*count as f64 / trials as f64));
    }
    let mut identities = Map::new();
    for (spec, count) in counts {
        let dual = spec.dual();
        if spec.label() < dual.label() {
            if let Some((_, dual_count)) = counts.iter().find(|(s, _)| *s == dual) {
                identities.insert(
                    format!("{}+{}", spec.label(), dual.label()),
                    json!((count + dual_count) as f64 / trials as f64),
                );
            }
        }
    }
    json!({
        "rect": rect_value(rect),
        "p": p,
        "trials": trials,
        "seed": seed,
        "estimates": estimates,
        "identities": identities,
    })
    .to_string()
}
