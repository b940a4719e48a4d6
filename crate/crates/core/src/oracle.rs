//! Independent brute-force ground truth: exhaustive configuration
//! enumeration, union-find crossing detection, counting fixtures, seeded
//! random configurations, and the small-scale envelope search.
//!
//! The crossing check here deliberately shares no traversal code with the
//! breadth-first detector; agreement between the two is what the test
//! suites measure.

use crate::crossings::{CrossingSpec, Orientation, Rect};
use crate::dualization::{skeleton_of_scycle, vacant_frontier, SCycle};
use crate::error::{Error, Result};
use crate::lattice::{AdjacencyKind, Cell, CellSet, CellState, Configuration};
use crate::topology::{cell_in_interior, point_in_cycle, Region};

use rand_core::{RngCore, SeedableRng};

/// Hard cap for plain enumeration.
pub const ENUMERATION_CELL_CAP: u32 = 24;
/// Hard cap for the exhaustive property runs.
pub const EXHAUSTIVE_CELL_CAP: u32 = 20;

/// A property violation found during an exhaustive run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub config_index: u64,
    pub description: String,
}

/// Violations of a universally quantified property; empty iff it held.
pub type ViolationList = Vec<Violation>;

struct UnionFind {
    parents: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parents: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parents[x] != x {
            self.parents[x] = self.parents[self.parents[x]];
            x = self.parents[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parents[ra] = rb;
        }
    }
}

/// Existence-only crossing check by union-find over state-matching cells:
/// true iff some state-matching kind-connected set links the start side of
/// the rectangle to the end side.
pub fn naive_crossing_exists(cfg: &Configuration, r: &Rect, spec: CrossingSpec) -> bool {
    let (w, h) = (r.width(), r.height());
    let cells = (w * h) as usize;
    let start = cells;
    let end = cells + 1;
    let mut dsu = UnionFind::new(cells + 2);
    let idx = |col: i32, row: i32| (row * w + col) as usize;
    let matches = |col: i32, row: i32| cfg.cell_state(Cell::new(col, row)) == spec.state;

    let steps: &[(i32, i32)] = match spec.kind {
        AdjacencyKind::Plus => &[(1, 0), (0, 1)],
        AdjacencyKind::Star => &[(1, 0), (0, 1), (1, 1), (1, -1)],
    };
    for row in 0..h {
        for col in 0..w {
            if !matches(col, row) {
                continue;
            }
            for (dc, dr) in steps {
                let (nc, nr) = (col + dc, row + dr);
                if nc >= 0 && nc < w && nr >= 0 && nr < h && matches(nc, nr) {
                    dsu.union(idx(col, row), idx(nc, nr));
                }
            }
            match spec.orientation {
                Orientation::LeftRight => {
                    if col == 0 {
                        dsu.union(idx(col, row), start);
                    }
                    if col == w - 1 {
                        dsu.union(idx(col, row), end);
                    }
                }
                Orientation::TopDown => {
                    if row == h - 1 {
                        dsu.union(idx(col, row), start);
                    }
                    if row == 0 {
                        dsu.union(idx(col, row), end);
                    }
                }
            }
        }
    }
    dsu.find(start) == dsu.find(end)
}

fn check_cap(m: i32, n: i32, cap: u32) -> Result<()> {
    assert!(m > 0 && n > 0, "dimensions must be positive");
    let cells = (m * n) as u32;
    if cells > cap {
        return Err(Error::EnumerationCap { cells, cap });
    }
    Ok(())
}

/// Call `visitor` once for each of the `2^(m*n)` configurations in integer
/// order, subject to an explicit cell cap.
pub fn enumerate_configs_with_cap<F: FnMut(u64, &Configuration)>(
    m: i32,
    n: i32,
    cap: u32,
    mut visitor: F,
) -> Result<()> {
    check_cap(m, n, cap.min(ENUMERATION_CELL_CAP))?;
    let total = 1u64 << (m * n);
    for index in 0..total {
        let cfg = Configuration::from_bit_index(m, n, index);
        visitor(index, &cfg);
    }
    Ok(())
}

/// Call `visitor` for every configuration of an `m x n` window, capped at
/// 24 cells.
pub fn enumerate_configs<F: FnMut(u64, &Configuration)>(m: i32, n: i32, visitor: F) -> Result<()> {
    enumerate_configs_with_cap(m, n, ENUMERATION_CELL_CAP, visitor)
}

/// Check both exclusivity pairs on every configuration; any recorded entry
/// is an implementation bug.
pub fn exhaustive_exclusivity(m: i32, n: i32) -> Result<ViolationList> {
    exhaustive_exclusivity_with_cap(m, n, EXHAUSTIVE_CELL_CAP)
}

pub fn exhaustive_exclusivity_with_cap(m: i32, n: i32, cap: u32) -> Result<ViolationList> {
    check_cap(m, n, cap.min(ENUMERATION_CELL_CAP))?;
    let r = Rect::new(m, n);
    let mut violations = Vec::new();
    let pairs = [
        CrossingSpec::new(
            Orientation::LeftRight,
            AdjacencyKind::Plus,
            CellState::Occupied,
        ),
        CrossingSpec::new(
            Orientation::LeftRight,
            AdjacencyKind::Star,
            CellState::Occupied,
        ),
    ];
    enumerate_configs_with_cap(m, n, cap, |index, cfg| {
        for spec in pairs {
            let a = naive_crossing_exists(cfg, &r, spec);
            let b = naive_crossing_exists(cfg, &r, spec.dual());
            if a == b {
                violations.push(Violation {
                    config_index: index,
                    description: format!(
                        "{} = {a} and {} = {b} must differ",
                        spec.label(),
                        spec.dual().label()
                    ),
                });
            }
        }
    })?;
    Ok(violations)
}

/// Number of configurations of an `m x n` window where the event occurs.
pub fn crossing_count(m: i32, n: i32, spec: CrossingSpec) -> Result<u64> {
    crossing_count_with_cap(m, n, spec, EXHAUSTIVE_CELL_CAP)
}

pub fn crossing_count_with_cap(m: i32, n: i32, spec: CrossingSpec, cap: u32) -> Result<u64> {
    check_cap(m, n, cap.min(ENUMERATION_CELL_CAP))?;
    let r = Rect::new(m, n);
    let mut count = 0u64;
    enumerate_configs_with_cap(m, n, cap, |_, cfg| {
        if naive_crossing_exists(cfg, &r, spec) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Deterministic Bernoulli(p) configuration from a ChaCha8 stream seeded by
/// `seed`. Cells are drawn in row-major bit order; each draw takes the top
/// 53 bits of one 64-bit output as a uniform in `[0, 1)`. The output is
/// identical across platforms for identical arguments.
pub fn random_config(m: i32, n: i32, p: f64, seed: u64) -> Result<Configuration> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityRange(p));
    }
    assert!(m > 0 && n > 0, "dimensions must be positive");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut occupied = Vec::new();
    for row in 0..n {
        for col in 0..m {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if u < p {
                occupied.push(Cell::new(col, row));
            }
        }
    }
    Ok(Configuration::from_occupied(m, n, occupied))
}

/// Brute-force search for every vacant plus-connected cell cycle drawn from
/// the component's frontier that surrounds the component: each returned
/// cycle keeps all component cells and all unused frontier cells strictly
/// inside its skeleton. Intended for small components only.
pub fn enumerate_surrounding_scycles(cfg: &Configuration, comp: &CellSet) -> Vec<SCycle> {
    let frontier = vacant_frontier(cfg, comp);
    let cells: Vec<Cell> = frontier.iter().copied().collect();
    let index_of = |c: &Cell| cells.binary_search(c).ok();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (i, c) in cells.iter().enumerate() {
        for nb in crate::lattice::neighbors(*c, AdjacencyKind::Plus) {
            if let Some(j) = index_of(&nb) {
                adj[i].push(j);
            }
        }
    }
    let mut found = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; cells.len()];
    for start in 0..cells.len() {
        path.push(start);
        on_path[start] = true;
        dfs_cycles(start, start, &adj, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
        path.pop();
    }
    found
        .into_iter()
        .filter_map(|indices| {
            let cycle_cells: Vec<Cell> = indices.iter().map(|i| cells[*i]).collect();
            let s = SCycle::new(cycle_cells, AdjacencyKind::Plus).ok()?;
            let skeleton = skeleton_of_scycle(&s).ok()?;
            let on_ring = s.cell_set();
            let surrounds = comp.iter().all(|c| cell_in_interior(skeleton.cycle(), *c))
                && frontier
                    .iter()
                    .filter(|c| !on_ring.contains(c))
                    .all(|c| point_in_cycle(skeleton.cycle(), c.center()) == Region::Inside);
            surrounds.then_some(s)
        })
        .collect()
}

fn dfs_cycles(
    start: usize,
    current: usize,
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    for &next in &adj[current] {
        if next == start && path.len() >= 4 {
            // canonical direction: second vertex smaller than the last
            if path[1] < path[path.len() - 1] {
                found.push(path.clone());
            }
        }
        if next > start && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            dfs_cycles(start, next, adj, path, on_path, found);
            on_path[next] = false;
            path.pop();
        }
    }
}
