//! Corner-graph machinery: edges, paths, cycles, exact interior tests,
//! outermost boundaries of components, and cycle/square merging.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{is_connected, AdjacencyKind, Cell, CellSet, CornerPoint};

/// An undirected grid edge, stored with the lexicographically smaller
/// endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    a: CornerPoint,
    b: CornerPoint,
}

impl GridEdge {
    pub fn new(a: CornerPoint, b: CornerPoint) -> GridEdge {
        assert!(a.grid_adjacent(&b), "edge endpoints must be grid-adjacent");
        if a <= b {
            GridEdge { a, b }
        } else {
            GridEdge { a: b, b: a }
        }
    }

    pub fn a(&self) -> CornerPoint {
        self.a
    }

    pub fn b(&self) -> CornerPoint {
        self.b
    }

    /// Midpoint in doubled coordinates; always a mixed-parity point.
    pub fn midpoint(&self) -> CornerPoint {
        CornerPoint::new((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    /// The two cells flanking this edge, given that its endpoints are
    /// even-even corners. For a horizontal edge the first cell is above;
    /// for a vertical edge the first cell is to the east.
    pub fn flanking_cells(&self) -> (Cell, Cell) {
        if self.is_horizontal() {
            let (c, r) = (self.a.x / 2, self.a.y / 2);
            (Cell::new(c, r), Cell::new(c, r - 1))
        } else {
            let (c, r) = (self.a.x / 2, self.a.y / 2);
            (Cell::new(c, r), Cell::new(c - 1, r))
        }
    }

    pub fn translated(&self, dx: i32, dy: i32) -> GridEdge {
        GridEdge::new(self.a.translated(dx, dy), self.b.translated(dx, dy))
    }
}

/// The four edges of a cell.
pub fn cell_edges(c: Cell) -> [GridEdge; 4] {
    let [p0, p1, p2, p3] = c.corners();
    [
        GridEdge::new(p0, p1),
        GridEdge::new(p1, p2),
        GridEdge::new(p2, p3),
        GridEdge::new(p3, p0),
    ]
}

/// All edges of the squares of a component, deduplicated.
pub fn component_edge_graph(comp: &CellSet) -> Result<BTreeSet<GridEdge>> {
    if comp.is_empty() {
        return Err(Error::EmptyComponent);
    }
    let mut edges = BTreeSet::new();
    for c in comp.iter() {
        for e in cell_edges(*c) {
            edges.insert(e);
        }
    }
    Ok(edges)
}

/// An open path of grid edges given by its vertex chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePath {
    vertices: Vec<CornerPoint>,
}

impl EdgePath {
    pub fn new(vertices: Vec<CornerPoint>) -> Result<EdgePath> {
        if vertices.len() < 2 {
            return Err(Error::InvalidCycle("path needs at least one edge".into()));
        }
        let mut edges = BTreeSet::new();
        for w in vertices.windows(2) {
            if !w[0].grid_adjacent(&w[1]) {
                return Err(Error::InvalidCycle(format!(
                    "path vertices {} and {} are not grid-adjacent",
                    w[0], w[1]
                )));
            }
            if !edges.insert(GridEdge::new(w[0], w[1])) {
                return Err(Error::InvalidCycle(format!(
                    "repeated path edge between {} and {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(EdgePath { vertices })
    }

    pub fn vertices(&self) -> &[CornerPoint] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (CornerPoint, CornerPoint) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        self.vertices.windows(2).map(|w| GridEdge::new(w[0], w[1]))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Self-avoiding in the sense of distinct vertices throughout.
    pub fn is_self_avoiding(&self) -> bool {
        let set: BTreeSet<_> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }

    pub fn reversed(&self) -> EdgePath {
        let mut v = self.vertices.clone();
        v.reverse();
        EdgePath { vertices: v }
    }
}

/// Classification of a point against a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Inside,
    On,
    Outside,
}

/// A closed edge walk on the grid with distinct edges and a well-defined
/// even-odd interior.
///
/// Cycles produced by [`outermost_boundary`] are simple (every vertex has
/// degree exactly two). Merging a square into a cycle that touches it at a
/// lone corner produces a walk that revisits that corner once; such walks
/// carry vertex multiplicity two at the touch point and remain valid here.
#[derive(Debug, Clone)]
pub struct Cycle {
    vertices: Vec<CornerPoint>,
}

impl Cycle {
    pub fn new(vertices: Vec<CornerPoint>) -> Result<Cycle> {
        if vertices.len() < 4 {
            return Err(Error::InvalidCycle(format!(
                "cycle needs at least 4 edges, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len();
        let mut edges = BTreeSet::new();
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if !a.grid_adjacent(&b) {
                return Err(Error::InvalidCycle(format!(
                    "cycle vertices {a} and {b} are not grid-adjacent"
                )));
            }
            if !edges.insert(GridEdge::new(a, b)) {
                return Err(Error::InvalidCycle(format!(
                    "repeated edge between {a} and {b}"
                )));
            }
        }
        let mut mult: BTreeMap<CornerPoint, usize> = BTreeMap::new();
        for v in &vertices {
            *mult.entry(*v).or_insert(0) += 1;
        }
        if let Some((v, _)) = mult.iter().find(|(_, m)| **m > 2) {
            return Err(Error::InvalidCycle(format!(
                "vertex {v} visited more than twice"
            )));
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[CornerPoint] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| GridEdge::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn edge_set(&self) -> BTreeSet<GridEdge> {
        self.edges().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<CornerPoint> {
        self.vertices.iter().copied().collect()
    }

    pub fn contains_vertex(&self, p: &CornerPoint) -> bool {
        self.vertices.contains(p)
    }

    /// True when no vertex repeats (every vertex has degree exactly two).
    pub fn is_simple(&self) -> bool {
        self.vertex_set().len() == self.vertices.len()
    }

    /// Inclusive bounding box over vertices: `(min_x, min_y, max_x, max_y)`.
    pub fn bbox(&self) -> (i32, i32, i32, i32) {
        let mut xs = (i32::MAX, i32::MIN);
        let mut ys = (i32::MAX, i32::MIN);
        for v in &self.vertices {
            xs = (xs.0.min(v.x), xs.1.max(v.x));
            ys = (ys.0.min(v.y), ys.1.max(v.y));
        }
        (xs.0, ys.0, xs.1, ys.1)
    }

    pub fn translated(&self, dx: i32, dy: i32) -> Cycle {
        Cycle {
            vertices: self.vertices.iter().map(|v| v.translated(dx, dy)).collect(),
        }
    }

    /// Canonical vertex sequence: the lexicographically smallest rotation
    /// over both traversal directions. Used for equality and goldens.
    pub fn canonical(&self) -> Vec<CornerPoint> {
        let n = self.vertices.len();
        let mut best: Option<Vec<CornerPoint>> = None;
        let mut consider = |seq: Vec<CornerPoint>| match &best {
            Some(b) if *b <= seq => {}
            _ => best = Some(seq),
        };
        let rev: Vec<CornerPoint> = self.vertices.iter().rev().copied().collect();
        for start in 0..n {
            let mut fwd = Vec::with_capacity(n);
            let mut bwd = Vec::with_capacity(n);
            for i in 0..n {
                fwd.push(self.vertices[(start + i) % n]);
                bwd.push(rev[(start + i) % n]);
            }
            consider(fwd);
            consider(bwd);
        }
        best.unwrap()
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.vertices.len() == other.vertices.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Cycle {}

/// Exact even-odd classification of a point against a cycle.
///
/// The ray is cast along +x from the point offset by a half step, i.e. from
/// `(2p.x + 1, 2p.y + 1)` in quadrupled coordinates, so it never meets a
/// vertex and all arithmetic stays integral.
pub fn point_in_cycle(cyc: &Cycle, p: CornerPoint) -> Region {
    for e in cyc.edges() {
        if p == e.a() || p == e.b() || p == e.midpoint() {
            return Region::On;
        }
    }
    let (px, py) = (2 * p.x + 1, 2 * p.y + 1);
    let mut crossings = 0u32;
    let n = cyc.vertices.len();
    for i in 0..n {
        let a = cyc.vertices[i];
        let b = cyc.vertices[(i + 1) % n];
        if a.x != b.x {
            continue; // horizontal edges never meet the odd-y ray
        }
        let x = 2 * a.x;
        if x <= px {
            continue;
        }
        let (y0, y1) = (2 * a.y.min(b.y), 2 * a.y.max(b.y));
        if y0 < py && py < y1 {
            crossings += 1;
        }
    }
    if crossings % 2 == 1 {
        Region::Inside
    } else {
        Region::Outside
    }
}

/// An edge is interior to a cycle iff at least one endpoint is strictly
/// inside.
pub fn edge_in_interior(cyc: &Cycle, e: &GridEdge) -> bool {
    point_in_cycle(cyc, e.a()) == Region::Inside || point_in_cycle(cyc, e.b()) == Region::Inside
}

/// A cell is interior to a cycle iff its center is strictly inside. A unit
/// cell can never straddle a grid cycle with its center on it.
pub fn cell_in_interior(cyc: &Cycle, c: Cell) -> bool {
    point_in_cycle(cyc, c.center()) == Region::Inside
}

/// All cells of corner parity whose centers lie strictly inside the cycle.
pub fn cells_in_interior(cyc: &Cycle) -> CellSet {
    let (x0, y0, x1, y1) = cyc.bbox();
    let mut out = CellSet::new();
    for row in (y0.div_euclid(2) - 1)..=(y1.div_euclid(2) + 1) {
        for col in (x0.div_euclid(2) - 1)..=(x1.div_euclid(2) + 1) {
            let c = Cell::new(col, row);
            if cell_in_interior(cyc, c) {
                out.insert(c);
            }
        }
    }
    out
}

/// The outermost boundary of a component: a connected union of cycles with
/// pairwise disjoint interiors, meeting pairwise in at most one corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutermostBoundary {
    pub cycles: Vec<Cycle>,
    pub pinch_points: BTreeSet<CornerPoint>,
}

impl OutermostBoundary {
    pub fn edge_set(&self) -> BTreeSet<GridEdge> {
        self.cycles.iter().flat_map(|c| c.edges()).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<CornerPoint> {
        self.cycles
            .iter()
            .flat_map(|c| c.vertices().iter().copied())
            .collect()
    }

    /// The single cycle when the boundary has exactly one.
    pub fn single_cycle(&self) -> Option<&Cycle> {
        if self.cycles.len() == 1 {
            Some(&self.cycles[0])
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    E,
    N,
    W,
    S,
}

impl Dir {
    fn delta(self) -> (i32, i32) {
        match self {
            Dir::E => (2, 0),
            Dir::N => (0, 2),
            Dir::W => (-2, 0),
            Dir::S => (0, -2),
        }
    }

    fn ccw(self) -> Dir {
        match self {
            Dir::E => Dir::N,
            Dir::N => Dir::W,
            Dir::W => Dir::S,
            Dir::S => Dir::E,
        }
    }

    fn opposite(self) -> Dir {
        self.ccw().ccw()
    }
}

/// The cells to the left and right of a directed boundary step from `v`.
fn side_cells(v: CornerPoint, d: Dir) -> (Cell, Cell) {
    let (c, r) = (v.x / 2, v.y / 2);
    match d {
        Dir::E => (Cell::new(c, r), Cell::new(c, r - 1)),
        Dir::N => (Cell::new(c - 1, r), Cell::new(c, r)),
        Dir::W => (Cell::new(c - 1, r - 1), Cell::new(c - 1, r)),
        Dir::S => (Cell::new(c, r - 1), Cell::new(c - 1, r - 1)),
    }
}

fn step_keeps_component_left(comp: &CellSet, v: CornerPoint, d: Dir) -> bool {
    let (left, right) = side_cells(v, d);
    comp.contains(&left) && !comp.contains(&right)
}

/// Trace the closed outer-face walk of the union of closed cells of `comp`,
/// starting from the bottom edge of the row-major smallest cell. Every step
/// keeps component cells on the left; at each corner the successor is the
/// first valid direction rotating counterclockwise from the reversed
/// arrival direction. The walk covers each outer boundary edge exactly once
/// and never enters hole boundaries.
fn outer_face_walk(comp: &CellSet) -> Vec<(CornerPoint, Dir)> {
    let start_cell = *comp.iter().next().expect("nonempty component");
    let v0 = CornerPoint::new(2 * start_cell.col, 2 * start_cell.row);
    let d0 = Dir::E;
    debug_assert!(step_keeps_component_left(comp, v0, d0));
    let mut walk = vec![(v0, d0)];
    let limit = 4 * comp.len() + 8;
    loop {
        let (v, d) = *walk.last().unwrap();
        let (dx, dy) = d.delta();
        let head = v.translated(dx, dy);
        let rev = d.opposite();
        let mut next = None;
        let mut cand = rev.ccw();
        for _ in 0..3 {
            if step_keeps_component_left(comp, head, cand) {
                next = Some(cand);
                break;
            }
            cand = cand.ccw();
        }
        let next = next.expect("boundary walk must continue");
        if head == v0 && next == d0 {
            return walk;
        }
        walk.push((head, next));
        assert!(walk.len() <= limit, "boundary walk failed to close");
    }
}

/// Outermost boundary of a `kind`-connected component, decomposed into
/// cycles split at pinch points (corners the outer walk visits twice).
pub fn outermost_boundary(comp: &CellSet, kind: AdjacencyKind) -> Result<OutermostBoundary> {
    if comp.is_empty() {
        return Err(Error::EmptyComponent);
    }
    if !is_connected(comp, kind) {
        return Err(Error::Disconnected { kind: kind.name() });
    }
    let walk = outer_face_walk(comp);
    let mut cycles = Vec::new();
    let mut stack: Vec<CornerPoint> = Vec::new();
    let mut pos: BTreeMap<CornerPoint, usize> = BTreeMap::new();
    stack.push(walk[0].0);
    pos.insert(walk[0].0, 0);
    for &(v, d) in &walk {
        let (dx, dy) = d.delta();
        let head = v.translated(dx, dy);
        if let Some(&p) = pos.get(&head) {
            let cycle_vs: Vec<CornerPoint> = stack[p..].to_vec();
            for v in &stack[p + 1..] {
                pos.remove(v);
            }
            stack.truncate(p + 1);
            cycles.push(Cycle::new(cycle_vs)?);
        } else {
            pos.insert(head, stack.len());
            stack.push(head);
        }
    }
    debug_assert_eq!(stack.len(), 1, "walk must close at its start vertex");

    let mut seen_in: BTreeMap<CornerPoint, usize> = BTreeMap::new();
    for cyc in &cycles {
        for v in cyc.vertex_set() {
            *seen_in.entry(v).or_insert(0) += 1;
        }
    }
    let pinch_points = seen_in
        .into_iter()
        .filter(|(_, n)| *n > 1)
        .map(|(v, _)| v)
        .collect();
    Ok(OutermostBoundary {
        cycles,
        pinch_points,
    })
}

/// Merge a cell into a cycle: the outer boundary of the union of the
/// cycle's interior with the cell.
///
/// The result's interior contains both; its edges come only from the cycle
/// and the cell; every old vertex stays on or inside it. When the cell
/// touches the cycle at a single corner the result revisits that corner.
pub fn merge_cycle_square(cyc: &Cycle, c: Cell) -> Result<Cycle> {
    match point_in_cycle(cyc, c.center()) {
        Region::Outside => {}
        _ => {
            return Err(Error::MergePrecondition(format!(
                "cell {c} is not exterior to the cycle"
            )))
        }
    }
    let verts = cyc.vertex_set();
    if !c.corners().iter().any(|p| verts.contains(p)) {
        return Err(Error::MergePrecondition(format!(
            "cell {c} shares no vertex with the cycle"
        )));
    }
    let mut region = cells_in_interior(cyc);
    region.insert(c);
    let walk = outer_face_walk(&region);
    let mut vertices: Vec<CornerPoint> = walk.iter().map(|(v, _)| *v).collect();
    // Splitting never happens here: the union of a cycle interior with an
    // attached cell has a connected outer walk, possibly with touch points.
    let merged = Cycle::new(std::mem::take(&mut vertices))?;
    debug_assert!({
        let allowed: BTreeSet<GridEdge> = cyc.edges().chain(cell_edges(c).into_iter()).collect();
        merged.edges().all(|e| allowed.contains(&e))
    });
    Ok(merged)
}
