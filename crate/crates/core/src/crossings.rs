//! Rectangle crossing events: detection by breadth-first search, witness
//! validation, and the two constructive procedures that extract a vacant
//! top-down crossing whenever the matching occupied left-right crossing is
//! absent.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::dualization::surrounding_vacant_cycle;
use crate::error::{Error, Result};
use crate::lattice::{
    adjacent, neighbors, AdjacencyKind, Cell, CellSet, CellState, Configuration, CornerPoint,
};
use crate::topology::{
    cell_in_interior, merge_cycle_square, outermost_boundary, Cycle, EdgePath, GridEdge,
};

/// The rectangle `[0,m] x [0,n]`, holding exactly `m*n` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    width: i32,
    height: i32,
}

impl Rect {
    pub fn new(width: i32, height: i32) -> Rect {
        assert!(width > 0 && height > 0, "rectangle must be nonempty");
        Rect { width, height }
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn cell_count(&self) -> u32 {
        (self.width * self.height) as u32
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col >= 0 && c.col < self.width && c.row >= 0 && c.row < self.height
    }

    pub fn fits_in(&self, cfg: &Configuration) -> bool {
        cfg.width() >= self.width && cfg.height() >= self.height
    }
}

/// Crossing orientation: left-to-right or top-to-bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    LeftRight,
    TopDown,
}

/// One of the eight crossing events of a rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingSpec {
    pub orientation: Orientation,
    pub kind: AdjacencyKind,
    pub state: CellState,
}

impl CrossingSpec {
    pub const fn new(orientation: Orientation, kind: AdjacencyKind, state: CellState) -> Self {
        CrossingSpec {
            orientation,
            kind,
            state,
        }
    }

    /// All eight specs in a fixed order.
    pub fn all() -> [CrossingSpec; 8] {
        use AdjacencyKind::*;
        use CellState::*;
        use Orientation::*;
        [
            CrossingSpec::new(LeftRight, Plus, Occupied),
            CrossingSpec::new(LeftRight, Plus, Vacant),
            CrossingSpec::new(LeftRight, Star, Occupied),
            CrossingSpec::new(LeftRight, Star, Vacant),
            CrossingSpec::new(TopDown, Plus, Occupied),
            CrossingSpec::new(TopDown, Plus, Vacant),
            CrossingSpec::new(TopDown, Star, Occupied),
            CrossingSpec::new(TopDown, Star, Vacant),
        ]
    }

    /// The partner event that is mutually exclusive with this one: the
    /// opposite orientation, the other adjacency and the other state.
    pub fn dual(&self) -> CrossingSpec {
        CrossingSpec {
            orientation: match self.orientation {
                Orientation::LeftRight => Orientation::TopDown,
                Orientation::TopDown => Orientation::LeftRight,
            },
            kind: match self.kind {
                AdjacencyKind::Plus => AdjacencyKind::Star,
                AdjacencyKind::Star => AdjacencyKind::Plus,
            },
            state: self.state.flipped(),
        }
    }

    /// Snake-case label used in reports and JSON output.
    pub fn label(&self) -> &'static str {
        use AdjacencyKind::*;
        use CellState::*;
        use Orientation::*;
        match (self.orientation, self.kind, self.state) {
            (LeftRight, Plus, Occupied) => "lr_plus_occupied",
            (LeftRight, Plus, Vacant) => "lr_plus_vacant",
            (LeftRight, Star, Occupied) => "lr_star_occupied",
            (LeftRight, Star, Vacant) => "lr_star_vacant",
            (TopDown, Plus, Occupied) => "td_plus_occupied",
            (TopDown, Plus, Vacant) => "td_plus_vacant",
            (TopDown, Star, Occupied) => "td_star_occupied",
            (TopDown, Star, Vacant) => "td_star_vacant",
        }
    }

    fn touches_start(&self, r: &Rect, c: Cell) -> bool {
        match self.orientation {
            Orientation::LeftRight => c.col == 0,
            Orientation::TopDown => c.row == r.height() - 1,
        }
    }

    fn touches_end(&self, r: &Rect, c: Cell) -> bool {
        match self.orientation {
            Orientation::LeftRight => c.col == r.width() - 1,
            Orientation::TopDown => c.row == 0,
        }
    }
}

/// A validated cell path realizing a crossing event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingWitness {
    pub cells: Vec<Cell>,
    pub spec: CrossingSpec,
}

/// Cell marking used by the constructive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    One,
    Zero,
    Unlabeled,
}

/// Per-cell labels over the rectangle plus a one-cell halo.
///
/// The halo column left of the rectangle is labeled one; occupied in-rect
/// cells connected to it through occupied in-rect cells under the field's
/// adjacency are labeled one; unlabeled cells adjacent to a one-cell are
/// labeled zero.
#[derive(Debug, Clone)]
pub struct LabelField {
    rect: Rect,
    kind: AdjacencyKind,
    labels: Vec<Label>,
}

impl LabelField {
    fn index(&self, c: Cell) -> Option<usize> {
        if c.col < -1 || c.col > self.rect.width() || c.row < -1 || c.row > self.rect.height() {
            return None;
        }
        let w = (self.rect.width() + 2) as usize;
        Some((c.row + 1) as usize * w + (c.col + 1) as usize)
    }

    pub fn get(&self, c: Cell) -> Label {
        match self.index(c) {
            Some(i) => self.labels[i],
            None => Label::Unlabeled,
        }
    }

    pub fn kind(&self) -> AdjacencyKind {
        self.kind
    }

    /// All one-labeled cells in row-major order; always contains the left
    /// halo column.
    pub fn one_cells(&self) -> CellSet {
        self.collect(Label::One)
    }

    pub fn zero_cells(&self) -> CellSet {
        self.collect(Label::Zero)
    }

    fn collect(&self, want: Label) -> CellSet {
        let mut out = CellSet::new();
        for row in -1..=self.rect.height() {
            for col in -1..=self.rect.width() {
                let c = Cell::new(col, row);
                if self.get(c) == want {
                    out.insert(c);
                }
            }
        }
        out
    }
}

/// Existence results for all eight crossing events plus the two exclusivity
/// verdicts relating them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualityReport {
    pub lr_plus_occupied: bool,
    pub lr_plus_vacant: bool,
    pub lr_star_occupied: bool,
    pub lr_star_vacant: bool,
    pub td_plus_occupied: bool,
    pub td_plus_vacant: bool,
    pub td_star_occupied: bool,
    pub td_star_vacant: bool,
    /// Exactly one of occupied plus left-right and vacant star top-down.
    pub exclusivity_plus_lr: bool,
    /// Exactly one of occupied star left-right and vacant plus top-down.
    pub exclusivity_star_lr: bool,
}

impl DualityReport {
    pub fn event(&self, spec: CrossingSpec) -> bool {
        use AdjacencyKind::*;
        use CellState::*;
        use Orientation::*;
        match (spec.orientation, spec.kind, spec.state) {
            (LeftRight, Plus, Occupied) => self.lr_plus_occupied,
            (LeftRight, Plus, Vacant) => self.lr_plus_vacant,
            (LeftRight, Star, Occupied) => self.lr_star_occupied,
            (LeftRight, Star, Vacant) => self.lr_star_vacant,
            (TopDown, Plus, Occupied) => self.td_plus_occupied,
            (TopDown, Plus, Vacant) => self.td_plus_vacant,
            (TopDown, Star, Occupied) => self.td_star_occupied,
            (TopDown, Star, Vacant) => self.td_star_vacant,
        }
    }

    pub fn holds(&self) -> bool {
        self.exclusivity_plus_lr && self.exclusivity_star_lr
    }
}

/// Find a crossing witness by multi-source breadth-first search from the
/// start side, trimmed so that only the first cell touches the start side
/// and only the last touches the end side. Returns the canonical shortest
/// witness, or `None` when the event does not occur.
pub fn find_crossing(cfg: &Configuration, r: &Rect, spec: CrossingSpec) -> Option<CrossingWitness> {
    let (w, h) = (r.width(), r.height());
    let idx = |c: Cell| (c.row * w + c.col) as usize;
    let mut parent: Vec<i32> = vec![-2; (w * h) as usize]; // -2 unvisited, -1 source
    let mut queue = VecDeque::new();

    let sources: Vec<Cell> = match spec.orientation {
        Orientation::LeftRight => (0..h).map(|row| Cell::new(0, row)).collect(),
        Orientation::TopDown => (0..w).map(|col| Cell::new(col, h - 1)).collect(),
    };
    for s in sources {
        if cfg.cell_state(s) == spec.state {
            parent[idx(s)] = -1;
            queue.push_back(s);
        }
    }
    while let Some(c) = queue.pop_front() {
        if spec.touches_end(r, c) {
            let mut path = vec![c];
            let mut cur = c;
            while parent[idx(cur)] >= 0 {
                cur = Cell::new(parent[idx(cur)] % w, parent[idx(cur)] / w);
                path.push(cur);
            }
            path.reverse();
            let first = path
                .iter()
                .rposition(|c| spec.touches_start(r, *c))
                .expect("path starts on the start side");
            let last = path[first..]
                .iter()
                .position(|c| spec.touches_end(r, *c))
                .expect("path ends on the end side")
                + first;
            return Some(CrossingWitness {
                cells: path[first..=last].to_vec(),
                spec,
            });
        }
        for nb in neighbors(c, spec.kind) {
            if r.contains(nb) && cfg.cell_state(nb) == spec.state && parent[idx(nb)] == -2 {
                parent[idx(nb)] = idx(c) as i32;
                queue.push_back(nb);
            }
        }
    }
    None
}

/// Check every witness invariant against a configuration: in-rect cells of
/// the right state, consecutive adjacency, distinctness, and the
/// single-contact side conditions.
pub fn validate_witness(r: &Rect, w: &CrossingWitness, cfg: &Configuration) -> bool {
    let cells = &w.cells;
    if cells.is_empty() {
        return false;
    }
    let mut seen = BTreeSet::new();
    for c in cells {
        if !r.contains(*c) || cfg.cell_state(*c) != w.spec.state || !seen.insert(*c) {
            return false;
        }
    }
    for pair in cells.windows(2) {
        if !adjacent(pair[0], pair[1], w.spec.kind) {
            return false;
        }
    }
    let last = cells.len() - 1;
    for (i, c) in cells.iter().enumerate() {
        if (i == 0) != w.spec.touches_start(r, *c) {
            return false;
        }
        if (i == last) != w.spec.touches_end(r, *c) {
            return false;
        }
    }
    true
}

/// Label the rectangle plus halo from the left: the halo column is one,
/// occupied in-rect cells connected to it are one, and unlabeled cells
/// adjacent to a one-cell are zero.
pub fn label_from_left(cfg: &Configuration, r: &Rect, kind: AdjacencyKind) -> LabelField {
    let (w, h) = (r.width(), r.height());
    let mut field = LabelField {
        rect: *r,
        kind,
        labels: vec![Label::Unlabeled; ((w + 2) * (h + 2)) as usize],
    };
    let set = |f: &mut LabelField, c: Cell, l: Label| {
        let i = f.index(c).expect("cell within halo");
        f.labels[i] = l;
    };
    let mut queue = VecDeque::new();
    for row in 0..h {
        let j = Cell::new(-1, row);
        set(&mut field, j, Label::One);
        queue.push_back(j);
    }
    while let Some(c) = queue.pop_front() {
        for nb in neighbors(c, kind) {
            if r.contains(nb)
                && cfg.cell_state(nb) == CellState::Occupied
                && field.get(nb) == Label::Unlabeled
            {
                set(&mut field, nb, Label::One);
                queue.push_back(nb);
            }
        }
    }
    for row in -1..=h {
        for col in -1..=w {
            let c = Cell::new(col, row);
            if field.get(c) == Label::Unlabeled
                && neighbors(c, kind)
                    .iter()
                    .any(|nb| field.get(*nb) == Label::One)
            {
                set(&mut field, c, Label::Zero);
            }
        }
    }
    field
}

const EMBED_SHIFT: i32 = 3;

/// Construct a vacant plus-connected top-down witness when no occupied star
/// left-right crossing exists, by surrounding the left-attached star
/// component with its vacant envelope and extracting the in-rectangle run.
pub fn construct_vacant_plus_td(cfg: &Configuration, r: &Rect) -> Result<CrossingWitness> {
    if let Some(witness) = find_crossing(
        cfg,
        r,
        CrossingSpec::new(
            Orientation::LeftRight,
            AdjacencyKind::Star,
            CellState::Occupied,
        ),
    ) {
        return Err(Error::CrossingExists {
            kind: "star",
            witness,
        });
    }
    let n = r.height();
    let field = label_from_left(cfg, r, AdjacencyKind::Star);
    let ones = field.one_cells();

    // Re-run the envelope machinery on a window where one-labeled cells are
    // occupied and everything else vacant, shifted to create the margin.
    let shifted: Vec<Cell> = ones
        .iter()
        .map(|c| c.translated(EMBED_SHIFT, EMBED_SHIFT))
        .collect();
    let syn = Configuration::from_occupied(r.width() + 6, r.height() + 6, shifted.clone());
    let comp: CellSet = shifted.into_iter().collect();
    let env = surrounding_vacant_cycle(&syn, &comp)?;
    if !env.report.all_passed() {
        let names: Vec<&str> = env.report.failures().map(|c| c.name).collect();
        return Err(Error::StructureViolation(format!(
            "envelope verification failed: {}",
            names.join(", ")
        )));
    }
    let ring: Vec<Cell> = env
        .ring
        .cells()
        .iter()
        .map(|c| c.translated(-EMBED_SHIFT, -EMBED_SHIFT))
        .collect();

    // The column just left of the halo is a run of n+2 consecutive ring
    // cells; removing it leaves a path between the halo's outer corners.
    let len = ring.len();
    let run: Vec<usize> = (0..len).filter(|i| ring[*i].col == -2).collect();
    if run.len() != (n + 2) as usize {
        return Err(Error::StructureViolation(format!(
            "expected {} envelope cells left of the halo, found {}",
            n + 2,
            run.len()
        )));
    }
    let consecutive = {
        // positions form one cyclic interval iff the complement does too
        let in_run: Vec<bool> = (0..len).map(|i| run.contains(&i)).collect();
        let switches = (0..len)
            .filter(|&i| in_run[i] != in_run[(i + 1) % len])
            .count();
        switches == 2
    };
    if !consecutive {
        return Err(Error::StructureViolation(
            "envelope cells left of the halo are not consecutive".into(),
        ));
    }
    let start = (0..len)
        .find(|&i| !run.contains(&i) && run.contains(&((i + len - 1) % len)))
        .expect("complement is nonempty");
    let mut rest: Vec<Cell> = (0..len - run.len())
        .map(|k| ring[(start + k) % len])
        .collect();
    let top = Cell::new(-1, n);
    let bottom = Cell::new(-1, -1);
    if rest.first() == Some(&bottom) && rest.last() == Some(&top) {
        rest.reverse();
    }
    if rest.first() != Some(&top) || rest.last() != Some(&bottom) {
        return Err(Error::StructureViolation(
            "envelope path does not run between the halo corner cells".into(),
        ));
    }

    let spec = CrossingSpec::new(Orientation::TopDown, AdjacencyKind::Plus, CellState::Vacant);
    let witness = trim_top_down(rest, n, spec)?;
    if !validate_witness(r, &witness, cfg) {
        return Err(Error::StructureViolation(
            "extracted plus top-down witness failed validation".into(),
        ));
    }
    Ok(witness)
}

/// Cut a top-to-bottom cell path at the last top contact and the first
/// bottom contact after it. Touching is measured against the boundary lines
/// `y = n` and `y = 0`, so halo cells count as contacts.
fn trim_top_down(cells: Vec<Cell>, n: i32, spec: CrossingSpec) -> Result<CrossingWitness> {
    let touches_top = |c: &Cell| c.row == n - 1 || c.row == n;
    let touches_bottom = |c: &Cell| c.row == 0 || c.row == -1;
    let j1 = cells
        .iter()
        .rposition(touches_top)
        .ok_or_else(|| Error::StructureViolation("path never touches the top edge".into()))?;
    let j2 = cells[j1..]
        .iter()
        .position(touches_bottom)
        .map(|k| k + j1)
        .ok_or_else(|| Error::StructureViolation("path never returns to the bottom edge".into()))?;
    Ok(CrossingWitness {
        cells: cells[j1..=j2].to_vec(),
        spec,
    })
}

/// Construct a vacant star-connected top-down witness when no occupied plus
/// left-right crossing exists: walk the outer boundary of the left-attached
/// plus component, iteratively merge the zero-labeled squares on its
/// rectangle side, and read the witness off the final cycle.
pub fn construct_vacant_star_td(cfg: &Configuration, r: &Rect) -> Result<CrossingWitness> {
    if let Some(witness) = find_crossing(
        cfg,
        r,
        CrossingSpec::new(
            Orientation::LeftRight,
            AdjacencyKind::Plus,
            CellState::Occupied,
        ),
    ) {
        return Err(Error::CrossingExists {
            kind: "plus",
            witness,
        });
    }
    let n = r.height();
    let field = label_from_left(cfg, r, AdjacencyKind::Plus);
    let ones = field.one_cells();
    let boundary = outermost_boundary(&ones, AdjacencyKind::Plus)?;
    let d0 = boundary
        .single_cycle()
        .ok_or_else(|| {
            Error::StructureViolation("left component boundary is not a single cycle".into())
        })?
        .clone();

    // The fixed halo path: top edge of the top halo cell, the halo column's
    // left edges, and the bottom edge of the bottom halo cell.
    let mut halo_vertices = vec![CornerPoint::new(0, 2 * n), CornerPoint::new(-2, 2 * n)];
    for row in (0..n).rev() {
        halo_vertices.push(CornerPoint::new(-2, 2 * row));
    }
    halo_vertices.push(CornerPoint::new(0, 0));
    let halo = EdgePath::new(halo_vertices).expect("halo path is grid-connected");
    let d0_edges = d0.edge_set();
    if let Some(e) = halo.edges().find(|e| !d0_edges.contains(e)) {
        return Err(Error::StructureViolation(format!(
            "halo path edge {}-{} is missing from the boundary",
            e.a(),
            e.b()
        )));
    }
    let halo_edges: BTreeSet<GridEdge> = halo.edges().collect();

    let top_corner = CornerPoint::new(0, 2 * n);
    let bottom_corner = CornerPoint::new(0, 0);
    let side = extract_complement_run(&d0, &halo_edges, top_corner, bottom_corner)?;

    // Each side edge flanks the one-labeled square inside the boundary and a
    // zero-labeled square on the rectangle side.
    let mut attach: BTreeMap<GridEdge, Cell> = BTreeMap::new();
    let mut attached_cells = CellSet::new();
    let side_edges: Vec<GridEdge> = side.edges().collect();
    for e in &side_edges {
        let (p, q) = e.flanking_cells();
        let zero = match (ones.contains(&p), ones.contains(&q)) {
            (true, false) => q,
            (false, true) => p,
            _ => {
                return Err(Error::StructureViolation(format!(
                    "boundary edge {}-{} does not separate labels",
                    e.a(),
                    e.b()
                )))
            }
        };
        if field.get(zero) != Label::Zero {
            return Err(Error::StructureViolation(format!(
                "cell {zero} attached to the boundary is not zero-labeled"
            )));
        }
        attach.insert(*e, zero);
        attached_cells.insert(zero);
    }

    // Merge attached squares until no original side edge remains.
    let mut cycle = d0.clone();
    loop {
        let edges = cycle.edge_set();
        let Some(e) = side_edges.iter().find(|e| edges.contains(e)) else {
            break;
        };
        let cell = attach[e];
        if cell_in_interior(&cycle, cell) {
            return Err(Error::StructureViolation(format!(
                "cell {cell} still carries a boundary edge but lies inside the cycle"
            )));
        }
        cycle = merge_cycle_square(&cycle, cell)?;
    }

    let final_run = extract_complement_run(&cycle, &halo_edges, top_corner, bottom_corner)?;
    let mut cells = Vec::with_capacity(final_run.edge_count());
    for e in final_run.edges() {
        let (p, q) = e.flanking_cells();
        let z = match (attached_cells.contains(&p), attached_cells.contains(&q)) {
            (true, false) => p,
            (false, true) => q,
            (true, true) => {
                return Err(Error::StructureViolation(format!(
                    "edge {}-{} flanks two attached squares",
                    e.a(),
                    e.b()
                )))
            }
            (false, false) => {
                return Err(Error::StructureViolation(format!(
                    "edge {}-{} flanks no attached square",
                    e.a(),
                    e.b()
                )))
            }
        };
        cells.push(z);
    }
    let cells = collapse_revisits(cells);

    let spec = CrossingSpec::new(Orientation::TopDown, AdjacencyKind::Star, CellState::Vacant);
    let witness = trim_top_down(cells, n, spec)?;
    if !validate_witness(r, &witness, cfg) {
        return Err(Error::StructureViolation(
            "extracted star top-down witness failed validation".into(),
        ));
    }
    Ok(witness)
}

/// Remove the halo path edges from a closed walk and return the remaining
/// run as a path oriented from `from` to `to`. The halo edges must form one
/// contiguous stretch of the walk.
fn extract_complement_run(
    cycle: &Cycle,
    halo_edges: &BTreeSet<GridEdge>,
    from: CornerPoint,
    to: CornerPoint,
) -> Result<EdgePath> {
    let vs = cycle.vertices();
    let len = vs.len();
    let on_halo: Vec<bool> = (0..len)
        .map(|i| halo_edges.contains(&GridEdge::new(vs[i], vs[(i + 1) % len])))
        .collect();
    let halo_count = on_halo.iter().filter(|b| **b).count();
    if halo_count != halo_edges.len() {
        return Err(Error::StructureViolation(
            "halo path is no longer part of the cycle".into(),
        ));
    }
    let switches = (0..len)
        .filter(|&i| on_halo[i] != on_halo[(i + 1) % len])
        .count();
    if switches != 2 {
        return Err(Error::StructureViolation(
            "halo path is not contiguous in the cycle".into(),
        ));
    }
    let start = (0..len)
        .find(|&i| !on_halo[i] && on_halo[(i + len - 1) % len])
        .expect("complement is nonempty");
    let run_len = len - halo_count;
    let vertices: Vec<CornerPoint> = (0..=run_len).map(|k| vs[(start + k) % len]).collect();
    let mut run = EdgePath::new(vertices)?;
    if run.endpoints() == (to, from) {
        run = run.reversed();
    }
    if run.endpoints() != (from, to) {
        return Err(Error::StructureViolation(
            "complement run does not connect the rectangle corners".into(),
        ));
    }
    Ok(run)
}

/// Cut out loops: whenever a cell reappears, drop everything strictly
/// between its occurrences. The result is a duplicate-free path with the
/// same endpoints.
fn collapse_revisits(cells: Vec<Cell>) -> Vec<Cell> {
    let mut out: Vec<Cell> = Vec::with_capacity(cells.len());
    for c in cells {
        if let Some(pos) = out.iter().position(|x| *x == c) {
            out.truncate(pos + 1);
        } else {
            out.push(c);
        }
    }
    out
}

/// Evaluate all eight crossing events and both exclusivity verdicts.
pub fn duality_report(cfg: &Configuration, r: &Rect) -> DualityReport {
    let present = |o, k, s| find_crossing(cfg, r, CrossingSpec::new(o, k, s)).is_some();
    use AdjacencyKind::*;
    use CellState::*;
    use Orientation::*;
    let report = DualityReport {
        lr_plus_occupied: present(LeftRight, Plus, Occupied),
        lr_plus_vacant: present(LeftRight, Plus, Vacant),
        lr_star_occupied: present(LeftRight, Star, Occupied),
        lr_star_vacant: present(LeftRight, Star, Vacant),
        td_plus_occupied: present(TopDown, Plus, Occupied),
        td_plus_vacant: present(TopDown, Plus, Vacant),
        td_star_occupied: present(TopDown, Star, Occupied),
        td_star_vacant: present(TopDown, Star, Vacant),
        exclusivity_plus_lr: false,
        exclusivity_star_lr: false,
    };
    DualityReport {
        exclusivity_plus_lr: report.lr_plus_occupied != report.td_star_vacant,
        exclusivity_star_lr: report.lr_star_occupied != report.td_plus_vacant,
        ..report
    }
}
