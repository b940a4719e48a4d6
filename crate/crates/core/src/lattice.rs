//! Grid model: cells, states, doubled coordinates, star/plus adjacency and
//! connected components.
//!
//! All geometry lives on a single integer lattice of *doubled* coordinates:
//! the cell at `(col, row)` occupies the corner rectangle
//! `[2*col, 2*col+2] x [2*row, 2*row+2]`, so cell corners are even-even
//! points and cell centers are odd-odd points. This keeps every geometric
//! predicate in exact integer arithmetic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A point on the doubled-coordinate grid.
///
/// Cell corners have both coordinates even; cell centers have both odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CornerPoint {
    pub x: i32,
    pub y: i32,
}

impl CornerPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        CornerPoint { x, y }
    }

    /// True for even-even points (corners of the cell grid).
    pub fn is_corner(&self) -> bool {
        self.x % 2 == 0 && self.y % 2 == 0
    }

    /// True for odd-odd points (cell centers).
    pub fn is_center(&self) -> bool {
        self.x % 2 != 0 && self.y % 2 != 0
    }

    /// Two points are grid-adjacent iff they differ by exactly 2 in exactly
    /// one coordinate.
    pub fn grid_adjacent(&self, other: &CornerPoint) -> bool {
        let dx = (self.x - other.x).abs();
        let dy = (self.y - other.y).abs();
        (dx == 2 && dy == 0) || (dx == 0 && dy == 2)
    }

    pub fn translated(&self, dx: i32, dy: i32) -> CornerPoint {
        CornerPoint::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for CornerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit cell of the tiling, addressed by column and row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub col: i32,
    pub row: i32,
}

impl Cell {
    pub const fn new(col: i32, row: i32) -> Self {
        Cell { col, row }
    }

    /// Center of the cell in doubled coordinates (odd-odd).
    pub fn center(&self) -> CornerPoint {
        CornerPoint::new(2 * self.col + 1, 2 * self.row + 1)
    }

    /// The four corners in doubled coordinates, counterclockwise from the
    /// lower-left.
    pub fn corners(&self) -> [CornerPoint; 4] {
        let (x, y) = (2 * self.col, 2 * self.row);
        [
            CornerPoint::new(x, y),
            CornerPoint::new(x + 2, y),
            CornerPoint::new(x + 2, y + 2),
            CornerPoint::new(x, y + 2),
        ]
    }

    /// The cell whose center is the given odd-odd point.
    pub fn from_center(p: CornerPoint) -> Cell {
        debug_assert!(p.is_center());
        Cell::new((p.x - 1).div_euclid(2), (p.y - 1).div_euclid(2))
    }

    pub fn translated(&self, dc: i32, dr: i32) -> Cell {
        Cell::new(self.col + dc, self.row + dr)
    }
}

// Row-major order: by row first, then column.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// State of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    Occupied,
    Vacant,
}

impl CellState {
    pub fn flipped(self) -> CellState {
        match self {
            CellState::Occupied => CellState::Vacant,
            CellState::Vacant => CellState::Occupied,
        }
    }
}

/// Adjacency notion between cells: `Star` shares at least a corner
/// (8-neighborhood), `Plus` shares a full edge (4-neighborhood).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjacencyKind {
    Star,
    Plus,
}

impl AdjacencyKind {
    pub fn name(self) -> &'static str {
        match self {
            AdjacencyKind::Star => "star",
            AdjacencyKind::Plus => "plus",
        }
    }
}

/// Neighbor offsets in canonical order: E, N, W, S, then NE, NW, SW, SE.
pub const PLUS_OFFSETS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
pub const DIAGONAL_OFFSETS: [(i32, i32); 4] = [(1, 1), (-1, 1), (-1, -1), (1, -1)];

/// The neighbors of a cell under the given adjacency, in canonical order.
pub fn neighbors(c: Cell, kind: AdjacencyKind) -> Vec<Cell> {
    let mut out = Vec::with_capacity(8);
    for &(dc, dr) in &PLUS_OFFSETS {
        out.push(c.translated(dc, dr));
    }
    if kind == AdjacencyKind::Star {
        for &(dc, dr) in &DIAGONAL_OFFSETS {
            out.push(c.translated(dc, dr));
        }
    }
    out
}

/// True iff `a` and `b` are adjacent under `kind`.
pub fn adjacent(a: Cell, b: Cell, kind: AdjacencyKind) -> bool {
    let dc = (a.col - b.col).abs();
    let dr = (a.row - b.row).abs();
    match kind {
        AdjacencyKind::Plus => dc + dr == 1,
        AdjacencyKind::Star => dc.max(dr) == 1,
    }
}

/// A duplicate-free set of cells with deterministic row-major iteration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.0.insert(c)
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.0.contains(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.0.iter()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.union(&other.0).copied().collect())
    }

    /// Bounding box as `(min_col, min_row, max_col, max_row)`.
    pub fn bbox(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.0.iter();
        let first = it.next()?;
        let (mut c0, mut r0, mut c1, mut r1) = (first.col, first.row, first.col, first.row);
        for c in it {
            c0 = c0.min(c.col);
            r0 = r0.min(c.row);
            c1 = c1.max(c.col);
            r1 = r1.max(c.row);
        }
        Some((c0, r0, c1, r1))
    }

    pub fn translated(&self, dc: i32, dr: i32) -> CellSet {
        CellSet(self.0.iter().map(|c| c.translated(dc, dr)).collect())
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<T: IntoIterator<Item = Cell>>(iter: T) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A finite rectangular window of cells with an implicit all-vacant exterior.
///
/// Immutable after construction. Cells outside `[0,width) x [0,height)` are
/// vacant by definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    width: i32,
    height: i32,
    bits: Vec<u64>,
}

impl Configuration {
    /// All-vacant window.
    pub fn vacant(width: i32, height: i32) -> Configuration {
        assert!(width > 0 && height > 0, "dimensions must be positive");
        let words = (width as usize * height as usize).div_ceil(64);
        Configuration {
            width,
            height,
            bits: vec![0; words],
        }
    }

    /// Window with exactly the given cells occupied. Out-of-bounds cells are
    /// rejected with a panic; this is a programming-error path.
    pub fn from_occupied<I: IntoIterator<Item = Cell>>(
        width: i32,
        height: i32,
        occupied: I,
    ) -> Configuration {
        let mut cfg = Configuration::vacant(width, height);
        for c in occupied {
            assert!(cfg.in_bounds(c), "occupied cell {c} out of bounds");
            let idx = cfg.bit_index(c);
            cfg.bits[idx / 64] |= 1 << (idx % 64);
        }
        cfg
    }

    /// Window whose occupancy is the binary expansion of `index`: cell
    /// `(c, r)` is occupied iff bit `r*width + c` is set. Requires
    /// `width*height <= 64`.
    pub fn from_bit_index(width: i32, height: i32, index: u64) -> Configuration {
        assert!(width > 0 && height > 0);
        let cells = width as u64 * height as u64;
        assert!(cells <= 64, "bit-index construction limited to 64 cells");
        if cells < 64 {
            assert!(index < (1u64 << cells), "index out of range");
        }
        Configuration {
            width,
            height,
            bits: vec![index],
        }
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn in_bounds(&self, c: Cell) -> bool {
        c.col >= 0 && c.col < self.width && c.row >= 0 && c.row < self.height
    }

    fn bit_index(&self, c: Cell) -> usize {
        c.row as usize * self.width as usize + c.col as usize
    }

    /// State of a cell; out-of-bounds cells are vacant.
    pub fn cell_state(&self, c: Cell) -> CellState {
        if self.is_occupied(c) {
            CellState::Occupied
        } else {
            CellState::Vacant
        }
    }

    pub fn is_occupied(&self, c: Cell) -> bool {
        if !self.in_bounds(c) {
            return false;
        }
        let idx = self.bit_index(c);
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// All occupied cells in row-major order.
    pub fn occupied_cells(&self) -> CellSet {
        let mut out = CellSet::new();
        for row in 0..self.height {
            for col in 0..self.width {
                let c = Cell::new(col, row);
                if self.is_occupied(c) {
                    out.insert(c);
                }
            }
        }
        out
    }

    /// Grid text with the top row first; inverse of [`parse_configuration`].
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity((self.width as usize + 1) * self.height as usize);
        for row in (0..self.height).rev() {
            for col in 0..self.width {
                s.push(if self.is_occupied(Cell::new(col, row)) {
                    '#'
                } else {
                    '.'
                });
            }
            s.push('\n');
        }
        s
    }
}

/// Parse a grid from text: `#` occupied, `.` vacant. The last text line is
/// row 0 (the bottom), so the text reads like a plot with y increasing
/// upward.
pub fn parse_configuration(text: &str) -> Result<Configuration> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "empty input".into(),
        });
    }
    let lines: Vec<&str> = body.split('\n').collect();
    let width = lines[0].chars().count();
    if width == 0 {
        return Err(Error::Parse {
            line: 1,
            message: "empty line".into(),
        });
    }
    let height = lines.len();
    let mut occupied = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        if line.chars().count() != width {
            return Err(Error::Parse {
                line: i + 1,
                message: format!(
                    "ragged line: expected {width} characters, found {}",
                    line.chars().count()
                ),
            });
        }
        let row = (height - 1 - i) as i32;
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '#' => occupied.push(Cell::new(j as i32, row)),
                '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("illegal character {other:?}"),
                    })
                }
            }
        }
    }
    Ok(Configuration::from_occupied(
        width as i32,
        height as i32,
        occupied,
    ))
}

/// Flip the state of every in-bounds cell.
pub fn complement(cfg: &Configuration) -> Configuration {
    let mut occupied = Vec::new();
    for row in 0..cfg.height() {
        for col in 0..cfg.width() {
            let c = Cell::new(col, row);
            if !cfg.is_occupied(c) {
                occupied.push(c);
            }
        }
    }
    Configuration::from_occupied(cfg.width(), cfg.height(), occupied)
}

/// Maximal set of `state`-matching cells reachable from `seed` through
/// `kind`-adjacency, restricted to the window extended by a one-cell halo.
///
/// Occupied components are always finite because the exterior is vacant;
/// vacant components may touch the implicit exterior, so traversal is
/// clipped to the halo box `[-1, width] x [-1, height]`.
pub fn connected_component(
    cfg: &Configuration,
    seed: Cell,
    kind: AdjacencyKind,
    state: CellState,
) -> Result<CellSet> {
    connected_component_within(cfg, seed, kind, state, (-1, -1, cfg.width(), cfg.height()))
}

/// Like [`connected_component`] but clipped to an explicit inclusive box
/// `(min_col, min_row, max_col, max_row)`.
pub fn connected_component_within(
    cfg: &Configuration,
    seed: Cell,
    kind: AdjacencyKind,
    state: CellState,
    bbox: (i32, i32, i32, i32),
) -> Result<CellSet> {
    if cfg.cell_state(seed) != state {
        return Err(Error::SeedStateMismatch {
            col: seed.col,
            row: seed.row,
        });
    }
    let (c0, r0, c1, r1) = bbox;
    let inside = |c: Cell| c.col >= c0 && c.col <= c1 && c.row >= r0 && c.row <= r1;
    let mut seen = CellSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed);
    queue.push_back(seed);
    while let Some(c) = queue.pop_front() {
        for nb in neighbors(c, kind) {
            if inside(nb) && cfg.cell_state(nb) == state && !seen.contains(&nb) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    Ok(seen)
}

/// True iff `comp` is nonempty and `kind`-connected.
pub fn is_connected(comp: &CellSet, kind: AdjacencyKind) -> bool {
    let Some(start) = comp.iter().next().copied() else {
        return false;
    };
    let mut seen = CellSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for nb in neighbors(c, kind) {
            if comp.contains(&nb) && !seen.contains(&nb) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    seen.len() == comp.len()
}
