//! Polyomino geometry, brute-force enumeration of convex polyominoes,
//! the four-path boundary decomposition, and non-intersecting path-pair
//! counting with its brute-force oracle.
//!
//! Cells are unit squares addressed by `(col, row)` with row 0 at the
//! bottom; the row index increases upward. The ASCII renderer prints the
//! top row first.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::exactnum::{binomial, BigInt};
use crate::Error;

/// Default feasibility bound: enumeration refuses instances with `m+n`
/// above this (counts grow roughly like `4^(m+n)`).
pub const DEFAULT_MAX_BRUTE: i64 = 12;

/// Per-axis displacement bound for the path-pair brute force.
pub const MAX_PATH_DISPLACEMENT: i64 = 10;

/// A unit cell. Ordered row-major (row, then column), so a sorted cell
/// list reads bottom row first, left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub col: i64,
    pub row: i64,
}

impl Cell {
    pub fn new(col: i64, row: i64) -> Self {
        Cell { col, row }
    }
}

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

/// True iff the cell set is non-empty and edge-connected.
pub fn is_polyomino(cells: &BTreeSet<Cell>) -> bool {
    let Some(start) = cells.iter().next() else {
        return false;
    };
    let mut seen = HashSet::with_capacity(cells.len());
    let mut queue = VecDeque::new();
    seen.insert(*start);
    queue.push_back(*start);
    while let Some(c) = queue.pop_front() {
        for (dc, dr) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let nb = Cell::new(c.col + dc, c.row + dr);
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

/// A finite edge-connected set of unit cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

impl Polyomino {
    /// Builds a polyomino, rejecting empty or disconnected cell sets.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, Error> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::InvalidPolyomino("empty cell set".into()));
        }
        if !is_polyomino(&cells) {
            return Err(Error::InvalidPolyomino("cells are not edge-connected".into()));
        }
        Ok(Polyomino { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    fn min_col(&self) -> i64 {
        self.cells.iter().map(|c| c.col).min().unwrap()
    }

    fn max_col(&self) -> i64 {
        self.cells.iter().map(|c| c.col).max().unwrap()
    }

    fn min_row(&self) -> i64 {
        self.cells.first().unwrap().row
    }

    fn max_row(&self) -> i64 {
        self.cells.last().unwrap().row
    }

    /// Width and height of the minimal bounding rectangle.
    pub fn bounding_rect(&self) -> (i64, i64) {
        (
            self.max_col() - self.min_col() + 1,
            self.max_row() - self.min_row() + 1,
        )
    }

    /// True iff every row's occupied columns form a contiguous interval and
    /// every column's occupied rows form a contiguous interval.
    pub fn is_convex(&self) -> bool {
        let (w, h) = self.bounding_rect();
        let (c0, r0) = (self.min_col(), self.min_row());
        for r in 0..h {
            let cols: Vec<i64> = self
                .cells
                .iter()
                .filter(|c| c.row == r0 + r)
                .map(|c| c.col)
                .collect();
            if !is_interval(&cols) {
                return false;
            }
        }
        for c in 0..w {
            let rows: Vec<i64> = self
                .cells
                .iter()
                .filter(|cell| cell.col == c0 + c)
                .map(|cell| cell.row)
                .collect();
            if !is_interval(&rows) {
                return false;
            }
        }
        true
    }

    /// Translates so that the minimum column and row are both 0.
    pub fn normalize(&self) -> Polyomino {
        let (c0, r0) = (self.min_col(), self.min_row());
        Polyomino {
            cells: self
                .cells
                .iter()
                .map(|c| Cell::new(c.col - c0, c.row - r0))
                .collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.min_col() == 0 && self.min_row() == 0
    }

    /// 180-degree rotation inside an `(m+1) x (n+1)` box.
    fn rotate180(&self, m: i64, n: i64) -> Polyomino {
        Polyomino {
            cells: self
                .cells
                .iter()
                .map(|c| Cell::new(m - c.col, n - c.row))
                .collect(),
        }
    }

    /// Reflection across the main diagonal (swap columns and rows).
    fn transpose(&self) -> Polyomino {
        Polyomino {
            cells: self.cells.iter().map(|c| Cell::new(c.row, c.col)).collect(),
        }
    }

    /// Renders as one line per row, top row first, `#` occupied, `.` empty.
    /// All lines have the bounding-box width; no trailing whitespace.
    pub fn to_ascii(&self) -> String {
        let p = self.normalize();
        let (w, h) = p.bounding_rect();
        let mut out = String::new();
        for r in (0..h).rev() {
            for c in 0..w {
                out.push(if p.contains(&Cell::new(c, r)) { '#' } else { '.' });
            }
            if r > 0 {
                out.push('\n');
            }
        }
        out
    }

    /// Parses the ASCII grid format produced by [`Polyomino::to_ascii`].
    ///
    /// Accepts a trailing newline. Rejects ragged lines, characters other
    /// than `#` and `.`, and grids whose `#` cells are empty or not
    /// edge-connected.
    pub fn from_ascii(text: &str) -> Result<Self, Error> {
        let text = text.strip_suffix('\n').unwrap_or(text);
        let lines: Vec<&str> = text.split('\n').collect();
        let height = lines.len() as i64;
        let width = lines[0].chars().count();
        if width == 0 {
            return Err(Error::AsciiParse("empty line".into()));
        }
        let mut cells = BTreeSet::new();
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != width {
                return Err(Error::AsciiParse(format!(
                    "line {} has length {}, expected {}",
                    i + 1,
                    line.chars().count(),
                    width
                )));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' => {
                        cells.insert(Cell::new(j as i64, height - 1 - i as i64));
                    }
                    '.' => {}
                    other => {
                        return Err(Error::AsciiParse(format!("unexpected character {other:?}")))
                    }
                }
            }
        }
        if cells.is_empty() {
            return Err(Error::AsciiParse("no occupied cells".into()));
        }
        if !is_polyomino(&cells) {
            return Err(Error::AsciiParse("cells are not edge-connected".into()));
        }
        Ok(Polyomino { cells })
    }
}

fn is_interval(values: &[i64]) -> bool {
    match (values.iter().min(), values.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo + 1 == values.len() as i64,
        _ => true, // the connectivity requirement already excludes gaps of whole rows/columns
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Streams every convex polyomino whose minimal bounding rectangle is
/// exactly `(m+1) x (n+1)`, normalized, each exactly once.
///
/// Uses the default feasibility bound `m + n <= DEFAULT_MAX_BRUTE`.
pub fn enumerate_convex(m: i64, n: i64) -> Result<ConvexEnumerator, Error> {
    enumerate_convex_bounded(m, n, DEFAULT_MAX_BRUTE)
}

/// Same as [`enumerate_convex`] with an explicit `m + n` bound.
pub fn enumerate_convex_bounded(m: i64, n: i64, max_mn: i64) -> Result<ConvexEnumerator, Error> {
    assert!(m >= 0 && n >= 0, "m and n must be non-negative");
    if m + n > max_mn {
        return Err(Error::Feasibility(format!(
            "enumeration requires m + n <= {max_mn}, got {m} + {n}"
        )));
    }
    Ok(ConvexEnumerator {
        m,
        n,
        stack: Vec::with_capacity((m + 1) as usize),
        started: false,
        done: false,
    })
}

/// Counts the stream of [`enumerate_convex`].
pub fn count_convex_bruteforce(m: i64, n: i64) -> Result<BigInt, Error> {
    count_convex_bruteforce_bounded(m, n, DEFAULT_MAX_BRUTE)
}

/// Counting variant with an explicit `m + n` bound.
pub fn count_convex_bruteforce_bounded(m: i64, n: i64, max_mn: i64) -> Result<BigInt, Error> {
    Ok(BigInt::from(enumerate_convex_bounded(m, n, max_mn)?.count()))
}

/// One chosen column interval `[lo, hi]` plus the unimodality state after
/// this column: once the lower profile has risen it may not fall again, and
/// once the upper profile has fallen it may not rise again.
#[derive(Clone, Copy)]
struct Frame {
    lo: i64,
    hi: i64,
    lo_rising: bool,
    hi_falling: bool,
}

/// Column-by-column generator. Each candidate interval must overlap its
/// predecessor and respect the unimodality state; completed candidates are
/// validated against the direct definition before being emitted, so the
/// pruning is a speedup only and cannot introduce wrong positives.
pub struct ConvexEnumerator {
    m: i64,
    n: i64,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl ConvexEnumerator {
    fn accepts(&self, depth: usize, lo: i64, hi: i64) -> Option<Frame> {
        if depth == 0 {
            return Some(Frame { lo, hi, lo_rising: false, hi_falling: false });
        }
        let prev = self.stack[depth - 1];
        if lo > prev.hi || hi < prev.lo {
            return None; // no overlap: would disconnect
        }
        if prev.lo_rising && lo < prev.lo {
            return None;
        }
        if prev.hi_falling && hi > prev.hi {
            return None;
        }
        Some(Frame {
            lo,
            hi,
            lo_rising: prev.lo_rising || lo > prev.lo,
            hi_falling: prev.hi_falling || hi < prev.hi,
        })
    }

    /// Places the first acceptable interval at-or-after `(lo, hi)` on the
    /// stack; returns false if the level is exhausted.
    fn seek(&mut self, depth: usize, mut lo: i64, mut hi: i64) -> bool {
        while lo <= self.n {
            if let Some(frame) = self.accepts(depth, lo, hi) {
                self.stack.push(frame);
                return true;
            }
            hi += 1;
            if hi > self.n {
                lo += 1;
                hi = lo;
            }
        }
        false
    }

    /// Backtracks: advances the deepest level that still has candidates.
    fn backtrack(&mut self) {
        while let Some(top) = self.stack.pop() {
            let depth = self.stack.len();
            let (mut lo, mut hi) = (top.lo, top.hi + 1);
            if hi > self.n {
                lo += 1;
                hi = lo;
            }
            if self.seek(depth, lo, hi) {
                return;
            }
        }
        self.done = true;
    }

    fn candidate(&self) -> Option<Polyomino> {
        let cells: BTreeSet<Cell> = self
            .stack
            .iter()
            .enumerate()
            .flat_map(|(c, f)| (f.lo..=f.hi).map(move |r| Cell::new(c as i64, r)))
            .collect();
        // Direct-definition validation: connected, convex, exact box.
        if !is_polyomino(&cells) {
            return None;
        }
        let p = Polyomino { cells };
        if !p.is_convex() || p.bounding_rect() != (self.m + 1, self.n + 1) || !p.is_normalized() {
            return None;
        }
        Some(p)
    }
}

impl Iterator for ConvexEnumerator {
    type Item = Polyomino;

    fn next(&mut self) -> Option<Polyomino> {
        if !self.started {
            self.started = true;
            if !self.seek(0, 0, 0) {
                self.done = true;
            }
        }
        loop {
            if self.done {
                return None;
            }
            if self.stack.len() == (self.m + 1) as usize {
                let candidate = self.candidate();
                self.backtrack();
                if let Some(p) = candidate {
                    return Some(p);
                }
            } else {
                let depth = self.stack.len();
                if !self.seek(depth, 0, 0) {
                    self.backtrack();
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Lattice paths and the four-path decomposition
// ---------------------------------------------------------------------------

/// Direction class of a monotone path: steps are drawn from exactly one of
/// `{RIGHT, UP}` or `{RIGHT, DOWN}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepClass {
    RightUp,
    RightDown,
}

/// One unit step; `Vert` moves up or down according to the path's class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Right,
    Vert,
}

/// A monotone lattice path: a start point and a homogeneous step sequence.
/// An empty step sequence is a point path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub class: StepClass,
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Point paths record `RightDown` by convention; the class is
    /// irrelevant for an empty step list.
    pub fn point(start: (i64, i64)) -> Self {
        LatticePath { start, class: StepClass::RightDown, steps: Vec::new() }
    }

    pub fn is_point(&self) -> bool {
        self.steps.is_empty()
    }

    fn delta(&self, step: Step) -> (i64, i64) {
        match (step, self.class) {
            (Step::Right, _) => (1, 0),
            (Step::Vert, StepClass::RightUp) => (0, 1),
            (Step::Vert, StepClass::RightDown) => (0, -1),
        }
    }

    pub fn end(&self) -> (i64, i64) {
        let mut p = self.start;
        for &s in &self.steps {
            let (dx, dy) = self.delta(s);
            p = (p.0 + dx, p.1 + dy);
        }
        p
    }

    /// All lattice points visited, start and end included.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            let (dx, dy) = self.delta(s);
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }
}

/// Corner cut sizes read off the boundary: `(a1,b1)` for the bottom-left
/// cut and `(a2,b2)` for the top-right cut. `(a1,b1) = (0,0)` iff `L1` is a
/// point, and likewise for `(a2,b2)` and `L2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerParams {
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
}

/// The four boundary paths of a convex polyomino spanning an
/// `(m+1) x (n+1)` box:
///
/// - `l1`: `(0,b1) -> (a1,0)`, right/down, around the bottom-left cut;
/// - `l2`: `(m+1-a2,n+1) -> (m+1,n+1-b2)`, right/down, top-right cut;
/// - `l3`: `(a1+1,0) -> (m+1,n-b2)`, right/up, the lower boundary;
/// - `l4`: `(0,b1+1) -> (m-a2,n+1)`, right/up, the upper boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: i64,
    pub n: i64,
    pub params: CornerParams,
    pub l1: LatticePath,
    pub l2: LatticePath,
    pub l3: LatticePath,
    pub l4: LatticePath,
}

/// Row and column extents of a normalized polyomino spanning its box.
struct Profiles {
    row_lo: Vec<i64>,
    row_hi: Vec<i64>,
    col_top: Vec<i64>,
}

fn profiles(p: &Polyomino, m: i64, n: i64) -> Profiles {
    let mut row_lo = vec![i64::MAX; (n + 1) as usize];
    let mut row_hi = vec![i64::MIN; (n + 1) as usize];
    let mut col_top = vec![i64::MIN; (m + 1) as usize];
    for c in p.cells() {
        let (col, row) = (c.col as usize, c.row as usize);
        row_lo[row] = row_lo[row].min(c.col);
        row_hi[row] = row_hi[row].max(c.col);
        col_top[col] = col_top[col].max(c.row);
    }
    Profiles { row_lo, row_hi, col_top }
}

/// Builds the bottom-left boundary path `(0,b1) -> (a1,0)` from the row
/// lower extents (right/down steps, hugging the polyomino).
fn lower_left_path(row_lo: &[i64], b1: i64) -> LatticePath {
    let mut steps = Vec::new();
    let mut x = 0;
    for r in (0..b1).rev() {
        let target = row_lo[r as usize];
        for _ in x..target {
            steps.push(Step::Right);
        }
        x = target;
        steps.push(Step::Vert);
    }
    LatticePath { start: (0, b1), class: StepClass::RightDown, steps }
}

/// Builds the lower boundary path `(a1+1,0) -> (m+1,n-b2)` from the row
/// upper extents (right/up steps).
fn lower_right_path(row_hi: &[i64], m: i64, a1: i64, b2: i64) -> LatticePath {
    let n = row_hi.len() as i64 - 1;
    let mut steps = Vec::new();
    let mut x = a1 + 1;
    for r in 0..(n - b2) {
        let target = row_hi[r as usize] + 1;
        for _ in x..target {
            steps.push(Step::Right);
        }
        x = target;
        steps.push(Step::Vert);
    }
    for _ in x..=m {
        steps.push(Step::Right);
    }
    LatticePath { start: (a1 + 1, 0), class: StepClass::RightUp, steps }
}

/// Decomposes a convex polyomino spanning its bounding box into the four
/// boundary paths and corner parameters.
pub fn decompose(p: &Polyomino) -> Result<Decomposition, Error> {
    if !p.is_normalized() {
        return Err(Error::InvalidPolyomino("not normalized".into()));
    }
    if !p.is_convex() {
        return Err(Error::InvalidPolyomino("not convex".into()));
    }
    let (w, h) = p.bounding_rect();
    let (m, n) = (w - 1, h - 1);
    let prof = profiles(p, m, n);

    let a1 = prof.row_lo[0];
    let b1 = (0..=n).find(|&r| prof.row_lo[r as usize] == 0).unwrap();
    let a2 = m - prof.row_hi[n as usize];
    let b2 = n - prof.col_top[m as usize];

    let l1 = lower_left_path(&prof.row_lo, b1);

    // l2 is l1 of the 180-degree rotation, mapped back: the point map
    // (x,y) -> (m+1-x, n+1-y) reverses the path and preserves step labels.
    let rot = p.rotate180(m, n);
    let rot_prof = profiles(&rot, m, n);
    let rot_b1 = (0..=n).find(|&r| rot_prof.row_lo[r as usize] == 0).unwrap();
    debug_assert_eq!(rot_b1, b2);
    let mut l2_steps = lower_left_path(&rot_prof.row_lo, rot_b1).steps;
    l2_steps.reverse();
    let l2 = LatticePath {
        start: (m + 1 - a2, n + 1),
        class: StepClass::RightDown,
        steps: l2_steps,
    };

    let l3 = lower_right_path(&prof.row_hi, m, a1, b2);

    // l4 is l3 of the transpose with Right and Vert swapped.
    let tr = p.transpose();
    let tr_prof = profiles(&tr, n, m);
    let l4_steps: Vec<Step> = lower_right_path(&tr_prof.row_hi, n, b1, a2)
        .steps
        .iter()
        .map(|s| match s {
            Step::Right => Step::Vert,
            Step::Vert => Step::Right,
        })
        .collect();
    let l4 = LatticePath { start: (0, b1 + 1), class: StepClass::RightUp, steps: l4_steps };

    let d = Decomposition {
        m,
        n,
        params: CornerParams { a1, b1, a2, b2 },
        l1,
        l2,
        l3,
        l4,
    };
    debug_assert_eq!(d.l1.end(), (a1, 0));
    debug_assert_eq!(d.l2.end(), (m + 1, n + 1 - b2));
    debug_assert_eq!(d.l3.end(), (m + 1, n - b2));
    debug_assert_eq!(d.l4.end(), (m - a2, n + 1));
    Ok(d)
}

fn check_endpoints(
    path: &LatticePath,
    class: StepClass,
    start: (i64, i64),
    end: (i64, i64),
    name: &str,
) -> Result<(), Error> {
    if path.start != start || path.end() != end || (!path.is_point() && path.class != class) {
        return Err(Error::EndpointMismatch(format!(
            "{name}: expected {start:?} -> {end:?}, got {:?} -> {:?}",
            path.start,
            path.end()
        )));
    }
    Ok(())
}

fn shared_vertex(a: &LatticePath, b: &LatticePath) -> Option<(i64, i64)> {
    let set: HashSet<(i64, i64)> = a.vertices().into_iter().collect();
    b.vertices().into_iter().find(|v| set.contains(v))
}

/// Rebuilds the unique polyomino of `P_{m,n}` with the given boundary
/// paths. Inverse of [`decompose`].
pub fn recompose(d: &Decomposition) -> Result<Polyomino, Error> {
    let (m, n) = (d.m, d.n);
    let CornerParams { a1, b1, a2, b2 } = d.params;
    if !(0..=m).contains(&a1) || !(0..=m).contains(&a2) || !(0..=n).contains(&b1) || !(0..=n).contains(&b2) {
        return Err(Error::EndpointMismatch(format!(
            "corner parameters out of range for ({m},{n}): {:?}",
            d.params
        )));
    }
    check_endpoints(&d.l1, StepClass::RightDown, (0, b1), (a1, 0), "L1")?;
    check_endpoints(&d.l2, StepClass::RightDown, (m + 1 - a2, n + 1), (m + 1, n + 1 - b2), "L2")?;
    check_endpoints(&d.l3, StepClass::RightUp, (a1 + 1, 0), (m + 1, n - b2), "L3")?;
    check_endpoints(&d.l4, StepClass::RightUp, (0, b1 + 1), (m - a2, n + 1), "L4")?;
    if let Some((x, y)) = shared_vertex(&d.l1, &d.l2) {
        return Err(Error::PathsIntersect(x, y));
    }
    if let Some((x, y)) = shared_vertex(&d.l3, &d.l4) {
        return Err(Error::PathsIntersect(x, y));
    }

    let mut grid = vec![vec![true; (m + 1) as usize]; (n + 1) as usize];
    let mut cut = |col: i64, row: i64| {
        if (0..=m).contains(&col) && (0..=n).contains(&row) {
            grid[row as usize][col as usize] = false;
        }
    };
    // Each path's steps carve out one corner region: a down step of L1 at x
    // fixes the left extent of the row below it, a right step of L2/L4 at
    // height y fixes the top extent of that column, an up step of L3 at x
    // fixes the right extent of the row it leaves.
    for w in d.l1.vertices().windows(2) {
        if w[1].1 < w[0].1 {
            for c in 0..w[0].0 {
                cut(c, w[1].1);
            }
        }
    }
    for path in [&d.l2, &d.l4] {
        for w in path.vertices().windows(2) {
            if w[1].0 > w[0].0 {
                for r in w[0].1..=n {
                    cut(w[0].0, r);
                }
            }
        }
    }
    for w in d.l3.vertices().windows(2) {
        if w[1].1 > w[0].1 {
            for c in w[0].0..=m {
                cut(c, w[0].1);
            }
        }
    }

    let cells = grid.iter().enumerate().flat_map(|(r, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, occ)| **occ)
            .map(move |(c, _)| Cell::new(c as i64, r as i64))
    });
    let p = Polyomino::new(cells)
        .map_err(|e| Error::InvalidPolyomino(format!("recomposed region: {e}")))?;
    if !p.is_convex() || p.bounding_rect() != (m + 1, n + 1) || !p.is_normalized() {
        return Err(Error::InvalidPolyomino(
            "recomposed region does not span its box convexly".into(),
        ));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Non-intersecting path pairs (the tail-switching determinant)
// ---------------------------------------------------------------------------

fn check_lemma_hypotheses(
    (a, b): (i64, i64),
    (c, d): (i64, i64),
    (a2, b2): (i64, i64),
    (c2, d2): (i64, i64),
) -> Result<(), Error> {
    // The first six inequalities put the starts in strict NW/SE position
    // and make both paths non-degenerate; the last two order the endpoints
    // the same way. Without the endpoint ordering the tail-switching
    // bijection breaks down: for P1: (0,1)->(1,2), P2: (1,0)->(2,3) the
    // determinant gives 2 but 3 non-intersecting pairs exist. Every use
    // on the four boundary paths satisfies the full set.
    let conds = [
        (a2 > a, "a' > a"),
        (b > b2, "b > b'"),
        (c > a, "c > a"),
        (d > b, "d > b"),
        (c2 > a2, "c' > a'"),
        (d2 > b2, "d' > b'"),
        (c2 > c, "c' > c"),
        (d > d2, "d > d'"),
    ];
    for (ok, name) in conds {
        if !ok {
            return Err(Error::Hypothesis(name.into()));
        }
    }
    Ok(())
}

/// Number of non-intersecting pairs of right/up paths
/// `P1: (a,b) -> (c,d)` and `P2: (a2,b2) -> (c2,d2)` by the 2x2
/// determinant of single-path counts.
pub fn count_path_pairs_lgv(
    p1_start: (i64, i64),
    p1_end: (i64, i64),
    p2_start: (i64, i64),
    p2_end: (i64, i64),
) -> Result<BigInt, Error> {
    check_lemma_hypotheses(p1_start, p1_end, p2_start, p2_end)?;
    let (a, b) = p1_start;
    let (c, d) = p1_end;
    let (a2, b2) = p2_start;
    let (c2, d2) = p2_end;
    Ok(
        binomial(c - a + d - b, c - a) * binomial(c2 - a2 + d2 - b2, c2 - a2)
            - binomial(c - a2 + d - b2, c - a2) * binomial(c2 - a + d2 - b, c2 - a),
    )
}

/// Exhaustive oracle for [`count_path_pairs_lgv`]: enumerates every pair of
/// monotone paths and discards those sharing a lattice point.
pub fn count_path_pairs_bruteforce(
    p1_start: (i64, i64),
    p1_end: (i64, i64),
    p2_start: (i64, i64),
    p2_end: (i64, i64),
) -> Result<BigInt, Error> {
    check_lemma_hypotheses(p1_start, p1_end, p2_start, p2_end)?;
    for (s, e) in [(p1_start, p1_end), (p2_start, p2_end)] {
        if e.0 - s.0 > MAX_PATH_DISPLACEMENT || e.1 - s.1 > MAX_PATH_DISPLACEMENT {
            return Err(Error::Feasibility(format!(
                "path displacement {:?} -> {:?} exceeds {MAX_PATH_DISPLACEMENT} per axis",
                s, e
            )));
        }
    }
    let min_x = p1_start.0.min(p2_start.0);
    let min_y = p1_start.1.min(p2_start.1);
    let width = (p1_end.0.max(p2_end.0) - min_x + 1) as usize;
    let height = (p1_end.1.max(p2_end.1) - min_y + 1) as usize;
    let words = (width * height + 63) / 64;
    let bit = |x: i64, y: i64| ((x - min_x) as usize) + width * ((y - min_y) as usize);

    // Visited-point bitmasks for every monotone path between the endpoints.
    fn gen_masks(
        start: (i64, i64),
        end: (i64, i64),
        words: usize,
        bit: &impl Fn(i64, i64) -> usize,
    ) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut mask = vec![0u64; words];
        let b = bit(start.0, start.1);
        mask[b / 64] |= 1 << (b % 64);
        fn rec(
            cur: (i64, i64),
            end: (i64, i64),
            mask: &mut Vec<u64>,
            out: &mut Vec<Vec<u64>>,
            bit: &impl Fn(i64, i64) -> usize,
        ) {
            if cur == end {
                out.push(mask.clone());
                return;
            }
            for step in [(1, 0), (0, 1)] {
                let next = (cur.0 + step.0, cur.1 + step.1);
                if next.0 <= end.0 && next.1 <= end.1 {
                    let b = bit(next.0, next.1);
                    mask[b / 64] |= 1 << (b % 64);
                    rec(next, end, mask, out, bit);
                    mask[b / 64] &= !(1 << (b % 64));
                }
            }
        }
        rec(start, end, &mut mask, &mut out, bit);
        out
    }

    let masks1 = gen_masks(p1_start, p1_end, words, &bit);
    let masks2 = gen_masks(p2_start, p2_end, words, &bit);
    let mut count: u64 = 0;
    for m1 in &masks1 {
        for m2 in &masks2 {
            if m1.iter().zip(m2).all(|(x, y)| x & y == 0) {
                count += 1;
            }
        }
    }
    Ok(BigInt::from(count))
}
