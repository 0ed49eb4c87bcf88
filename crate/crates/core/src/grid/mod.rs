//! The `m × m` Sudoku matrix (`m = n²`) and its block geometry.
//!
//! All public coordinates are 1-based: rows `i` and columns `j` run over
//! `1..=m`, block coordinates `k` and `l` over `1..=n`. Blank cells hold `0`.

mod document;

pub use document::{parse, render_grid, Clue, Format, ParseError, ParseErrorKind, PuzzleDocument};

use std::fmt;

use thiserror::Error;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("order {0} is outside {MIN_ORDER}..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("cell ({row}, {col}) is outside a {side}×{side} grid")]
    IndexOutOfRange { row: usize, col: usize, side: usize },
    #[error("value {value} is outside 0..={side}")]
    ValueOutOfRange { value: usize, side: usize },
    #[error("expected {expected} cells, got {found}")]
    CellCount { expected: usize, found: usize },
    #[error("cell ({row}, {col}) is blank")]
    Incomplete { row: usize, col: usize },
    #[error("format {format} cannot represent an order-{order} grid")]
    UnsupportedFormat { format: Format, order: usize },
}

/// One row, column or block of the grid, in 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Row(usize),
    Column(usize),
    Block(usize, usize),
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Row(i) => write!(f, "row {i}"),
            Unit::Column(j) => write!(f, "column {j}"),
            Unit::Block(k, l) => write!(f, "block ({k}, {l})"),
        }
    }
}

/// A value appearing twice in one unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conflict {
    pub unit: Unit,
    pub value: u8,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value {} repeated in {}", self.value, self.unit)
    }
}

/// Block coordinates `(k, l)` of cell `(i, j)` in a grid of order `n`:
/// `k = ⌊(i − 1)/n⌋ + 1`, `l = ⌊(j − 1)/n⌋ + 1`.
pub fn block_of(i: usize, j: usize, n: usize) -> Result<(usize, usize), GridError> {
    let side = n * n;
    if i == 0 || j == 0 || i > side || j > side {
        return Err(GridError::IndexOutOfRange {
            row: i,
            col: j,
            side,
        });
    }
    Ok(((i - 1) / n + 1, (j - 1) / n + 1))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    order: usize,
    side: usize,
    // row-major, 0-based
    cells: Vec<u8>,
}

impl Grid {
    /// An all-blank grid of the given order.
    pub fn new(order: usize) -> Result<Self, GridError> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
            return Err(GridError::OrderOutOfRange(order));
        }
        let side = order * order;
        Ok(Grid {
            order,
            side,
            cells: vec![0; side * side],
        })
    }

    /// Builds a grid from `m²` row-major values.
    pub fn from_cells(order: usize, cells: &[u8]) -> Result<Self, GridError> {
        let mut grid = Grid::new(order)?;
        if cells.len() != grid.cells.len() {
            return Err(GridError::CellCount {
                expected: grid.cells.len(),
                found: cells.len(),
            });
        }
        if let Some(&v) = cells.iter().find(|&&v| usize::from(v) > grid.side) {
            return Err(GridError::ValueOutOfRange {
                value: v.into(),
                side: grid.side,
            });
        }
        grid.cells.copy_from_slice(cells);
        Ok(grid)
    }

    /// Builds a grid from a slice of rows.
    pub fn from_rows<R: AsRef<[u8]>>(order: usize, rows: &[R]) -> Result<Self, GridError> {
        let flat: Vec<u8> = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        let side = order * order;
        if rows.len() != side || rows.iter().any(|r| r.as_ref().len() != side) {
            return Err(GridError::CellCount {
                expected: side * side,
                found: flat.len(),
            });
        }
        Grid::from_cells(order, &flat)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn side(&self) -> usize {
        self.side
    }

    /// Row-major cell values.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    fn offset(&self, i: usize, j: usize) -> Result<usize, GridError> {
        if i == 0 || j == 0 || i > self.side || j > self.side {
            return Err(GridError::IndexOutOfRange {
                row: i,
                col: j,
                side: self.side,
            });
        }
        Ok((i - 1) * self.side + (j - 1))
    }

    pub fn get(&self, i: usize, j: usize) -> Result<u8, GridError> {
        Ok(self.cells[self.offset(i, j)?])
    }

    pub fn set(&mut self, i: usize, j: usize, value: u8) -> Result<(), GridError> {
        if usize::from(value) > self.side {
            return Err(GridError::ValueOutOfRange {
                value: value.into(),
                side: self.side,
            });
        }
        let at = self.offset(i, j)?;
        self.cells[at] = value;
        Ok(())
    }

    // Unchecked accessors for 0-based offsets, used by the solver.
    #[inline]
    pub(crate) fn value_at(&self, offset: usize) -> u8 {
        self.cells[offset]
    }

    #[inline]
    pub(crate) fn put_at(&mut self, offset: usize, value: u8) {
        self.cells[offset] = value;
    }

    /// 0-based block index `(k − 1)·n + (l − 1)` of a 0-based offset.
    #[inline]
    pub(crate) fn block_index_at(&self, offset: usize) -> usize {
        let (r, c) = (offset / self.side, offset % self.side);
        (r / self.order) * self.order + c / self.order
    }

    pub fn blank_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v == 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&v| v != 0)
    }

    /// The 1-based `(row, column)` positions of cells in `unit`, row-major.
    pub fn unit_cells(&self, unit: Unit) -> Vec<(usize, usize)> {
        let m = self.side;
        let n = self.order;
        match unit {
            Unit::Row(i) => (1..=m).map(|j| (i, j)).collect(),
            Unit::Column(j) => (1..=m).map(|i| (i, j)).collect(),
            Unit::Block(k, l) => {
                let rows = (k - 1) * n + 1..=k * n;
                rows.flat_map(|i| ((l - 1) * n + 1..=l * n).map(move |j| (i, j)))
                    .collect()
            }
        }
    }

    /// Every unit: rows first, then columns, then blocks in row-major order.
    pub fn units(&self) -> impl Iterator<Item = Unit> {
        let m = self.side;
        let n = self.order;
        (1..=m)
            .map(Unit::Row)
            .chain((1..=m).map(Unit::Column))
            .chain((1..=n).flat_map(move |k| (1..=n).map(move |l| Unit::Block(k, l))))
    }

    fn unit_values(&self, unit: Unit) -> impl Iterator<Item = u8> + '_ {
        self.unit_cells(unit)
            .into_iter()
            .map(move |(i, j)| self.cells[(i - 1) * self.side + (j - 1)])
    }

    /// The first repeated nonzero value, scanning rows, then columns, then
    /// blocks, each unit in reading order.
    pub fn first_conflict(&self) -> Option<Conflict> {
        for unit in self.units() {
            let mut seen = 0u64;
            for v in self.unit_values(unit) {
                if v == 0 {
                    continue;
                }
                let bit = 1u64 << v;
                if seen & bit != 0 {
                    return Some(Conflict { unit, value: v });
                }
                seen |= bit;
            }
        }
        None
    }

    /// True when no row, column or block repeats a nonzero value.
    pub fn is_consistent_partial(&self) -> bool {
        self.first_conflict().is_none()
    }

    /// True when every row, column and block is a permutation of `1..=m`.
    /// Fails on any blank cell.
    pub fn is_sudoku_matrix(&self) -> Result<bool, GridError> {
        if let Some(at) = self.cells.iter().position(|&v| v == 0) {
            return Err(GridError::Incomplete {
                row: at / self.side + 1,
                col: at % self.side + 1,
            });
        }
        // m distinct values from 1..=m in each unit is a permutation
        Ok(self.is_consistent_partial())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.side) {
            for (idx, v) in row.iter().enumerate() {
                if idx > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Grid(order {})", self.order)?;
        fmt::Display::fmt(self, f)
    }
}
