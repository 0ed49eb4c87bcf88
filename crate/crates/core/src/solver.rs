//! Candidate-set propagation and exhaustive trial search.
//!
//! For every row `i`, column `j` and block `(k, l)` the state keeps the set of
//! values still missing from it (`R_i`, `C_j`, `B_kl`). The values placeable
//! in a blank cell are `P = R_i ∩ C_j ∩ B_kl`. Propagation sweeps the blanks
//! and, per cell:
//!
//! * `|P| = 0`: the puzzle has no completion from here (contradiction);
//! * `|P| = 1`: the single value is placed and removed from `R_i`, `C_j`,
//!   `B_kl`;
//! * `|P| ≥ 2`: nothing is learned yet.
//!
//! Sweeps repeat until every cell is filled, a contradiction appears, or a
//! whole sweep places nothing (stalled). On a stall the search picks a blank,
//! tries each of its candidates in ascending order as a trial, and recurses
//! on a copy of the state.

use std::fmt;

use thiserror::Error;

use crate::grid::{Conflict, Grid, GridError};
use crate::smallset::SmallSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("inconsistent clues: {0}")]
    Conflict(Conflict),
    #[error("cell ({row}, {col}) is not blank")]
    NotBlank { row: usize, col: usize },
    #[error("value {value} is not a candidate for cell ({row}, {col})")]
    NotCandidate { row: usize, col: usize, value: u8 },
    #[error("solution limit must be at least 1")]
    ZeroLimit,
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Outcome of propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    /// Some blank cell has no candidates.
    Contradiction,
    /// Every cell holds a value.
    Solved,
    /// A full sweep placed nothing and blanks remain.
    Stalled,
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Event::Contradiction => "E1_CONTRADICTION",
            Event::Solved => "E2_SOLVED",
            Event::Stalled => "E3_EXHAUSTED_BY_SEARCH",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Propagation {
    pub event: Event,
    /// Completed sweeps over the blank list.
    pub passes: u64,
}

/// A partial assignment together with its missing-value sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverState {
    grid: Grid,
    rows: Vec<SmallSet>,
    cols: Vec<SmallSet>,
    blocks: Vec<SmallSet>,
    // 0-based offsets, ascending
    blanks: Vec<usize>,
}

/// Builds the state for `grid`, rejecting grids with repeated clues.
pub fn init_state(grid: &Grid) -> Result<SolverState, SolveError> {
    SolverState::new(grid)
}

impl SolverState {
    pub fn new(grid: &Grid) -> Result<Self, SolveError> {
        if let Some(conflict) = grid.first_conflict() {
            return Err(SolveError::Conflict(conflict));
        }
        let m = grid.side();
        let full = SmallSet::full(m as u32).expect("side ≤ 25 fits a word");
        let mut state = SolverState {
            grid: grid.clone(),
            rows: vec![full; m],
            cols: vec![full; m],
            blocks: vec![full; m],
            blanks: Vec::new(),
        };
        for offset in 0..m * m {
            match grid.value_at(offset) {
                0 => state.blanks.push(offset),
                v => state.strike(offset, v),
            }
        }
        Ok(state)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn into_grid(self) -> Grid {
        self.grid
    }

    /// Values missing from row `i`.
    pub fn row_missing(&self, i: usize) -> Result<SmallSet, SolveError> {
        self.grid.get(i, 1)?;
        Ok(self.rows[i - 1])
    }

    /// Values missing from column `j`.
    pub fn col_missing(&self, j: usize) -> Result<SmallSet, SolveError> {
        self.grid.get(1, j)?;
        Ok(self.cols[j - 1])
    }

    /// Values missing from block `(k, l)`.
    pub fn block_missing(&self, k: usize, l: usize) -> Result<SmallSet, SolveError> {
        let n = self.grid.order();
        if k == 0 || l == 0 || k > n || l > n {
            return Err(GridError::IndexOutOfRange {
                row: k,
                col: l,
                side: n,
            }
            .into());
        }
        Ok(self.blocks[(k - 1) * n + (l - 1)])
    }

    /// Blank positions, 1-based, row-major.
    pub fn blanks(&self) -> Vec<(usize, usize)> {
        let m = self.grid.side();
        self.blanks
            .iter()
            .map(|&o| (o / m + 1, o % m + 1))
            .collect()
    }

    pub fn blank_count(&self) -> usize {
        self.blanks.len()
    }

    #[inline]
    fn offset(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.grid.side() + (j - 1)
    }

    #[inline]
    fn strike(&mut self, offset: usize, value: u8) {
        let m = self.grid.side();
        let d = u32::from(value);
        let b = self.grid.block_index_at(offset);
        let (r, c) = (offset / m, offset % m);
        self.rows[r] = self.rows[r].remove(d).expect("value within universe");
        self.cols[c] = self.cols[c].remove(d).expect("value within universe");
        self.blocks[b] = self.blocks[b].remove(d).expect("value within universe");
    }

    #[inline]
    fn candidates_at(&self, offset: usize) -> SmallSet {
        let m = self.grid.side();
        let b = self.grid.block_index_at(offset);
        self.rows[offset / m] & self.cols[offset % m] & self.blocks[b]
    }

    /// Writes `value` into a blank cell and strikes it from the cell's units.
    /// The caller keeps `blanks` in sync.
    #[inline]
    fn place(&mut self, offset: usize, value: u8) {
        self.grid.put_at(offset, value);
        self.strike(offset, value);
    }

    /// `P = R_i ∩ C_j ∩ B_kl` for blank cell `(i, j)`.
    pub fn candidates(&self, i: usize, j: usize) -> Result<SmallSet, SolveError> {
        if self.grid.get(i, j)? != 0 {
            return Err(SolveError::NotBlank { row: i, col: j });
        }
        Ok(self.candidates_at(self.offset(i, j)))
    }

    /// Places candidate `d` in blank cell `(i, j)`.
    pub fn assign(&mut self, i: usize, j: usize, d: u8) -> Result<(), SolveError> {
        let p = self.candidates(i, j)?;
        if d == 0 || !p.contains(u32::from(d)).unwrap_or(false) {
            return Err(SolveError::NotCandidate {
                row: i,
                col: j,
                value: d,
            });
        }
        let offset = self.offset(i, j);
        let at = self
            .blanks
            .binary_search(&offset)
            .expect("blank cell is listed");
        self.blanks.remove(at);
        self.place(offset, d);
        Ok(())
    }

    /// Sweeps the blanks in row-major order until solved, contradicted, or a
    /// sweep places nothing.
    pub fn propagate(&mut self) -> Propagation {
        let mut passes = 0;
        loop {
            if self.blanks.is_empty() {
                return Propagation {
                    event: Event::Solved,
                    passes,
                };
            }
            let pending = std::mem::take(&mut self.blanks);
            let mut remaining = Vec::with_capacity(pending.len());
            let mut placed = 0usize;
            for (idx, &offset) in pending.iter().enumerate() {
                let p = self.candidates_at(offset);
                match p.cardinality() {
                    0 => {
                        remaining.extend_from_slice(&pending[idx..]);
                        self.blanks = remaining;
                        return Propagation {
                            event: Event::Contradiction,
                            passes,
                        };
                    }
                    1 => {
                        let d = p.min_element().expect("singleton") as u8;
                        self.place(offset, d);
                        placed += 1;
                    }
                    _ => remaining.push(offset),
                }
            }
            self.blanks = remaining;
            passes += 1;
            if placed == 0 {
                return Propagation {
                    event: Event::Stalled,
                    passes,
                };
            }
        }
    }
}

/// How the search chooses the cell to branch on after a stall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branching {
    /// The blank with the fewest candidates, ties broken row-major.
    #[default]
    FewestCandidates,
    /// The first blank in row-major order.
    RowMajor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Solutions to retain in the report.
    pub cap: usize,
    /// Stop once this many solutions have been counted.
    pub limit: Option<u64>,
    pub branching: Branching,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: 1,
            limit: None,
            branching: Branching::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution_count: u64,
    /// The first `cap` solutions found, in search order.
    pub solutions: Vec<Grid>,
    /// Trial assignments made over the whole search.
    pub trials: u64,
    /// Trial assignments made before the first solution was recorded.
    pub trials_to_first_solution: Option<u64>,
    /// Propagation sweeps summed over every search node.
    pub propagation_passes: u64,
    /// What propagation on the unmodified puzzle ended with.
    pub terminal_event: Event,
    /// The limit stopped the search with branches left unexplored, so
    /// `solution_count` is a lower bound.
    pub truncated: bool,
}

impl SolveReport {
    /// `K` or `K+` when the count is a lower bound.
    pub fn count_label(&self) -> String {
        if self.truncated {
            format!("{}+", self.solution_count)
        } else {
            self.solution_count.to_string()
        }
    }

    /// `solutions=<K> trials=<T> passes=<P>`
    pub fn stats_line(&self) -> String {
        format!(
            "solutions={} trials={} passes={}",
            self.count_label(),
            self.trials,
            self.propagation_passes
        )
    }
}

/// Counts the solutions of `grid`, keeping up to `cap` of them and stopping
/// after `limit` if given.
pub fn solve(grid: &Grid, cap: usize, limit: Option<u64>) -> Result<SolveReport, SolveError> {
    solve_with(
        grid,
        &SolveOptions {
            cap,
            limit,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_with(grid: &Grid, options: &SolveOptions) -> Result<SolveReport, SolveError> {
    if options.limit == Some(0) {
        return Err(SolveError::ZeroLimit);
    }
    let state = SolverState::new(grid)?;
    let mut search = Search {
        options,
        count: 0,
        solutions: Vec::new(),
        trials: 0,
        trials_to_first: None,
        passes: 0,
        stopped: false,
        truncated: false,
    };
    let root_event = search.run(state);
    Ok(SolveReport {
        solution_count: search.count,
        solutions: search.solutions,
        trials: search.trials,
        trials_to_first_solution: search.trials_to_first,
        propagation_passes: search.passes,
        terminal_event: root_event,
        truncated: search.truncated,
    })
}

struct Search<'a> {
    options: &'a SolveOptions,
    count: u64,
    solutions: Vec<Grid>,
    trials: u64,
    trials_to_first: Option<u64>,
    passes: u64,
    stopped: bool,
    truncated: bool,
}

impl Search<'_> {
    fn record(&mut self, grid: Grid) {
        self.count += 1;
        if self.trials_to_first.is_none() {
            self.trials_to_first = Some(self.trials);
        }
        if self.solutions.len() < self.options.cap {
            self.solutions.push(grid);
        }
        if self.options.limit == Some(self.count) {
            self.stopped = true;
        }
    }

    fn branch_cell(&self, state: &SolverState) -> usize {
        match self.options.branching {
            Branching::RowMajor => state.blanks[0],
            Branching::FewestCandidates => {
                let mut best = state.blanks[0];
                let mut best_size = u32::MAX;
                for &offset in &state.blanks {
                    let size = state.candidates_at(offset).cardinality();
                    if size < best_size {
                        best = offset;
                        best_size = size;
                        // a stalled state has no singletons
                        if size <= 2 {
                            break;
                        }
                    }
                }
                best
            }
        }
    }

    fn run(&mut self, mut state: SolverState) -> Event {
        let prop = state.propagate();
        self.passes += prop.passes;
        match prop.event {
            Event::Contradiction => {}
            Event::Solved => self.record(state.into_grid()),
            Event::Stalled => {
                let offset = self.branch_cell(&state);
                let at = state
                    .blanks
                    .binary_search(&offset)
                    .expect("branch cell is blank");
                state.blanks.remove(at);
                for d in state.candidates_at(offset) {
                    if self.stopped {
                        self.truncated = true;
                        break;
                    }
                    self.trials += 1;
                    let mut child = state.clone();
                    child.place(offset, d as u8);
                    self.run(child);
                }
            }
        }
        prop.event
    }
}
