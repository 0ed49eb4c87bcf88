//! Sudoku solving and exact solution counting for `n² × n²` grids
//! (`2 ≤ n ≤ 5`), with candidate bookkeeping done in single-word bitsets.

pub mod cli;
pub mod grid;
pub mod sieve;
pub mod smallset;
pub mod solver;

pub use grid::{block_of, parse, render_grid, Format, Grid, GridError, ParseError, PuzzleDocument};
pub use sieve::primes_up_to;
pub use smallset::{bit_value, power2, SetError, SmallSet};
pub use solver::{
    init_state, solve, solve_with, Branching, Event, SolveError, SolveOptions, SolveReport,
    SolverState,
};
