#![no_main]

use libfuzzer_sys::fuzz_target;

// Bounded solve on whatever parses; larger orders can search for too long.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = bitsudoku::parse(text) else {
        return;
    };
    if doc.order() > 3 {
        return;
    }
    let puzzle = doc.to_grid();
    match bitsudoku::solve(&puzzle, 4, Some(64)) {
        Ok(report) => {
            assert!(report.solutions.len() as u64 <= report.solution_count);
            for s in &report.solutions {
                assert_eq!(s.is_sudoku_matrix(), Ok(true));
                for (p, v) in puzzle.cells().iter().zip(s.cells()) {
                    assert!(*p == 0 || p == v);
                }
            }
        }
        Err(bitsudoku::SolveError::Conflict(_)) => assert!(!puzzle.is_consistent_partial()),
        Err(e) => panic!("unexpected error {e}"),
    }
});
