mod common;

use bitsudoku::grid::{parse, render_grid, Format, Grid};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid_strategy() -> impl Strategy<Value = Grid> {
    (2usize..=5).prop_flat_map(|n| {
        let m = n * n;
        proptest::collection::vec(0..=m as u8, m * m)
            .prop_map(move |cells| Grid::from_cells(n, &cells).unwrap())
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(grid in grid_strategy()) {
        let doc = bitsudoku::PuzzleDocument::from_grid(&grid);
        let text = doc.render(Format::Generic).unwrap();
        prop_assert_eq!(&parse(&text).unwrap(), &doc);
        prop_assert_eq!(parse(&text).unwrap().to_grid(), grid.clone());
        if grid.order() == 3 {
            let classic = doc.render(Format::Classic).unwrap();
            prop_assert_eq!(parse(&classic).unwrap(), doc);
        }
    }

    #[test]
    fn documents_account_for_every_cell(grid in grid_strategy()) {
        let doc = bitsudoku::PuzzleDocument::from_grid(&grid);
        let m = grid.side();
        prop_assert_eq!(doc.clues().len() + doc.blanks().len(), m * m);
        prop_assert!(doc.clues().iter().all(|c| c.value >= 1 && usize::from(c.value) <= m));
    }

    #[test]
    fn parse_never_panics(text in "[0-9. #\\n\\-a]{0,200}") {
        let _ = parse(&text);
    }
}

#[test]
fn valid_matrices_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for order in [2, 3] {
        for _ in 0..5 {
            let cells = common::random_complete_grid(order, &mut rng);
            let grid = Grid::from_cells(order, &cells).unwrap();
            assert_eq!(grid.is_sudoku_matrix(), Ok(true));
            assert!(grid.is_consistent_partial());
            assert!(common::is_valid_complete(order, &cells));
            let text = render_grid(&grid, Format::Generic).unwrap();
            assert_eq!(parse(&text).unwrap().to_grid(), grid);
        }
    }
}
