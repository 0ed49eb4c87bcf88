//! Reference implementations used as oracles. Nothing here touches the
//! library's bitsets or propagation code.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

/// Explicit element list, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveSet {
    pub items: Vec<u32>,
}

impl NaiveSet {
    /// Elements `d` with bit `d - 1` of `word` set, found by division.
    pub fn from_word(word: u32, capacity: u32) -> Self {
        let mut items = Vec::new();
        let mut w = u64::from(word);
        for d in 1..=capacity {
            if w % 2 == 1 {
                items.push(d);
            }
            w /= 2;
        }
        NaiveSet { items }
    }

    pub fn to_word(&self) -> u32 {
        self.items.iter().map(|&d| 2u64.pow(d - 1)).sum::<u64>() as u32
    }

    pub fn contains(&self, d: u32) -> bool {
        self.items.contains(&d)
    }

    pub fn intersect(&self, other: &NaiveSet) -> NaiveSet {
        NaiveSet {
            items: self
                .items
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn union(&self, other: &NaiveSet) -> NaiveSet {
        let mut items = self.items.clone();
        for &x in &other.items {
            if !items.contains(&x) {
                items.push(x);
            }
        }
        items.sort_unstable();
        NaiveSet { items }
    }

    pub fn difference(&self, other: &NaiveSet) -> NaiveSet {
        NaiveSet {
            items: self
                .items
                .iter()
                .copied()
                .filter(|&x| !other.contains(x))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &NaiveSet) -> bool {
        self.items.iter().all(|&x| other.contains(x))
    }

    pub fn insert(&self, d: u32) -> NaiveSet {
        self.union(&NaiveSet { items: vec![d] })
    }

    pub fn remove(&self, d: u32) -> NaiveSet {
        self.difference(&NaiveSet { items: vec![d] })
    }
}

/// Flat row-major cells of an `m × m` grid with `m = order²`.
fn placeable(cells: &[u8], order: usize, at: usize, v: u8) -> bool {
    let m = order * order;
    let (r, c) = (at / m, at % m);
    for x in 0..m {
        if cells[r * m + x] == v || cells[x * m + c] == v {
            return false;
        }
    }
    let (br, bc) = (r - r % order, c - c % order);
    for dr in 0..order {
        for dc in 0..order {
            if cells[(br + dr) * m + bc + dc] == v {
                return false;
            }
        }
    }
    true
}

/// Counts completions by filling the first blank with every legal value, no
/// propagation. Stops at `limit`.
pub fn brute_force_count(order: usize, cells: &[u8], limit: u64) -> u64 {
    let mut work = cells.to_vec();
    let mut count = 0;
    fill(order, &mut work, 0, &mut count, limit);
    count
}

fn fill(order: usize, cells: &mut [u8], from: usize, count: &mut u64, limit: u64) {
    if *count >= limit {
        return;
    }
    let Some(at) = (from..cells.len()).find(|&i| cells[i] == 0) else {
        *count += 1;
        return;
    };
    let m = (order * order) as u8;
    for v in 1..=m {
        if placeable(cells, order, at, v) {
            cells[at] = v;
            fill(order, cells, at + 1, count, limit);
            cells[at] = 0;
            if *count >= limit {
                return;
            }
        }
    }
}

/// A uniformly shuffled-order backtracking fill of the empty grid.
pub fn random_complete_grid<R: Rng>(order: usize, rng: &mut R) -> Vec<u8> {
    let m = order * order;
    let mut cells = vec![0u8; m * m];
    assert!(random_fill(order, &mut cells, 0, rng));
    cells
}

fn random_fill<R: Rng>(order: usize, cells: &mut [u8], at: usize, rng: &mut R) -> bool {
    if at == cells.len() {
        return true;
    }
    let m = (order * order) as u8;
    let mut values: Vec<u8> = (1..=m).collect();
    values.shuffle(rng);
    for v in values {
        if placeable(cells, order, at, v) {
            cells[at] = v;
            if random_fill(order, cells, at + 1, rng) {
                return true;
            }
            cells[at] = 0;
        }
    }
    false
}

/// Direct definition check: every row, column and block holds `1..=m`.
pub fn is_valid_complete(order: usize, cells: &[u8]) -> bool {
    let m = order * order;
    let expect: Vec<u8> = (1..=m as u8).collect();
    let sorted = |mut v: Vec<u8>| {
        v.sort_unstable();
        v
    };
    for x in 0..m {
        let row: Vec<u8> = (0..m).map(|c| cells[x * m + c]).collect();
        let col: Vec<u8> = (0..m).map(|r| cells[r * m + x]).collect();
        let (br, bc) = ((x / order) * order, (x % order) * order);
        let block: Vec<u8> = (0..m)
            .map(|t| cells[(br + t / order) * m + bc + t % order])
            .collect();
        if sorted(row) != expect || sorted(col) != expect || sorted(block) != expect {
            return false;
        }
    }
    true
}

/// Blanks `count` distinct random cells.
pub fn delete_cells<R: Rng>(cells: &[u8], count: usize, rng: &mut R) -> Vec<u8> {
    let mut out = cells.to_vec();
    let mut idx: Vec<usize> = (0..cells.len()).collect();
    idx.shuffle(rng);
    for &i in idx.iter().take(count) {
        out[i] = 0;
    }
    out
}

pub fn is_prime_by_trial_division(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A well-known published puzzle and its solution.
pub const CLASSIC_PUZZLE: &str =
    "530070000600195000098000060800060003400803001700020006060000280000419005000080079";
pub const CLASSIC_SOLUTION: &str =
    "534678912672195348198342567859761423426853791713924856961537284287419635345286179";

pub fn digits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}
