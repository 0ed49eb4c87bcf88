//! Text formats for puzzles.
//!
//! Generic format: the first non-comment line holds the order `n`, followed
//! by `m = n²` lines of `m` whitespace-separated integers in `0..=m`. Lines
//! whose first non-blank character is `#` are comments; blank lines are
//! skipped.
//!
//! Classic format (order 3 only): 81 characters, `1`–`9` for clues and `0` or
//! `.` for blanks, with any whitespace or line breaks between them.
//!
//! A document is read as classic when its first content line is anything but
//! a lone integer of at most two digits, or when its non-whitespace content is
//! exactly 81 characters of `0`–`9` and `.` (a generic document can never be
//! that size).

use std::fmt;

use thiserror::Error;

use super::{Grid, GridError, MAX_ORDER, MIN_ORDER};

const CLASSIC_ORDER: usize = 3;
const CLASSIC_CELLS: usize = 81;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Generic,
    Classic,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Generic => f.write_str("generic"),
            Format::Classic => f.write_str("classic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    MalformedToken(String),
    OrderOutOfRange(u64),
    ValueOutOfRange { value: u64, max: usize },
    RowLength { expected: usize, found: usize },
    MissingRows { expected: usize, found: usize },
    CellCount { expected: usize, found: usize },
    TrailingContent,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => f.write_str("no puzzle content"),
            ParseErrorKind::MalformedToken(t) => write!(f, "malformed token {t:?}"),
            ParseErrorKind::OrderOutOfRange(n) => {
                write!(f, "order {n} is outside {MIN_ORDER}..={MAX_ORDER}")
            }
            ParseErrorKind::ValueOutOfRange { value, max } => {
                write!(f, "value {value} is outside 0..={max}")
            }
            ParseErrorKind::RowLength { expected, found } => {
                write!(f, "expected {expected} values in row, found {found}")
            }
            ParseErrorKind::MissingRows { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            ParseErrorKind::CellCount { expected, found } => {
                write!(f, "expected {expected} cells, found {found}")
            }
            ParseErrorKind::TrailingContent => f.write_str("unexpected content after last row"),
        }
    }
}

/// A parse failure at a 1-based line and character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// A given value at a 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clue {
    pub row: usize,
    pub col: usize,
    pub value: u8,
}

/// The external form of a puzzle: its order, its clues and its blanks, both
/// in row-major order. Every one of the `m²` cells is exactly one of the two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleDocument {
    order: usize,
    clues: Vec<Clue>,
    blanks: Vec<(usize, usize)>,
}

impl PuzzleDocument {
    pub fn from_grid(grid: &Grid) -> Self {
        let m = grid.side();
        let mut clues = Vec::new();
        let mut blanks = Vec::new();
        for (at, &value) in grid.cells().iter().enumerate() {
            let (row, col) = (at / m + 1, at % m + 1);
            if value == 0 {
                blanks.push((row, col));
            } else {
                clues.push(Clue { row, col, value });
            }
        }
        PuzzleDocument {
            order: grid.order(),
            clues,
            blanks,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn clues(&self) -> &[Clue] {
        &self.clues
    }

    pub fn blanks(&self) -> &[(usize, usize)] {
        &self.blanks
    }

    pub fn to_grid(&self) -> Grid {
        let mut grid = Grid::new(self.order).expect("document order validated on construction");
        for c in &self.clues {
            grid.set(c.row, c.col, c.value)
                .expect("document clues validated on construction");
        }
        grid
    }

    pub fn render(&self, format: Format) -> Result<String, GridError> {
        render_grid(&self.to_grid(), format)
    }
}

/// Renders a grid in the requested format, newline-terminated.
pub fn render_grid(grid: &Grid, format: Format) -> Result<String, GridError> {
    match format {
        Format::Generic => Ok(format!("{}\n{}", grid.order(), grid)),
        Format::Classic => {
            if grid.order() != CLASSIC_ORDER {
                return Err(GridError::UnsupportedFormat {
                    format,
                    order: grid.order(),
                });
            }
            let mut out: String = grid
                .cells()
                .iter()
                .map(|&v| if v == 0 { '.' } else { char::from(b'0' + v) })
                .collect();
            out.push('\n');
            Ok(out)
        }
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(idx, text)| {
        let trimmed = text.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some(Line {
                number: idx + 1,
                text,
            })
        }
    })
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((c, b)) = start.take() {
                out.push((c + 1, &text[b..byte]));
            }
        } else if start.is_none() {
            start = Some((col, byte));
        }
    }
    if let Some((c, b)) = start {
        out.push((c + 1, &text[b..]));
    }
    out
}

fn is_classic_char(ch: char) -> bool {
    ch.is_ascii_digit() || ch == '.'
}

fn looks_classic(text: &str, first: &Line<'_>) -> bool {
    let toks = tokens(first.text);
    let lone_order =
        toks.len() == 1 && toks[0].1.len() <= 2 && toks[0].1.bytes().all(|b| b.is_ascii_digit());
    if !lone_order {
        return true;
    }
    let mut count = 0usize;
    for line in content_lines(text) {
        for ch in line.text.chars().filter(|c| !c.is_whitespace()) {
            if !is_classic_char(ch) {
                return false;
            }
            count += 1;
        }
    }
    count == CLASSIC_CELLS
}

/// Saturating decimal parse; `None` if the token is not all ASCII digits.
fn parse_number(token: &str) -> Option<u64> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(token.bytes().fold(0u64, |acc, b| {
        acc.saturating_mul(10).saturating_add(u64::from(b - b'0'))
    }))
}

/// Parses a puzzle in either accepted format. Only structure is checked;
/// duplicate clues are left for [`Grid::is_consistent_partial`].
pub fn parse(text: &str) -> Result<PuzzleDocument, ParseError> {
    let first = content_lines(text)
        .next()
        .ok_or_else(|| ParseError::at(text.lines().count().max(1), 1, ParseErrorKind::Empty))?;
    let grid = if looks_classic(text, &first) {
        parse_classic(text)?
    } else {
        parse_generic(text)?
    };
    Ok(PuzzleDocument::from_grid(&grid))
}

fn end_position(text: &str) -> (usize, usize) {
    let line = text.lines().count().max(1);
    let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_classic(text: &str) -> Result<Grid, ParseError> {
    let mut cells = Vec::with_capacity(CLASSIC_CELLS);
    for line in content_lines(text) {
        for (col, ch) in line.text.chars().enumerate() {
            if ch.is_whitespace() {
                continue;
            }
            let value = match ch {
                '.' | '0' => 0,
                '1'..='9' => ch as u8 - b'0',
                _ => {
                    return Err(ParseError::at(
                        line.number,
                        col + 1,
                        ParseErrorKind::MalformedToken(ch.to_string()),
                    ))
                }
            };
            if cells.len() == CLASSIC_CELLS {
                return Err(ParseError::at(
                    line.number,
                    col + 1,
                    ParseErrorKind::CellCount {
                        expected: CLASSIC_CELLS,
                        found: cells.len() + 1,
                    },
                ));
            }
            cells.push(value);
        }
    }
    if cells.len() != CLASSIC_CELLS {
        let (line, column) = end_position(text);
        return Err(ParseError::at(
            line,
            column,
            ParseErrorKind::CellCount {
                expected: CLASSIC_CELLS,
                found: cells.len(),
            },
        ));
    }
    Ok(Grid::from_cells(CLASSIC_ORDER, &cells).expect("classic cells are in range"))
}

fn parse_generic(text: &str) -> Result<Grid, ParseError> {
    let mut lines = content_lines(text);
    let header = lines.next().expect("caller checked for content");
    let (col, token) = tokens(header.text)[0];
    let order = parse_number(token).ok_or_else(|| {
        ParseError::at(
            header.number,
            col,
            ParseErrorKind::MalformedToken(token.into()),
        )
    })?;
    if !(MIN_ORDER as u64..=MAX_ORDER as u64).contains(&order) {
        return Err(ParseError::at(
            header.number,
            col,
            ParseErrorKind::OrderOutOfRange(order),
        ));
    }
    let order = order as usize;
    let side = order * order;

    let mut cells = Vec::with_capacity(side * side);
    let mut rows = 0usize;
    while rows < side {
        let Some(line) = lines.next() else {
            let (line, column) = end_position(text);
            return Err(ParseError::at(
                line,
                column,
                ParseErrorKind::MissingRows {
                    expected: side,
                    found: rows,
                },
            ));
        };
        let toks = tokens(line.text);
        for (idx, &(col, token)) in toks.iter().enumerate() {
            if idx == side {
                return Err(ParseError::at(
                    line.number,
                    col,
                    ParseErrorKind::RowLength {
                        expected: side,
                        found: toks.len(),
                    },
                ));
            }
            let value = parse_number(token).ok_or_else(|| {
                ParseError::at(
                    line.number,
                    col,
                    ParseErrorKind::MalformedToken(token.into()),
                )
            })?;
            if value > side as u64 {
                return Err(ParseError::at(
                    line.number,
                    col,
                    ParseErrorKind::ValueOutOfRange { value, max: side },
                ));
            }
            cells.push(value as u8);
        }
        if toks.len() < side {
            return Err(ParseError::at(
                line.number,
                line.text.trim_end().chars().count() + 1,
                ParseErrorKind::RowLength {
                    expected: side,
                    found: toks.len(),
                },
            ));
        }
        rows += 1;
    }
    if let Some(extra) = lines.next() {
        let col = tokens(extra.text)[0].0;
        return Err(ParseError::at(
            extra.number,
            col,
            ParseErrorKind::TrailingContent,
        ));
    }
    Ok(Grid::from_cells(order, &cells).expect("generic cells are in range"))
}
