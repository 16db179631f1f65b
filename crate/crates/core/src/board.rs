//! Game mechanics for solitaire Clobber on a line or a cycle.
//!
//! A pawn moves onto an adjacent pawn of the opposite color and removes it;
//! the cell it leaves stays empty for the rest of the game. Either color may
//! move at every turn. Everything else in the crate is checked against the
//! rules implemented here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BoardError, MoveError, ReplayError};

/// State of a single cell. The ordering (`Black < White < Empty`) is the one
/// used for canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Black,
    White,
    Empty,
}

impl Cell {
    pub fn from_char(ch: char) -> Option<Cell> {
        match ch {
            'x' => Some(Cell::Black),
            'o' => Some(Cell::White),
            '-' => Some(Cell::Empty),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Cell::Black => 'x',
            Cell::White => 'o',
            Cell::Empty => '-',
        }
    }

    #[inline]
    pub fn is_pawn(self) -> bool {
        self != Cell::Empty
    }

    /// Black and White exchanged; Empty is fixed.
    #[inline]
    pub fn swapped(self) -> Cell {
        match self {
            Cell::Black => Cell::White,
            Cell::White => Cell::Black,
            Cell::Empty => Cell::Empty,
        }
    }

    /// True when both cells hold pawns of different colors.
    #[inline]
    pub fn opposes(self, other: Cell) -> bool {
        matches!(
            (self, other),
            (Cell::Black, Cell::White) | (Cell::White, Cell::Black)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Line,
    Cycle,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Line => "line",
            Topology::Cycle => "cycle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Direction {
    pub fn letter(self) -> char {
        match self {
            Direction::Left => 'L',
            Direction::Right => 'R',
        }
    }

    pub fn from_letter(s: &str) -> Option<Direction> {
        match s {
            "L" | "l" => Some(Direction::Left),
            "R" | "r" => Some(Direction::Right),
            _ => None,
        }
    }

    pub fn reversed(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

/// One clobber: the pawn on `from` steps in `dir` and removes the pawn there.
///
/// Serializes as the pair `[from, "L" | "R"]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, Direction)", into = "(usize, Direction)")]
pub struct Move {
    pub from: usize,
    pub dir: Direction,
}

impl Move {
    pub const fn new(from: usize, dir: Direction) -> Move {
        Move { from, dir }
    }

    pub const fn left(from: usize) -> Move {
        Move::new(from, Direction::Left)
    }

    pub const fn right(from: usize) -> Move {
        Move::new(from, Direction::Right)
    }
}

impl From<(usize, Direction)> for Move {
    fn from((from, dir): (usize, Direction)) -> Move {
        Move { from, dir }
    }
}

impl From<Move> for (usize, Direction) {
    fn from(m: Move) -> (usize, Direction) {
        (m.from, m.dir)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.from, self.dir.letter())
    }
}

/// An ordered sequence of moves.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Strategy(pub Vec<Move>);

impl Strategy {
    pub fn new() -> Strategy {
        Strategy(Vec::new())
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<Move>> for Strategy {
    fn from(moves: Vec<Move>) -> Strategy {
        Strategy(moves)
    }
}

impl FromIterator<Move> for Strategy {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Strategy {
        Strategy(iter.into_iter().collect())
    }
}

/// A board: cells in order plus the way the ends connect.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conformation {
    cells: Vec<Cell>,
    topology: Topology,
}

impl Conformation {
    pub fn new(cells: Vec<Cell>, topology: Topology) -> Result<Conformation, BoardError> {
        if cells.is_empty() {
            return Err(BoardError::Empty);
        }
        if topology == Topology::Cycle && cells.len() < 3 {
            return Err(BoardError::CycleTooShort { len: cells.len() });
        }
        Ok(Conformation { cells, topology })
    }

    pub fn line(cells: Vec<Cell>) -> Result<Conformation, BoardError> {
        Conformation::new(cells, Topology::Line)
    }

    pub fn cycle(cells: Vec<Cell>) -> Result<Conformation, BoardError> {
        Conformation::new(cells, Topology::Cycle)
    }

    /// Parses `[xo-]+`: `x` black, `o` white, `-` empty.
    pub fn parse(text: &str, topology: Topology) -> Result<Conformation, BoardError> {
        let cells = text
            .chars()
            .enumerate()
            .map(|(index, ch)| Cell::from_char(ch).ok_or(BoardError::IllegalChar { index, ch }))
            .collect::<Result<Vec<_>, _>>()?;
        Conformation::new(cells, topology)
    }

    pub fn render(&self) -> String {
        self.cells.iter().map(|c| c.to_char()).collect()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn pawn_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_pawn()).count()
    }

    pub fn has_holes(&self) -> bool {
        self.cells.contains(&Cell::Empty)
    }

    /// True when every pawn has the same color (vacuously for no pawns).
    pub fn is_monochromatic(&self) -> bool {
        let mut pawns = self.cells.iter().filter(|c| c.is_pawn());
        match pawns.next() {
            Some(first) => pawns.all(|c| c == first),
            None => true,
        }
    }

    /// Index reached by stepping from `from` in `dir`, if it exists.
    #[inline]
    pub fn neighbor(&self, from: usize, dir: Direction) -> Option<usize> {
        let n = self.cells.len();
        match (self.topology, dir) {
            (Topology::Line, Direction::Left) => from.checked_sub(1),
            (Topology::Line, Direction::Right) => (from + 1 < n).then_some(from + 1),
            (Topology::Cycle, Direction::Left) => Some((from + n - 1) % n),
            (Topology::Cycle, Direction::Right) => Some((from + 1) % n),
        }
    }

    /// Target index of a legal move, or the reason it is illegal.
    pub fn check(&self, m: Move) -> Result<usize, MoveError> {
        let len = self.cells.len();
        if m.from >= len {
            return Err(MoveError::OriginOutOfRange { from: m.from, len });
        }
        let origin = self.cells[m.from];
        if !origin.is_pawn() {
            return Err(MoveError::EmptyOrigin);
        }
        let target = self.neighbor(m.from, m.dir).ok_or(MoveError::OffBoard)?;
        match self.cells[target] {
            Cell::Empty => Err(MoveError::EmptyTarget),
            t if t == origin => Err(MoveError::SameColor),
            _ => Ok(target),
        }
    }

    pub fn is_legal(&self, m: Move) -> bool {
        self.check(m).is_ok()
    }

    /// All legal moves, ordered by origin and then Left before Right.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for from in 0..self.cells.len() {
            for dir in [Direction::Left, Direction::Right] {
                let m = Move::new(from, dir);
                if self.is_legal(m) {
                    moves.push(m);
                }
            }
        }
        moves
    }

    pub fn has_legal_move(&self) -> bool {
        (0..self.cells.len()).any(|from| {
            self.is_legal(Move::left(from)) || self.is_legal(Move::right(from))
        })
    }

    pub fn apply(&self, m: Move) -> Result<Conformation, MoveError> {
        let mut next = self.clone();
        next.play(m)?;
        Ok(next)
    }

    /// Applies `m` in place.
    pub fn play(&mut self, m: Move) -> Result<(), MoveError> {
        let target = self.check(m)?;
        self.cells[target] = self.cells[m.from];
        self.cells[m.from] = Cell::Empty;
        Ok(())
    }

    pub fn replay(&self, strategy: &Strategy) -> Result<Conformation, ReplayError> {
        let mut board = self.clone();
        for (index, &m) in strategy.moves().iter().enumerate() {
            board
                .play(m)
                .map_err(|source| ReplayError { index, source })?;
        }
        Ok(board)
    }

    pub fn color_swapped(&self) -> Conformation {
        Conformation {
            cells: self.cells.iter().map(|c| c.swapped()).collect(),
            topology: self.topology,
        }
    }

    pub fn reversed(&self) -> Conformation {
        Conformation {
            cells: self.cells.iter().rev().copied().collect(),
            topology: self.topology,
        }
    }

    /// Cell `i` of the result is cell `(i + k) mod n` of `self`.
    pub fn rotated(&self, k: usize) -> Conformation {
        let mut cells = self.cells.clone();
        let n = cells.len();
        cells.rotate_left(k % n);
        Conformation {
            cells,
            topology: self.topology,
        }
    }

    pub fn with_topology(&self, topology: Topology) -> Result<Conformation, BoardError> {
        Conformation::new(self.cells.clone(), topology)
    }
}

impl fmt::Display for Conformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            write!(f, "{}", c.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Conformation {
    type Err = BoardError;

    /// Parses a line board.
    fn from_str(s: &str) -> Result<Conformation, BoardError> {
        Conformation::parse(s, Topology::Line)
    }
}
