use thiserror::Error;

use crate::board::Topology;

/// Failure to build a conformation from text or cells.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("empty board")]
    Empty,
    #[error("illegal character {ch:?} at index {index}")]
    IllegalChar { index: usize, ch: char },
    #[error("a cycle needs at least 3 cells, got {len}")]
    CycleTooShort { len: usize },
}

/// Why a move cannot be played.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("origin {from} is outside a board of {len} cells")]
    OriginOutOfRange { from: usize, len: usize },
    #[error("origin cell is empty")]
    EmptyOrigin,
    #[error("target is off the board")]
    OffBoard,
    #[error("target cell is empty")]
    EmptyTarget,
    #[error("target holds a pawn of the same color")]
    SameColor,
}

impl MoveError {
    /// Stable machine-readable code, used on the wire.
    pub fn reason(&self) -> &'static str {
        match self {
            MoveError::OriginOutOfRange { .. } => "origin_out_of_range",
            MoveError::EmptyOrigin => "empty_origin",
            MoveError::OffBoard => "off_board",
            MoveError::EmptyTarget => "empty_target",
            MoveError::SameColor => "same_color",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("move {index} is illegal: {source}")]
pub struct ReplayError {
    pub index: usize,
    pub source: MoveError,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cell {index} is empty; split the board at holes before encoding")]
    Hole { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("cell {index} is empty; use `solve` for boards with holes")]
    Hole { index: usize },
    #[error("expected a {expected} board, got a {found} board")]
    WrongTopology { expected: Topology, found: Topology },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("board of {len} cells exceeds the search limit of {limit}")]
    SizeLimit { len: usize, limit: usize },
    #[error("no {topology} boards of size {n}")]
    TooSmall { n: usize, topology: Topology },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("no family member of size {n}; sizes must be {residue} mod {modulus} and at least {min}")]
    Inadmissible {
        n: usize,
        modulus: usize,
        residue: usize,
        min: usize,
    },
}
