//! Linear-time reducibility values and optimal strategies.
//!
//! The board's edge word is evaluated by [`crate::word::evaluate`], which
//! returns an optimal plan (one symbol per edge). The plan splits the board
//! into pieces; each piece is a run of `R` edges followed by a run of `L`
//! edges, played as one pawn sweeping right and one sweeping left until they
//! meet. Boards with holes are solved one occupied segment at a time.

use crate::board::{Cell, Conformation, Direction, Move, Strategy, Topology};
use crate::error::SolveError;
use crate::word::{self, EdgeSymbol, EdgeWord, PlanSymbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Fewest pawns that can remain.
    pub value: usize,
    pub strategy: Strategy,
    /// Edge word of the board; `None` when the board has holes.
    pub trace: Option<EdgeWord>,
}

/// A board unrolled into a line: local position `i` is global cell
/// `(offset + i) % n`.
struct Unrolled<'a> {
    cells: &'a [Cell],
    offset: usize,
    len: usize,
}

impl Unrolled<'_> {
    #[inline]
    fn global(&self, i: usize) -> usize {
        let j = self.offset + i;
        if j >= self.cells.len() {
            j - self.cells.len()
        } else {
            j
        }
    }

    #[inline]
    fn cell(&self, i: usize) -> Cell {
        self.cells[self.global(i)]
    }
}

/// Appends the moves realizing `plan` (one symbol per edge between
/// consecutive local positions) and returns how many were emitted.
fn emit_plan(board: &Unrolled<'_>, plan: impl Fn(usize) -> PlanSymbol, out: &mut Vec<Move>) -> usize {
    let before = out.len();
    let mut start = 0;
    for i in 0..board.len.saturating_sub(1) {
        if plan(i) == PlanSymbol::Cut {
            emit_piece(board, start, i, &plan, out);
            start = i + 1;
        }
    }
    if board.len > 0 {
        emit_piece(board, start, board.len - 1, &plan, out);
    }
    out.len() - before
}

/// Moves for the piece spanning local positions `first..=last`.
fn emit_piece(
    board: &Unrolled<'_>,
    first: usize,
    last: usize,
    plan: &impl Fn(usize) -> PlanSymbol,
    out: &mut Vec<Move>,
) {
    let rights = (first..last).take_while(|&i| plan(i) == PlanSymbol::Right).count();
    debug_assert!((first + rights..last).all(|i| plan(i) == PlanSymbol::Left));
    let meet = first + rights;
    let sweep_right = |out: &mut Vec<Move>| {
        out.extend((first..meet).map(|i| Move::new(board.global(i), Direction::Right)));
    };
    let sweep_left = |out: &mut Vec<Move>| {
        out.extend(
            (meet + 1..=last)
                .rev()
                .map(|i| Move::new(board.global(i), Direction::Left)),
        );
    };
    // The first traveller to arrive must find a pawn of the other color.
    if meet > first && board.cell(first).opposes(board.cell(meet)) {
        sweep_right(out);
        sweep_left(out);
    } else {
        sweep_left(out);
        sweep_right(out);
    }
}

fn first_hole(c: &Conformation) -> Option<usize> {
    c.cells().iter().position(|&x| x == Cell::Empty)
}

fn require(c: &Conformation, topology: Topology) -> Result<(), SolveError> {
    if c.topology() != topology {
        return Err(SolveError::WrongTopology {
            expected: topology,
            found: c.topology(),
        });
    }
    match first_hole(c) {
        Some(index) => Err(SolveError::Hole { index }),
        None => Ok(()),
    }
}

pub fn solve_line(c: &Conformation) -> Result<SolveResult, SolveError> {
    require(c, Topology::Line)?;
    Ok(solve_full(c).0)
}

pub fn solve_cycle(c: &Conformation) -> Result<SolveResult, SolveError> {
    require(c, Topology::Cycle)?;
    Ok(solve_full(c).0)
}

/// Hole-free board of either topology.
fn solve_full(c: &Conformation) -> (SolveResult, u64) {
    let word = word::encode(c).expect("caller checked for holes");
    let eval = word::evaluate(&word);
    let cells = c.cells();
    let n = cells.len();
    let mut moves = Vec::with_capacity(n - eval.value);
    let plan = &eval.plan;
    let emitted = match c.topology() {
        Topology::Line => emit_plan(
            &Unrolled { cells, offset: 0, len: n },
            |i| plan[i],
            &mut moves,
        ),
        Topology::Cycle => {
            // Unroll just after a cut edge; edge `j` joins cells `j` and `j + 1`.
            let cut = plan
                .iter()
                .position(|&p| p == PlanSymbol::Cut)
                .expect("cycle plans always contain a cut");
            let offset = (cut + 1) % n;
            emit_plan(
                &Unrolled { cells, offset, len: n },
                |i| plan[(offset + i) % n],
                &mut moves,
            )
        }
    };
    debug_assert_eq!(n - emitted, eval.value);
    let work = n as u64 + eval.work + emitted as u64;
    let result = SolveResult {
        value: eval.value,
        strategy: Strategy(moves),
        trace: Some(word),
    };
    (result, work)
}

/// Splits at holes; every maximal occupied segment is solved as a line.
fn solve_segments(c: &Conformation, first_hole: usize) -> (SolveResult, u64) {
    let cells = c.cells();
    let n = cells.len();
    // Lines start at 0; cycles start just after a hole so no segment wraps.
    let offset = match c.topology() {
        Topology::Line => 0,
        Topology::Cycle => (first_hole + 1) % n,
    };
    let board = Unrolled { cells, offset, len: n };
    let mut moves = Vec::new();
    let mut value = 0;
    let mut work = n as u64;
    let mut i = 0;
    while i < n {
        if board.cell(i) == Cell::Empty {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && board.cell(i) != Cell::Empty {
            i += 1;
        }
        let symbols: Vec<EdgeSymbol> = (start..i - 1)
            .map(|k| EdgeSymbol::between(board.cell(k), board.cell(k + 1)))
            .collect();
        let eval = word::evaluate_line(&symbols);
        let segment = Unrolled {
            cells,
            offset: board.global(start),
            len: i - start,
        };
        let emitted = emit_plan(&segment, |k| eval.plan[k], &mut moves);
        value += eval.value;
        work += eval.work + emitted as u64;
    }
    let result = SolveResult {
        value,
        strategy: Strategy(moves),
        trace: None,
    };
    (result, work)
}

/// Solves any board, returning the result and the number of elementary
/// steps spent (linear in the board size).
pub fn solve_counted(c: &Conformation) -> (SolveResult, u64) {
    match first_hole(c) {
        None => solve_full(c),
        Some(hole) => solve_segments(c, hole),
    }
}

/// Reducibility value and an optimal strategy for any board. A board with
/// no pawns has value 0.
pub fn solve(c: &Conformation) -> SolveResult {
    solve_counted(c).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(s: &str) -> Conformation {
        Conformation::parse(s, Topology::Line).unwrap()
    }

    fn cycle(s: &str) -> Conformation {
        Conformation::parse(s, Topology::Cycle).unwrap()
    }

    fn check(c: &Conformation, value: usize) -> SolveResult {
        let r = solve(c);
        assert_eq!(r.value, value, "{c}");
        let end = c.replay(&r.strategy).unwrap_or_else(|e| panic!("{c}: {e}"));
        assert_eq!(end.pawn_count(), value, "{c}");
        r
    }

    #[test]
    fn line_examples() {
        check(&line("xo"), 1);
        check(&line("xox"), 2);
        check(&line("xoxo"), 1);
        assert!(check(&line("oooo"), 4).strategy.is_empty());
        assert_eq!(solve_line(&line("xoxo")).unwrap().value, 1);
    }

    #[test]
    fn cycle_examples() {
        check(&cycle("xox"), 1);
        check(&cycle("xxoo"), 2);
        check(&cycle("xoxo"), 1);
        check(&cycle("xxx"), 3);
        check(&cycle("xxxo"), 1);
        assert_eq!(solve_cycle(&cycle("xox")).unwrap().value, 1);
    }

    #[test]
    fn holes_decompose() {
        check(&line("xo-xo"), 2);
        assert!(check(&line("---"), 0).strategy.is_empty());
        check(&cycle("xo-o"), 2);
        // The wrap edge joins cells 3 and 0: one segment "xoo".
        check(&cycle("o-xo"), 1);
        check(&cycle("-ox"), 1);
        assert!(solve(&line("xo-xo")).trace.is_none());
    }

    #[test]
    fn wrong_input_errors() {
        assert_eq!(solve_line(&line("x-o")), Err(SolveError::Hole { index: 1 }));
        assert_eq!(
            solve_line(&cycle("xox")),
            Err(SolveError::WrongTopology {
                expected: Topology::Line,
                found: Topology::Cycle
            })
        );
        assert_eq!(solve_cycle(&cycle("x-ox")), Err(SolveError::Hole { index: 1 }));
    }

    #[test]
    fn trace_is_the_edge_word() {
        let r = solve(&cycle("xxoo"));
        assert_eq!(r.trace.unwrap().render(), "sdsd");
    }

    #[test]
    fn deterministic() {
        let c = cycle("xxoxooxoxxxoxoxoo");
        assert_eq!(solve(&c), solve(&c));
    }
}
