//! Solitaire Clobber on lines and cycles.
//!
//! * [`board`]: rules, parsing, move legality and replay.
//! * [`word`]: edge-word encoding and the forbidden-pattern optimization.
//! * [`solver`]: linear-time value and optimal strategy.
//! * [`oracle`]: exhaustive memoized search and sweeps over all colorings.
//! * [`extremal`]: cycles whose value grows like `n / 3`, and the matching
//!   upper-bound check.

pub mod board;
pub mod error;
pub mod extremal;
pub mod oracle;
pub mod solver;
pub mod word;

pub use board::{Cell, Conformation, Direction, Move, Strategy, Topology};
pub use error::{BoardError, FamilyError, MoveError, OracleError, ReplayError, SolveError, WordError};
pub use oracle::{oracle_strategy, oracle_value, sweep_max, Oracle, SearchStats, SweepResult};
pub use solver::{solve, solve_counted, solve_cycle, solve_line, SolveResult};
pub use word::{encode, evaluate, value_from_word, EdgeSymbol, EdgeWord, ForbiddenPatternSet, PlanSymbol};
