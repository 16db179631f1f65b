//! Exhaustive search: exact values for small boards, by trying everything.
//!
//! The search is memoized on the complete board state and knows nothing
//! about edge words, so it can serve as ground truth for the linear solver.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::board::{Cell, Conformation, Direction, Strategy, Topology};
use crate::error::OracleError;

/// Largest board `oracle_value` accepts by default.
pub const DEFAULT_LIMIT: usize = 16;
/// Largest size `sweep_max` enumerates by default.
pub const DEFAULT_SWEEP_LIMIT: usize = 14;
/// Hard ceiling imposed by the packed memo key.
pub const MAX_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Distinct states expanded.
    pub states_visited: u64,
    pub memo_hits: u64,
    /// Deepest move sequence explored.
    pub max_depth: usize,
}

/// Memoized exhaustive solver. The memo persists across calls, so reusing
/// one `Oracle` for many boards is much cheaper than starting afresh.
#[derive(Debug, Clone)]
pub struct Oracle {
    limit: usize,
    memo: HashMap<u64, u8>,
    stats: SearchStats,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

fn cell_bits(c: Cell) -> u64 {
    match c {
        Cell::Empty => 0,
        Cell::Black => 1,
        Cell::White => 2,
    }
}

fn memo_key(cells: &[Cell], topology: Topology) -> u64 {
    let packed = cells
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &c)| acc | (cell_bits(c) << (2 * i)));
    let topo = match topology {
        Topology::Line => 0,
        Topology::Cycle => 1,
    };
    packed | ((cells.len() as u64) << 48) | (topo << 56)
}

#[inline]
fn neighbor(n: usize, topology: Topology, from: usize, dir: Direction) -> Option<usize> {
    match (topology, dir) {
        (Topology::Line, Direction::Left) => from.checked_sub(1),
        (Topology::Line, Direction::Right) => (from + 1 < n).then_some(from + 1),
        (Topology::Cycle, Direction::Left) => Some((from + n - 1) % n),
        (Topology::Cycle, Direction::Right) => Some((from + 1) % n),
    }
}

/// Maximal runs of pawns; no pawn can ever leave its run.
fn segment_count(cells: &[Cell], topology: Topology) -> usize {
    let n = cells.len();
    let starts = (0..n)
        .filter(|&i| {
            cells[i].is_pawn()
                && match topology {
                    Topology::Line => i == 0 || !cells[i - 1].is_pawn(),
                    Topology::Cycle => !cells[(i + n - 1) % n].is_pawn(),
                }
        })
        .count();
    if starts == 0 && cells.iter().any(|c| c.is_pawn()) {
        1
    } else {
        starts
    }
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle::with_limit(DEFAULT_LIMIT)
    }

    /// `limit` is clamped to [`MAX_LIMIT`].
    pub fn with_limit(limit: usize) -> Oracle {
        Oracle {
            limit: limit.min(MAX_LIMIT),
            memo: HashMap::new(),
            stats: SearchStats::default(),
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    pub fn reset_stats(&mut self) {
        self.stats = SearchStats::default();
    }

    fn admit(&self, c: &Conformation) -> Result<(), OracleError> {
        if c.len() > self.limit {
            return Err(OracleError::SizeLimit {
                len: c.len(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Exact reducibility value.
    pub fn value(&mut self, c: &Conformation) -> Result<usize, OracleError> {
        self.admit(c)?;
        let mut cells = c.cells().to_vec();
        Ok(self.search(&mut cells, c.topology(), 0) as usize)
    }

    /// Optimal strategy: at each step the first legal move (in
    /// `legal_moves` order) that keeps the optimum reachable.
    pub fn strategy(&mut self, c: &Conformation) -> Result<Strategy, OracleError> {
        self.admit(c)?;
        let topology = c.topology();
        let mut board = c.clone();
        let mut moves = Vec::new();
        loop {
            let mut cells = board.cells().to_vec();
            let target = self.search(&mut cells, topology, 0) as usize;
            if target == board.pawn_count() {
                break;
            }
            let next = board
                .legal_moves()
                .into_iter()
                .find(|&m| {
                    let mut after = board.apply(m).expect("legal move").cells().to_vec();
                    self.search(&mut after, topology, 0) as usize == target
                })
                .expect("some move preserves the optimum");
            board.play(next).expect("legal move");
            moves.push(next);
        }
        Ok(Strategy(moves))
    }

    fn search(&mut self, cells: &mut [Cell], topology: Topology, depth: usize) -> u8 {
        let key = memo_key(cells, topology);
        if let Some(&v) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return v;
        }
        self.stats.states_visited += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let n = cells.len();
        let floor = segment_count(cells, topology) as u8;
        let mut best = cells.iter().filter(|c| c.is_pawn()).count() as u8;
        'outer: for from in 0..n {
            let mover = cells[from];
            if !mover.is_pawn() {
                continue;
            }
            for dir in [Direction::Left, Direction::Right] {
                if best == floor {
                    break 'outer;
                }
                let Some(to) = neighbor(n, topology, from, dir) else {
                    continue;
                };
                let victim = cells[to];
                if !mover.opposes(victim) {
                    continue;
                }
                cells[to] = mover;
                cells[from] = Cell::Empty;
                let v = self.search(cells, topology, depth + 1);
                cells[from] = mover;
                cells[to] = victim;
                best = best.min(v);
            }
        }
        self.memo.insert(key, best);
        best
    }
}

/// Exact value with a fresh oracle and the default size limit.
pub fn oracle_value(c: &Conformation) -> Result<usize, OracleError> {
    Oracle::new().value(c)
}

pub fn oracle_strategy(c: &Conformation) -> Result<Strategy, OracleError> {
    Oracle::new().strategy(c)
}

/// Lexicographically smallest image under the board's symmetries: color
/// swap, reversal, and (on a cycle) rotation. Cell order is `x < o < -`.
pub fn canonical(cells: &[Cell], topology: Topology) -> Vec<Cell> {
    let n = cells.len();
    let rotations = match topology {
        Topology::Line => 1,
        Topology::Cycle => n,
    };
    let mut best: Option<Vec<Cell>> = None;
    let mut candidate = Vec::with_capacity(n);
    for r in 0..rotations {
        for reflect in [false, true] {
            for swap in [false, true] {
                candidate.clear();
                candidate.extend((0..n).map(|i| {
                    let j = match (topology, reflect) {
                        (_, false) => (r + i) % n,
                        (Topology::Line, true) => n - 1 - i,
                        (Topology::Cycle, true) => (r + n - i) % n,
                    };
                    if swap {
                        cells[j].swapped()
                    } else {
                        cells[j]
                    }
                }));
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate.clone());
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Result of scanning every fully occupied board of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub n: usize,
    pub topology: Topology,
    pub max_value: usize,
    /// Canonical representatives reaching `max_value`, sorted.
    pub argmax: Vec<String>,
    /// Symmetry classes examined.
    pub classes: usize,
}

/// One CSV row: `n, topology, max_value, count_of_argmax, one_argmax_rendered`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub topology: Topology,
    pub max_value: usize,
    pub count_of_argmax: usize,
    pub one_argmax_rendered: String,
}

impl SweepResult {
    pub fn row(&self) -> SweepRow {
        SweepRow {
            n: self.n,
            topology: self.topology,
            max_value: self.max_value,
            count_of_argmax: self.argmax.len(),
            one_argmax_rendered: self.argmax.first().cloned().unwrap_or_default(),
        }
    }
}

fn coloring(mask: u32, n: usize) -> Vec<Cell> {
    (0..n)
        .map(|i| if mask >> i & 1 == 0 { Cell::Black } else { Cell::White })
        .collect()
}

/// Maximum oracle value over all `2^n` two-color boards of size `n`,
/// optionally only those with both colors. Classes under symmetry are
/// evaluated once, in parallel; the result does not depend on scheduling.
pub fn sweep_max_with_limit(
    n: usize,
    topology: Topology,
    require_both_colors: bool,
    limit: usize,
) -> Result<SweepResult, OracleError> {
    let limit = limit.min(MAX_LIMIT);
    if n > limit {
        return Err(OracleError::SizeLimit { len: n, limit });
    }
    if n == 0 || (topology == Topology::Cycle && n < 3) {
        return Err(OracleError::TooSmall { n, topology });
    }
    let full = (1u32 << n) - 1;
    let classes: Vec<Vec<Cell>> = (0..=full)
        .filter(|&mask| !require_both_colors || (mask != 0 && mask != full))
        .map(|mask| coloring(mask, n))
        .filter(|cells| canonical(cells, topology) == *cells)
        .collect();
    let mut scored: Vec<(usize, String)> = classes
        .par_iter()
        .map_init(
            || Oracle::with_limit(limit),
            |oracle, cells| {
                let c = Conformation::new(cells.clone(), topology).expect("valid size");
                let v = oracle.value(&c).expect("within limit");
                (v, c.render())
            },
        )
        .collect();
    let max_value = scored.iter().map(|(v, _)| *v).max().unwrap_or(0);
    scored.retain(|(v, _)| *v == max_value);
    let mut argmax: Vec<String> = scored.into_iter().map(|(_, s)| s).collect();
    argmax.sort();
    Ok(SweepResult {
        n,
        topology,
        max_value,
        argmax,
        classes: classes.len(),
    })
}

pub fn sweep_max(
    n: usize,
    topology: Topology,
    require_both_colors: bool,
) -> Result<SweepResult, OracleError> {
    sweep_max_with_limit(n, topology, require_both_colors, DEFAULT_SWEEP_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Move;

    fn line(s: &str) -> Conformation {
        Conformation::parse(s, Topology::Line).unwrap()
    }

    fn cycle(s: &str) -> Conformation {
        Conformation::parse(s, Topology::Cycle).unwrap()
    }

    /// Plain depth-first search over every move sequence, no memo.
    fn naive(c: &Conformation) -> usize {
        c.legal_moves()
            .into_iter()
            .map(|m| naive(&c.apply(m).unwrap()))
            .min()
            .unwrap_or_else(|| c.pawn_count())
    }

    #[test]
    fn values() {
        assert_eq!(oracle_value(&line("xox")).unwrap(), 2);
        assert_eq!(oracle_value(&line("xo")).unwrap(), 1);
        assert_eq!(oracle_value(&line("xoxo")).unwrap(), 1);
        assert_eq!(oracle_value(&cycle("xxxo")).unwrap(), 1);
        assert_eq!(oracle_value(&cycle("xox")).unwrap(), 1);
        assert_eq!(oracle_value(&line("---")).unwrap(), 0);
    }

    #[test]
    fn strategies() {
        assert_eq!(oracle_strategy(&line("xo")).unwrap(), Strategy(vec![Move::right(0)]));
        let s = oracle_strategy(&line("xoxo")).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(line("xoxo").replay(&s).unwrap().pawn_count(), 1);
        assert!(oracle_strategy(&line("xxx")).unwrap().is_empty());
    }

    #[test]
    fn size_limit() {
        let big = line(&"xo".repeat(9));
        assert_eq!(
            oracle_value(&big),
            Err(OracleError::SizeLimit { len: 18, limit: 16 })
        );
        assert!(Oracle::with_limit(4).strategy(&line("xoxox")).is_err());
    }

    #[test]
    fn stats_are_bounded() {
        let mut o = Oracle::new();
        let c = cycle("xoxoxoxo");
        o.value(&c).unwrap();
        let s = o.stats();
        assert!(s.states_visited > 0 && s.states_visited <= 3u64.pow(8));
        assert!(s.max_depth < 8);
        o.value(&c).unwrap();
        assert_eq!(o.stats().memo_hits, s.memo_hits + 1);
    }

    #[test]
    fn memo_agrees_with_naive_search() {
        for topology in [Topology::Line, Topology::Cycle] {
            let mut oracle = Oracle::new();
            for n in 1..=8usize {
                if topology == Topology::Cycle && n < 3 {
                    continue;
                }
                for code in 0..3u32.pow(n as u32) {
                    let cells: Vec<Cell> = (0..n)
                        .map(|i| [Cell::Black, Cell::White, Cell::Empty][(code / 3u32.pow(i as u32) % 3) as usize])
                        .collect();
                    let c = Conformation::new(cells, topology).unwrap();
                    assert_eq!(oracle.value(&c).unwrap(), naive(&c), "{topology} {c}");
                }
            }
        }
    }

    #[test]
    fn canonical_forms() {
        let canon = |s: &str, t| {
            let c = Conformation::parse(s, t).unwrap();
            Conformation::new(canonical(c.cells(), t), t).unwrap().render()
        };
        assert_eq!(canon("ooxx", Topology::Cycle), "xxoo");
        assert_eq!(canon("oxo", Topology::Cycle), "xxo");
        assert_eq!(canon("oxx", Topology::Line), "xxo");
        assert_eq!(canon("xoo", Topology::Line), "xxo");
        assert_eq!(canon("xoxx", Topology::Line), "xxox");
    }

    #[test]
    fn sweep_examples() {
        let s3 = sweep_max(3, Topology::Cycle, true).unwrap();
        assert_eq!((s3.max_value, s3.argmax.clone()), (1, vec!["xxo".to_string()]));
        let s4 = sweep_max(4, Topology::Cycle, true).unwrap();
        assert_eq!(s4.max_value, 2);
        assert!(s4.argmax.contains(&"xxoo".to_string()));
        for n in 1..=6 {
            assert_eq!(sweep_max(n, Topology::Line, false).unwrap().max_value, n);
        }
        assert_eq!(sweep_max(5, Topology::Cycle, false).unwrap().max_value, 5);
        assert!(sweep_max(15, Topology::Cycle, true).is_err());
        assert!(sweep_max(2, Topology::Cycle, true).is_err());
    }
}
