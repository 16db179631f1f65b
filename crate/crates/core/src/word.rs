//! Solitaire Clobber on a line or cycle as an optimization over words.
//!
//! A board is encoded by its *edge word*: one [`EdgeSymbol`] per pair of
//! adjacent cells, telling whether the two pawns have the same color or not.
//! Colors themselves never matter, only this word.
//!
//! A game is described by a *plan word* over the same edges. Every edge is
//! crossed by at most one move during a game (the cell a pawn leaves stays
//! empty), so a game assigns each edge one [`PlanSymbol`]: crossed
//! rightwards, crossed leftwards, or never crossed (a cut). The number of
//! pawns left is the number of cells minus the number of crossed edges, and
//! the reducibility value is reached by the feasible plan with the fewest
//! cuts. Feasibility is local: a plan is playable exactly when its combined
//! plan/edge word avoids every factor of a finite [`ForbiddenPatternSet`]
//! (plus, on a cycle, the plan has at least one cut).
//!
//! [`evaluate`] minimizes the number of cuts in one left-to-right pass with a
//! five-state automaton equivalent to the pattern set, and returns an
//! optimal plan. On a cycle the automaton state at the seam is guessed (five
//! choices), which keeps the whole evaluation linear.

use std::collections::HashSet;
use std::fmt;

use crate::board::{Cell, Conformation, Topology};
use crate::error::WordError;

/// Relation between the pawns on either side of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeSymbol {
    /// Same color, written `s`.
    Same,
    /// Opposite colors, written `d`.
    Differ,
}

impl EdgeSymbol {
    pub const ALL: [EdgeSymbol; 2] = [EdgeSymbol::Same, EdgeSymbol::Differ];

    #[inline]
    pub fn between(a: Cell, b: Cell) -> EdgeSymbol {
        if a == b {
            EdgeSymbol::Same
        } else {
            EdgeSymbol::Differ
        }
    }

    pub fn to_char(self) -> char {
        match self {
            EdgeSymbol::Same => 's',
            EdgeSymbol::Differ => 'd',
        }
    }

    pub fn from_char(ch: char) -> Option<EdgeSymbol> {
        match ch {
            's' => Some(EdgeSymbol::Same),
            'd' => Some(EdgeSymbol::Differ),
            _ => None,
        }
    }
}

/// Edge word of a hole-free board. A line of `n` cells has `n - 1`
/// symbols; a cycle has `n`, the last one for the wrap edge `(n - 1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeWord {
    symbols: Vec<EdgeSymbol>,
    topology: Topology,
}

impl EdgeWord {
    pub fn new(symbols: Vec<EdgeSymbol>, topology: Topology) -> EdgeWord {
        EdgeWord { symbols, topology }
    }

    pub fn symbols(&self) -> &[EdgeSymbol] {
        &self.symbols
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of cells of the board the word came from.
    pub fn cell_count(&self) -> usize {
        match self.topology {
            Topology::Line => self.symbols.len() + 1,
            Topology::Cycle => self.symbols.len(),
        }
    }

    pub fn render(&self) -> String {
        self.symbols.iter().map(|s| s.to_char()).collect()
    }
}

impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Edge symbols of consecutive cells; the caller guarantees no holes.
pub(crate) fn line_symbols(cells: &[Cell]) -> Vec<EdgeSymbol> {
    cells
        .windows(2)
        .map(|w| EdgeSymbol::between(w[0], w[1]))
        .collect()
}

pub fn encode(c: &Conformation) -> Result<EdgeWord, WordError> {
    let cells = c.cells();
    if let Some(index) = cells.iter().position(|&x| x == Cell::Empty) {
        return Err(WordError::Hole { index });
    }
    let mut symbols = line_symbols(cells);
    if c.topology() == Topology::Cycle {
        symbols.push(EdgeSymbol::between(cells[cells.len() - 1], cells[0]));
    }
    Ok(EdgeWord::new(symbols, c.topology()))
}

/// What happens to an edge during a game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanSymbol {
    /// Never crossed, written `|`.
    Cut,
    /// Crossed once by a pawn moving right, written `R`.
    Right,
    /// Crossed once by a pawn moving left, written `L`.
    Left,
}

impl PlanSymbol {
    pub const ALL: [PlanSymbol; 3] = [PlanSymbol::Cut, PlanSymbol::Right, PlanSymbol::Left];

    pub fn to_char(self) -> char {
        match self {
            PlanSymbol::Cut => '|',
            PlanSymbol::Right => 'R',
            PlanSymbol::Left => 'L',
        }
    }
}

pub fn render_plan(plan: &[PlanSymbol]) -> String {
    plan.iter().map(|p| p.to_char()).collect()
}

/// One position of a combined word; `None` is the virtual cut past either
/// end of a line.
pub type Slot = Option<(PlanSymbol, EdgeSymbol)>;

/// Window of four consecutive slots, anchored at its second entry.
pub type Window = [Slot; 4];

/// The finite set of forbidden factors of length four.
///
/// A window `[a, b, c, d]` is forbidden when the move across `b` cannot be
/// played given its neighbors. The local rules, for a pawn travelling right
/// (mirror everything for left):
///
/// * no cell sends pawns both ways (`L` followed by `R`);
/// * a run `R…R` is one pawn sweeping right: the first edge it crosses
///   separates different colors and every later edge, except the one into
///   the meeting cell, separates equal colors;
/// * a run that ends at a cut stops on a pawn of the other color;
/// * where a right run meets a left run (`R` then `L`), the two travellers
///   have different colors, which fixes the parity of `d` on the two edges
///   around the meeting cell.
#[derive(Debug, Clone)]
pub struct ForbiddenPatternSet {
    patterns: HashSet<Window>,
}

fn plan_of(slot: Slot) -> PlanSymbol {
    slot.map_or(PlanSymbol::Cut, |(p, _)| p)
}

fn differs(slot: Slot) -> bool {
    matches!(slot, Some((_, EdgeSymbol::Differ)))
}

/// True when the move planned on `w[1]` is unplayable in this context.
fn violates(w: &Window) -> bool {
    use PlanSymbol::*;
    let Some((p1, _)) = w[1] else {
        return false;
    };
    let (p0, p2, p3) = (plan_of(w[0]), plan_of(w[2]), plan_of(w[3]));
    let d1 = differs(w[1]);
    match (p1, p2) {
        (Left, Right) => return true,
        // Sweep continues: differ on its first edge, same afterwards.
        (Right, Right) => return d1 == (p0 == Right),
        // Sweep stops at a cut.
        (Right, Cut) => return d1 == (p0 == Right),
        // Meeting cell between the two runs.
        (Right, Left) => {
            let want = !((p0 == Right) ^ (p3 == Left));
            return (d1 ^ differs(w[2])) != want;
        }
        _ => {}
    }
    match (p0, p1) {
        (Left, Left) => d1 == (p2 == Left),
        (Cut, Left) => d1 == (p2 == Left),
        _ => false,
    }
}

impl ForbiddenPatternSet {
    /// Enumerates every forbidden window.
    pub fn standard() -> ForbiddenPatternSet {
        let mut slots: Vec<Slot> = vec![None];
        for p in PlanSymbol::ALL {
            for e in EdgeSymbol::ALL {
                slots.push(Some((p, e)));
            }
        }
        let mut patterns = HashSet::new();
        for &a in &slots {
            for &b in slots.iter().skip(1) {
                for &c in &slots {
                    for &d in &slots {
                        if c.is_none() && d.is_some() {
                            continue;
                        }
                        let w = [a, b, c, d];
                        if violates(&w) {
                            patterns.insert(w);
                        }
                    }
                }
            }
        }
        ForbiddenPatternSet { patterns }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn contains(&self, w: &Window) -> bool {
        self.patterns.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Window> {
        self.patterns.iter()
    }

    /// Every window of the combined word, circular on a cycle.
    pub fn windows(plan: &[PlanSymbol], word: &EdgeWord) -> Vec<Window> {
        let m = word.len();
        assert_eq!(plan.len(), m, "plan and edge word differ in length");
        let sym = word.symbols();
        let slot = |i: isize| -> Slot {
            match word.topology() {
                Topology::Line => {
                    (0..m as isize).contains(&i).then(|| (plan[i as usize], sym[i as usize]))
                }
                Topology::Cycle => {
                    let j = i.rem_euclid(m as isize) as usize;
                    Some((plan[j], sym[j]))
                }
            }
        };
        (0..m as isize)
            .map(|i| [slot(i - 1), slot(i), slot(i + 1), slot(i + 2)])
            .collect()
    }

    /// Whether the plan can be played on the board encoded by `word`.
    pub fn is_feasible(&self, plan: &[PlanSymbol], word: &EdgeWord) -> bool {
        if plan.len() != word.len() {
            return false;
        }
        if word.topology() == Topology::Cycle && !plan.contains(&PlanSymbol::Cut) {
            return false;
        }
        Self::windows(plan, word).iter().all(|w| !self.contains(w))
    }
}

/// Pawns left after playing `plan` on a board with `cells` cells.
pub fn plan_value(plan: &[PlanSymbol], cells: usize) -> usize {
    cells - plan.iter().filter(|&&p| p != PlanSymbol::Cut).count()
}

/// Automaton states while scanning edges left to right.
///
/// A piece (maximal run of crossed edges) is feasible exactly when its edge
/// word is one of `s*d`, `ds*` or `ds*ds*d`; the states track progress
/// through those shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
enum State {
    /// Between pieces.
    Boundary = 0,
    /// Inside `s*` of `s*d`; the rightmost pawn sweeps left.
    LeftSweep = 1,
    /// Piece finished, a cut must follow.
    Finished = 2,
    /// Inside `ds*`; the leftmost pawn sweeps right.
    RightSweep = 3,
    /// Inside `ds*ds*`; the right traveller is coming back to meet it.
    Returning = 4,
}

const STATES: [State; 5] = [
    State::Boundary,
    State::LeftSweep,
    State::Finished,
    State::RightSweep,
    State::Returning,
];

impl State {
    /// Plan symbol of the edge whose transition ends in this state.
    fn label(self) -> PlanSymbol {
        match self {
            State::Boundary => PlanSymbol::Cut,
            State::RightSweep => PlanSymbol::Right,
            State::LeftSweep | State::Finished | State::Returning => PlanSymbol::Left,
        }
    }

    fn accepting(self) -> bool {
        matches!(self, State::Boundary | State::Finished | State::RightSweep)
    }
}

const INF: u32 = u32::MAX / 4;

type Costs = [u32; 5];

#[inline]
fn pick(options: &[(u32, State)]) -> (u32, State) {
    let mut best = options[0];
    for &o in &options[1..] {
        if o.0 < best.0 {
            best = o;
        }
    }
    best
}

/// One automaton step. Returns new costs and, per target state, the source
/// state of the cheapest transition.
#[inline]
fn step(cost: &Costs, sym: EdgeSymbol) -> (Costs, [State; 5]) {
    use State::*;
    let c = |s: State| cost[s as usize];
    let mut next = [INF; 5];
    let mut from = [Boundary; 5];

    let (v, f) = pick(&[(c(Boundary), Boundary), (c(RightSweep), RightSweep), (c(Finished), Finished)]);
    next[Boundary as usize] = (v + 1).min(INF);
    from[Boundary as usize] = f;

    match sym {
        EdgeSymbol::Same => {
            let (v, f) = pick(&[(c(Boundary), Boundary), (c(LeftSweep), LeftSweep)]);
            next[LeftSweep as usize] = v;
            from[LeftSweep as usize] = f;
            next[RightSweep as usize] = c(RightSweep);
            from[RightSweep as usize] = RightSweep;
            next[Returning as usize] = c(Returning);
            from[Returning as usize] = Returning;
        }
        EdgeSymbol::Differ => {
            let (v, f) = pick(&[
                (c(Boundary), Boundary),
                (c(LeftSweep), LeftSweep),
                (c(Returning), Returning),
            ]);
            next[Finished as usize] = v;
            from[Finished as usize] = f;
            next[RightSweep as usize] = c(Boundary);
            from[RightSweep as usize] = Boundary;
            next[Returning as usize] = c(RightSweep);
            from[Returning as usize] = RightSweep;
        }
    }
    (next, from)
}

#[inline]
fn pack(from: &[State; 5]) -> u16 {
    from.iter()
        .enumerate()
        .fold(0u16, |acc, (i, &s)| acc | ((s as u16) << (3 * i)))
}

#[inline]
fn unpack(packed: u16, to: State) -> State {
    STATES[((packed >> (3 * to as u16)) & 7) as usize]
}

/// Optimal plan for an edge word, with the number of elementary steps spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: usize,
    pub plan: Vec<PlanSymbol>,
    pub work: u64,
}

/// Runs the automaton from `start`; returns final costs only.
fn scan_costs(symbols: &[EdgeSymbol], start: Costs) -> Costs {
    symbols.iter().fold(start, |cost, &s| step(&cost, s).0)
}

/// Runs the automaton from `start`, ending in `end`, and recovers the plan.
fn scan_plan(symbols: &[EdgeSymbol], start: Costs, end: State) -> Vec<PlanSymbol> {
    let mut back = Vec::with_capacity(symbols.len());
    let mut cost = start;
    for &s in symbols {
        let (next, from) = step(&cost, s);
        back.push(pack(&from));
        cost = next;
    }
    let mut plan = vec![PlanSymbol::Cut; symbols.len()];
    let mut state = end;
    for (i, &packed) in back.iter().enumerate().rev() {
        plan[i] = state.label();
        state = unpack(packed, state);
    }
    plan
}

fn start_in(state: State) -> Costs {
    let mut c = [INF; 5];
    c[state as usize] = 0;
    c
}

pub(crate) fn evaluate_line(symbols: &[EdgeSymbol]) -> Evaluation {
    let m = symbols.len() as u64;
    let last = scan_costs(symbols, start_in(State::Boundary));
    let (cuts, end) = STATES
        .iter()
        .filter(|s| s.accepting())
        .map(|&s| (last[s as usize], s))
        .fold((INF, State::Boundary), |best, o| if o.0 < best.0 { o } else { best });
    debug_assert!(cuts < INF);
    let plan = scan_plan(symbols, start_in(State::Boundary), end);
    Evaluation {
        value: cuts as usize + 1,
        plan,
        work: 3 * m + 1,
    }
}

pub(crate) fn evaluate_cycle(symbols: &[EdgeSymbol]) -> Evaluation {
    let m = symbols.len();
    if !symbols.contains(&EdgeSymbol::Differ) {
        return Evaluation {
            value: m,
            plan: vec![PlanSymbol::Cut; m],
            work: m as u64,
        };
    }
    // Guess the automaton state at the seam before edge 0; the scan must
    // come back to it after the last edge.
    let mut best: Option<(u32, State)> = None;
    for &seam in &STATES {
        let cuts = scan_costs(symbols, start_in(seam))[seam as usize];
        if cuts < INF && best.is_none_or(|(b, _)| cuts < b) {
            best = Some((cuts, seam));
        }
    }
    let (cuts, seam) = best.expect("a two-colored cycle always has a feasible plan");
    let plan = scan_plan(symbols, start_in(seam), seam);
    Evaluation {
        value: cuts as usize,
        plan,
        work: (STATES.len() as u64 + 2) * m as u64 + 1,
    }
}

/// Optimal plan and value for the board encoded by `word`.
pub fn evaluate(word: &EdgeWord) -> Evaluation {
    match word.topology() {
        Topology::Line => evaluate_line(word.symbols()),
        Topology::Cycle => evaluate_cycle(word.symbols()),
    }
}

/// Reducibility value of the board encoded by `word`.
pub fn value_from_word(word: &EdgeWord) -> usize {
    match word.topology() {
        Topology::Line => {
            let last = scan_costs(word.symbols(), start_in(State::Boundary));
            let cuts = STATES
                .iter()
                .filter(|s| s.accepting())
                .map(|&s| last[s as usize])
                .min()
                .unwrap_or(INF);
            cuts as usize + 1
        }
        Topology::Cycle => evaluate_cycle(word.symbols()).value,
    }
}
