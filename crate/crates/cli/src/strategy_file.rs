//! Strategy files: one move per line as `FROM DIR` (`0 R`), `#` starts a
//! comment, blank lines are ignored.

use anyhow::{anyhow, bail, Result};
use clobber_core::{Direction, Move, Strategy};

pub fn parse(text: &str) -> Result<Strategy> {
    let mut moves = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(from), Some(dir), None) = (fields.next(), fields.next(), fields.next()) else {
            bail!("line {}: expected `FROM DIR`, got {raw:?}", lineno + 1);
        };
        let from = from
            .parse::<usize>()
            .map_err(|_| anyhow!("line {}: bad cell index {from:?}", lineno + 1))?;
        let dir = Direction::from_letter(dir)
            .ok_or_else(|| anyhow!("line {}: direction must be L or R, got {dir:?}", lineno + 1))?;
        moves.push(Move::new(from, dir));
    }
    Ok(Strategy(moves))
}

pub fn render(strategy: &Strategy) -> String {
    strategy.moves().iter().map(|m| format!("{m}\n")).collect()
}
