use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use clobber_core::extremal::{self, generate_family, BoundRow};
use clobber_core::oracle::{sweep_max_with_limit, Oracle, DEFAULT_LIMIT, DEFAULT_SWEEP_LIMIT};
use clobber_core::word::render_plan;
use clobber_core::{evaluate, solve, Cell, Conformation, Move, Topology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

mod strategy_file;

/// Solitaire Clobber on lines and cycles.
#[derive(Debug, Parser)]
#[command(name = "clobber", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BoardArgs {
    /// Board over `x` (black), `o` (white) and `-` (empty).
    #[arg(allow_hyphen_values = true)]
    board: String,
    /// Treat the board as a cycle.
    #[arg(long)]
    cycle: bool,
}

impl BoardArgs {
    fn topology(&self) -> Topology {
        if self.cycle {
            Topology::Cycle
        } else {
            Topology::Line
        }
    }

    fn parse(&self) -> Result<Conformation> {
        Conformation::parse(&self.board, self.topology())
            .with_context(|| format!("invalid board {:?}", self.board))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reducibility value with the linear-time solver.
    Solve {
        #[command(flatten)]
        board: BoardArgs,
        /// Print an optimal strategy.
        #[arg(long)]
        strategy: bool,
        /// Print the edge word and the chosen plan.
        #[arg(long)]
        trace: bool,
        /// Emit a single JSON document.
        #[arg(long)]
        json: bool,
    },
    /// Reducibility value by exhaustive search.
    Oracle {
        #[command(flatten)]
        board: BoardArgs,
        /// Largest board searched.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Worst value over every two-color board of size N.
    Sweep {
        n: usize,
        #[arg(long)]
        cycle: bool,
        /// Skip monochromatic boards.
        #[arg(long)]
        both_colors: bool,
        /// Append the result to a CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SWEEP_LIMIT)]
        limit: usize,
    },
    /// Member of the (xxo)^k cycle family on N cells.
    Family { n: usize },
    /// Exhaustive check of the n/3 upper bound on cycles up to NMAX cells.
    Bound {
        nmax: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SWEEP_LIMIT)]
        limit: usize,
    },
    /// Time the solver on random boards from NMIN to NMAX cells.
    Bench {
        nmin: usize,
        nmax: usize,
        /// Number of sizes, spaced geometrically.
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        cycle: bool,
    },
    /// Replay a strategy file and report the pawns left.
    Verify {
        #[command(flatten)]
        board: BoardArgs,
        strategy_file: PathBuf,
    },
}

/// JSON document printed by `solve --json`.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct SolveReport {
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    strategy: Option<Vec<Move>>,
    n: usize,
    topology: Topology,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    match run(cli.command, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Solve {
            board,
            strategy,
            trace,
            json,
        } => cmd_solve(&board.parse()?, strategy, trace, json, out),
        Command::Oracle { board, limit } => {
            let c = board.parse()?;
            let mut oracle = Oracle::with_limit(limit);
            let value = oracle.value(&c)?;
            let s = oracle.stats();
            writeln!(out, "value: {value}")?;
            writeln!(
                out,
                "states: {}, memo hits: {}, max depth: {}",
                s.states_visited, s.memo_hits, s.max_depth
            )?;
            Ok(())
        }
        Command::Sweep {
            n,
            cycle,
            both_colors,
            csv,
            limit,
        } => {
            let topology = if cycle { Topology::Cycle } else { Topology::Line };
            let result = sweep_max_with_limit(n, topology, both_colors, limit)?;
            writeln!(out, "n: {n}, topology: {topology}")?;
            writeln!(out, "max value: {}", result.max_value)?;
            writeln!(out, "classes: {}, argmax classes: {}", result.classes, result.argmax.len())?;
            for board in &result.argmax {
                writeln!(out, "  {board}")?;
            }
            if let Some(path) = csv {
                write_csv(&path, [result.row()])?;
            }
            Ok(())
        }
        Command::Family { n } => {
            let member = generate_family(n)?;
            let solved = solve(&member.conformation).value;
            writeln!(out, "board: {} (cycle)", member.conformation)?;
            writeln!(out, "claimed value: {}", member.claimed_value)?;
            writeln!(out, "solver value: {solved}")?;
            writeln!(out, "n/4: {:.2}", n as f64 / 4.0)?;
            Ok(())
        }
        Command::Bound { nmax, csv, limit } => {
            let rows = extremal::check_upper_bound_with_limit(nmax, limit)?;
            print_bound_table(&rows, out)?;
            if let Some(path) = csv {
                write_csv(&path, rows.iter())?;
            }
            Ok(())
        }
        Command::Bench {
            nmin,
            nmax,
            steps,
            seed,
            cycle,
        } => cmd_bench(nmin, nmax, steps, seed, cycle, out),
        Command::Verify {
            board,
            strategy_file,
        } => {
            let c = board.parse()?;
            let text = fs::read_to_string(&strategy_file)
                .with_context(|| format!("reading {}", strategy_file.display()))?;
            let strategy = strategy_file::parse(&text)?;
            let end = c.replay(&strategy)?;
            writeln!(out, "legal: {} moves", strategy.len())?;
            writeln!(out, "final: {end}")?;
            writeln!(out, "pawns: {}", end.pawn_count())?;
            Ok(())
        }
    }
}

fn cmd_solve(c: &Conformation, strategy: bool, trace: bool, json: bool, out: &mut impl Write) -> Result<()> {
    let result = solve(c);
    let word = result.trace.as_ref().filter(|_| trace);
    if json {
        let report = SolveReport {
            value: result.value,
            strategy: strategy.then(|| result.strategy.0.clone()),
            n: c.len(),
            topology: c.topology(),
            trace: word.map(|w| w.render()),
        };
        serde_json::to_writer(&mut *out, &report)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "value: {}", result.value)?;
    if trace {
        match word {
            Some(w) => {
                writeln!(out, "edge word: {w}")?;
                writeln!(out, "plan: {}", render_plan(&evaluate(w).plan))?;
            }
            None => writeln!(out, "edge word: none (board has holes)")?,
        }
    }
    if strategy {
        writeln!(out, "strategy: {} moves", result.strategy.len())?;
        write!(out, "{}", strategy_file::render(&result.strategy))?;
    }
    Ok(())
}

fn print_bound_table(rows: &[BoundRow], out: &mut impl Write) -> Result<()> {
    writeln!(out, "{:>4} {:>9} {:>8} {:>8}  witness", "n", "max", "n/3", "residual")?;
    for r in rows {
        writeln!(
            out,
            "{:>4} {:>9} {:>8} {:>8}  {}{}",
            r.n,
            r.max_value,
            r.n / 3,
            r.residual,
            r.witness,
            if r.flagged { "  FLAGGED" } else { "" }
        )?;
    }
    let flagged = rows.iter().filter(|r| r.flagged).count();
    writeln!(
        out,
        "slack {}: {} flagged",
        extremal::CONSTANTS.upper_slack,
        flagged
    )?;
    Ok(())
}

fn write_csv<T: Serialize>(path: &PathBuf, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut writer = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

fn bench_sizes(nmin: usize, nmax: usize, steps: usize) -> Vec<usize> {
    if steps <= 1 || nmin >= nmax {
        return vec![nmin.max(1)];
    }
    let (lo, hi) = ((nmin.max(1) as f64).ln(), (nmax as f64).ln());
    let mut sizes: Vec<usize> = (0..steps)
        .map(|i| (lo + (hi - lo) * i as f64 / (steps - 1) as f64).exp().round() as usize)
        .collect();
    sizes.dedup();
    sizes
}

fn cmd_bench(nmin: usize, nmax: usize, steps: usize, seed: u64, cycle: bool, out: &mut impl Write) -> Result<()> {
    let topology = if cycle { Topology::Cycle } else { Topology::Line };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    writeln!(out, "{:>12} {:>12} {:>10} {:>12}", "n", "elapsed_ms", "ns/cell", "value")?;
    for n in bench_sizes(nmin, nmax, steps) {
        let n = if cycle { n.max(3) } else { n };
        let cells: Vec<Cell> = (0..n)
            .map(|_| if rng.gen_bool(0.5) { Cell::Black } else { Cell::White })
            .collect();
        let c = Conformation::new(cells, topology)?;
        let start = Instant::now();
        let result = solve(&c);
        let elapsed = start.elapsed();
        writeln!(
            out,
            "{:>12} {:>12.3} {:>10.2} {:>12}",
            n,
            elapsed.as_secs_f64() * 1e3,
            elapsed.as_nanos() as f64 / n as f64,
            result.value
        )?;
    }
    Ok(())
}
