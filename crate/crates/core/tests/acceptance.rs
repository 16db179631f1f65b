//! Acceptance criteria. Runs every criterion in sequence, prints one
//! PASS/FAIL line for each, and exits non-zero if any fails.
//!
//! Run with `cargo test -p clobber-core --test acceptance -- --nocapture`
//! (output is printed either way).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clobber_core::extremal::{self, crossover, exceeds_quarter, generate_family, is_admissible};
use clobber_core::oracle::Oracle;
use clobber_core::{encode, solve, solve_counted, value_from_word, Cell, Conformation, Topology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn board_from_mask(mask: u64, n: usize, topology: Topology) -> Conformation {
    let cells = (0..n)
        .map(|i| if mask >> i & 1 == 0 { Cell::Black } else { Cell::White })
        .collect();
    Conformation::new(cells, topology).expect("valid size")
}

fn random_board(rng: &mut impl Rng, n: usize, topology: Topology, hole_rate: f64) -> Conformation {
    let cells = (0..n)
        .map(|_| {
            if rng.gen_bool(hole_rate) {
                Cell::Empty
            } else if rng.gen_bool(0.5) {
                Cell::Black
            } else {
                Cell::White
            }
        })
        .collect();
    Conformation::new(cells, topology).expect("valid size")
}

fn min_n(topology: Topology) -> usize {
    match topology {
        Topology::Line => 1,
        Topology::Cycle => 3,
    }
}

/// Exact equality with the oracle on every two-colored board n <= 10 and
/// 10^4 random boards for each of n = 11, 12, both topologies.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0usize;
    for topology in [Topology::Line, Topology::Cycle] {
        let mut oracle = Oracle::new();
        for n in min_n(topology)..=10 {
            for mask in 0..1u64 << n {
                let c = board_from_mask(mask, n, topology);
                let (fast, exact) = (solve(&c).value, oracle.value(&c).unwrap());
                if fast != exact {
                    return Err(format!("{topology} {c}: solver {fast}, oracle {exact}"));
                }
                checked += 1;
            }
        }
        for n in [11, 12] {
            for _ in 0..10_000 {
                let c = board_from_mask(rng.gen_range(0..1u64 << n), n, topology);
                let (fast, exact) = (solve(&c).value, oracle.value(&c).unwrap());
                if fast != exact {
                    return Err(format!("{topology} {c}: solver {fast}, oracle {exact}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} boards agree"))
}

/// 10^4 random boards up to 10^3 cells, both topologies, with and without
/// holes: the strategy replays legally and leaves exactly `value` pawns.
fn strategy_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..10_000 {
        let topology = if i % 2 == 0 { Topology::Line } else { Topology::Cycle };
        let hole_rate = if i % 4 < 2 { 0.0 } else { 0.1 };
        let n = rng.gen_range(min_n(topology)..=1000);
        let c = random_board(&mut rng, n, topology, hole_rate);
        let r = solve(&c);
        let end = c
            .replay(&r.strategy)
            .map_err(|e| format!("{topology} board of {n}: {e}"))?;
        if end.pawn_count() != r.value {
            return Err(format!(
                "{topology} board of {n}: {} pawns left, value {}",
                end.pawn_count(),
                r.value
            ));
        }
    }
    Ok("10000 strategies replay to their value".into())
}

fn timed_solve(c: &Conformation) -> Duration {
    (0..3)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(solve(c));
            t.elapsed()
        })
        .min()
        .unwrap()
}

/// Work counter per cell bounded by one constant for n = 10^3..10^6, and
/// wall-clock: 10^6 under 1 s, 10^7 under 15 s, ratio within [5, 20].
fn linear_time() -> Outcome {
    const WORK_PER_CELL: f64 = 16.0;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ratios = Vec::new();
    for topology in [Topology::Line, Topology::Cycle] {
        for n in [1_000, 10_000, 100_000, 1_000_000] {
            let c = random_board(&mut rng, n, topology, 0.0);
            let (_, work) = solve_counted(&c);
            let ratio = work as f64 / n as f64;
            if ratio > WORK_PER_CELL {
                return Err(format!("{topology} n={n}: {ratio:.2} steps per cell"));
            }
            ratios.push(ratio);
        }
    }
    let mut report = format!(
        "steps/cell in [{:.2}, {:.2}] <= {WORK_PER_CELL}",
        ratios.iter().cloned().fold(f64::INFINITY, f64::min),
        ratios.iter().cloned().fold(0.0, f64::max)
    );
    for topology in [Topology::Line, Topology::Cycle] {
        let small = random_board(&mut rng, 1_000_000, topology, 0.0);
        let large = random_board(&mut rng, 10_000_000, topology, 0.0);
        let (t6, t7) = (timed_solve(&small), timed_solve(&large));
        let ratio = t7.as_secs_f64() / t6.as_secs_f64();
        report += &format!("; {topology} 1e6 {t6:.2?}, 1e7 {t7:.2?}, ratio {ratio:.1}");
        if t6 >= Duration::from_secs(1) || t7 >= Duration::from_secs(15) || !(5.0..=20.0).contains(&ratio) {
            return Err(report);
        }
    }
    Ok(report)
}

/// Family values, from the solver, beat n/4 + c beyond the crossover.
fn conjecture_refutation() -> Outcome {
    let mut checked = 0;
    for offset in [0, 1, 2, 3, 5, 10] {
        let start = crossover(offset);
        for n in (start..=200).filter(|&n| is_admissible(n)) {
            let m = generate_family(n).map_err(|e| e.to_string())?;
            let v = solve(&m.conformation).value;
            if v != m.claimed_value {
                return Err(format!("n={n}: solver {v}, claimed {}", m.claimed_value));
            }
            if !exceeds_quarter(v, n, offset) {
                return Err(format!("n={n}: value {v} does not exceed n/4 + {offset}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (size, offset) pairs, crossover(10) = {}", crossover(10)))
}

fn upper_bound() -> Outcome {
    let rows = extremal::check_upper_bound(12).map_err(|e| e.to_string())?;
    let base: Vec<(usize, usize)> = rows.iter().take(2).map(|r| (r.n, r.max_value)).collect();
    if base != [(3, 1), (4, 2)] {
        return Err(format!("baseline rows {base:?}"));
    }
    if let Some(r) = rows.iter().find(|r| r.flagged) {
        return Err(format!("n={} max {} residual {}", r.n, r.max_value, r.residual));
    }
    let worst = rows.iter().map(|r| r.residual).max().unwrap();
    Ok(format!(
        "n=3..12 unflagged, max residual {worst} <= {}",
        extremal::CONSTANTS.upper_slack
    ))
}

fn word_model() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 1..=64 {
        for topology in [Topology::Line, Topology::Cycle] {
            if n < min_n(topology) {
                continue;
            }
            let c = random_board(&mut rng, n, topology, 0.0);
            let len = encode(&c).map_err(|e| e.to_string())?.len();
            let want = if topology == Topology::Line { n - 1 } else { n };
            if len != want {
                return Err(format!("{topology} n={n}: word length {len}"));
            }
        }
    }
    let mut checked = 0;
    for topology in [Topology::Line, Topology::Cycle] {
        let mut oracle = Oracle::new();
        for n in min_n(topology)..=10 {
            for mask in 0..1u64 << n {
                let c = board_from_mask(mask, n, topology);
                let v = value_from_word(&encode(&c).unwrap());
                let exact = oracle.value(&c).unwrap();
                if v != exact {
                    return Err(format!("{topology} {c}: word {v}, oracle {exact}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("lengths hold for n <= 64; {checked} words match the oracle"))
}

fn symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..10_000 {
        let topology = if i % 2 == 0 { Topology::Line } else { Topology::Cycle };
        let n = rng.gen_range(min_n(topology)..=200);
        let c = random_board(&mut rng, n, topology, if i % 3 == 0 { 0.1 } else { 0.0 });
        let v = solve(&c).value;
        let mut images = vec![c.color_swapped(), c.reversed()];
        if topology == Topology::Cycle {
            let k = rng.gen_range(0..n);
            images.push(c.rotated(k));
            images.push(c.rotated(k).reversed().color_swapped());
        }
        for image in images {
            let w = solve(&image).value;
            if w != v {
                return Err(format!("{topology} {c} has value {v} but its image {image} has {w}"));
            }
        }
    }
    Ok("10000 boards invariant".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("strategy soundness", strategy_soundness),
        ("linear time", linear_time),
        ("conjecture refutation", conjecture_refutation),
        ("upper bound", upper_bound),
        ("word model", word_model),
        ("symmetry", symmetry),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name:<22} {elapsed:>9.2?}  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name:<22} {elapsed:>9.2?}  {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
