//! Cycles that resist reduction.
//!
//! The family `(xxo)^k` on a cycle of `n = 3k` cells keeps exactly `k = n/3`
//! pawns, so the worst value on a cycle grows like `n/3`, beyond any bound of
//! the form `n/4 + c`. Conversely no two-colored cycle keeps more than
//! `floor(n/3) + 1` pawns; [`check_upper_bound`] verifies this exhaustively
//! for small `n`.

use serde::Serialize;

use crate::board::{Cell, Conformation, Topology};
use crate::error::{FamilyError, OracleError};
use crate::oracle::{sweep_max_with_limit, DEFAULT_SWEEP_LIMIT};

/// The numbers that describe the family and the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyConstants {
    /// Sizes must be `residue` mod `modulus`...
    pub modulus: usize,
    pub residue: usize,
    /// ...and at least `min_n`.
    pub min_n: usize,
    /// `claimed_value >= n/3 - family_offset`.
    pub family_offset: usize,
    /// Largest `max_value - floor(n/3)` over two-colored cycles.
    pub upper_slack: usize,
}

pub const CONSTANTS: FamilyConstants = FamilyConstants {
    modulus: 3,
    residue: 0,
    min_n: 3,
    family_offset: 0,
    upper_slack: 1,
};

/// Repeating block of the family.
pub const BLOCK: [Cell; 3] = [Cell::Black, Cell::Black, Cell::White];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub n: usize,
    pub conformation: Conformation,
    pub claimed_value: usize,
}

pub fn is_admissible(n: usize) -> bool {
    n >= CONSTANTS.min_n && n % CONSTANTS.modulus == CONSTANTS.residue
}

/// The family member on `n` cells: `(xxo)^(n/3)` as a cycle.
pub fn generate_family(n: usize) -> Result<FamilyMember, FamilyError> {
    if !is_admissible(n) {
        return Err(FamilyError::Inadmissible {
            n,
            modulus: CONSTANTS.modulus,
            residue: CONSTANTS.residue,
            min: CONSTANTS.min_n,
        });
    }
    let cells = BLOCK.iter().copied().cycle().take(n).collect();
    Ok(FamilyMember {
        n,
        conformation: Conformation::new(cells, Topology::Cycle).expect("n >= 3"),
        claimed_value: n / 3 - CONSTANTS.family_offset,
    })
}

/// Whether `value > n/4 + offset`, in exact integer arithmetic.
pub fn exceeds_quarter(value: usize, n: usize, offset: usize) -> bool {
    4 * value > n + 4 * offset
}

/// Smallest admissible size from which every family member keeps more
/// than `n/4 + offset` pawns.
pub fn crossover(offset: usize) -> usize {
    // claimed = n/3 - f exceeds n/4 + c  <=>  n > 12 (c + f)
    let mut n = 12 * (offset + CONSTANTS.family_offset) + 1;
    while !is_admissible(n) {
        n += 1;
    }
    n
}

/// One line of the upper-bound report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub max_value: usize,
    pub residual: i64,
    pub flagged: bool,
    pub witness: String,
}

impl BoundRow {
    fn from_sweep(n: usize, max_value: usize, witness: String) -> BoundRow {
        let residual = max_value as i64 - (n / 3) as i64;
        BoundRow {
            n,
            max_value,
            residual,
            flagged: residual > CONSTANTS.upper_slack as i64,
            witness,
        }
    }
}

/// Exhaustive sweep of two-colored cycles for `3 <= n <= n_max`, checking
/// `max_value - floor(n/3) <= upper_slack`.
pub fn check_upper_bound(n_max: usize) -> Result<Vec<BoundRow>, OracleError> {
    check_upper_bound_with_limit(n_max, DEFAULT_SWEEP_LIMIT)
}

/// As [`check_upper_bound`] with an explicit sweep limit.
pub fn check_upper_bound_with_limit(n_max: usize, limit: usize) -> Result<Vec<BoundRow>, OracleError> {
    (3..=n_max)
        .map(|n| {
            let s = sweep_max_with_limit(n, Topology::Cycle, true, limit)?;
            Ok(BoundRow::from_sweep(n, s.max_value, s.argmax[0].clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_value;
    use crate::solver::solve_cycle;

    #[test]
    fn smallest_members_match_the_oracle() {
        for n in [3, 6, 9, 12, 15] {
            let m = generate_family(n).unwrap();
            assert_eq!(oracle_value(&m.conformation).unwrap(), m.claimed_value, "n={n}");
        }
        assert_eq!(generate_family(6).unwrap().conformation.render(), "xxoxxo");
    }

    #[test]
    fn inadmissible_sizes() {
        for n in [0, 1, 2, 4, 5, 7, 200] {
            let err = generate_family(n).unwrap_err();
            assert_eq!(
                err,
                FamilyError::Inadmissible { n, modulus: 3, residue: 0, min: 3 }
            );
            assert!(err.to_string().contains("0 mod 3"));
        }
    }

    #[test]
    fn family_values_track_a_third() {
        for n in (3..=200).filter(|&n| is_admissible(n)) {
            let m = generate_family(n).unwrap();
            let v = solve_cycle(&m.conformation).unwrap().value;
            assert_eq!(v, m.claimed_value);
            assert!(3 * v + 3 * CONSTANTS.family_offset >= n);
        }
    }

    #[test]
    fn crossover_points() {
        assert_eq!(crossover(0), 3);
        assert_eq!(crossover(1), 15);
        assert_eq!(crossover(2), 27);
        assert!(!exceeds_quarter(4, 12, 1));
        assert!(exceeds_quarter(5, 15, 1));
    }

    #[test]
    fn small_bound_rows() {
        let rows = check_upper_bound(6).unwrap();
        let summary: Vec<(usize, usize, i64)> =
            rows.iter().map(|r| (r.n, r.max_value, r.residual)).collect();
        assert_eq!(summary, vec![(3, 1, 0), (4, 2, 1), (5, 2, 1), (6, 2, 0)]);
        assert!(rows.iter().all(|r| !r.flagged));
    }
}
