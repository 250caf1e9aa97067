//! Exhaustive classification of every ordered pair drawn from a grid of small
//! rationals, with each verdict cross-checked by the level-set criteria, the
//! brute-force oracle, and witness construction.

use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::arith::Rat;
use crate::commute::{
    brute_force_commute, classify, criterion_negative, criterion_positive, find_witness,
    sweep_oracle_denominator, OracleOutcome, RatRange, Verdict, Witness,
};

/// Default half-width of the oracle's sampling range.
pub const ORACLE_HALF_WIDTH: i64 = 10;

/// All reduced `p/q` with `|p| <= max_num` and `1 <= q <= max_den`, zero
/// included, ordered by numerator and then denominator.
pub fn grid_values(max_num: u32, max_den: u32) -> Vec<Rat> {
    let max_num = i64::from(max_num);
    let mut out = Vec::new();
    for p in -max_num..=max_num {
        for q in 1..=i64::from(max_den) {
            if p.gcd(&q) == 1 || (p == 0 && q == 1) {
                out.push(Rat::new(p, q).expect("q >= 1"));
            }
        }
    }
    out
}

/// Membership in the known commuting families, stated directly.
pub fn in_commuting_family(s: &Rat, t: &Rat) -> bool {
    let unit = |r: &Rat| r.numer().is_one();
    s == t || s.is_zero() || t.is_zero() || (unit(s) && unit(t))
}

/// Everything learned about one ordered pair.
#[derive(Clone, Debug)]
pub struct PairCheck {
    pub s: Rat,
    pub t: Rat,
    pub verdict: Verdict,
    /// Period-check verdict, when both signs agree and neither is zero.
    pub criterion: Option<bool>,
    pub oracle: OracleOutcome,
    pub witness: Option<Witness>,
    pub problems: Vec<String>,
}

impl PairCheck {
    pub fn is_consistent(&self) -> bool {
        self.problems.is_empty()
    }
}

/// `[-half_width, half_width]`.
pub fn oracle_range(half_width: u32) -> RatRange {
    let w = i64::from(half_width);
    RatRange::new(Rat::from_int(-w), Rat::from_int(w)).expect("non-empty range")
}

/// Cross-checks one pair with the default oracle range.
pub fn check_pair(s: &Rat, t: &Rat) -> PairCheck {
    check_pair_in(s, t, &oracle_range(ORACLE_HALF_WIDTH as u32))
}

pub fn check_pair_in(s: &Rat, t: &Rat, range: &RatRange) -> PairCheck {
    let mut problems = Vec::new();
    let verdict = classify(s, t);

    let criterion = if s.is_positive() && t.is_positive() {
        Some(criterion_positive(s, t))
    } else if s.is_negative() && t.is_negative() {
        Some(criterion_negative(s, t))
    } else {
        None
    }
    .map(|r| match r {
        Ok(outcome) => outcome.holds,
        Err(e) => {
            problems.push(format!("criterion failed: {e}"));
            !verdict.commutes
        }
    });
    if let Some(c) = criterion {
        if c != verdict.commutes {
            problems.push(format!("criterion says {c}, classify says {}", verdict.commutes));
        }
    }

    let den = sweep_oracle_denominator(s, t);
    let oracle = match brute_force_commute(s, t, range, &den) {
        Ok(o) => o,
        Err(e) => {
            problems.push(format!("oracle failed: {e}"));
            OracleOutcome::NoCounterexample
        }
    };
    if oracle.commutes() != verdict.commutes {
        problems.push(format!("oracle says {}, classify says {}", oracle.commutes(), verdict.commutes));
    }
    let family = in_commuting_family(s, t);
    if oracle.commutes() != family {
        problems.push(format!("oracle says {}, families say {family}", oracle.commutes()));
    }
    if let Some(w) = oracle.witness() {
        if !w.verifies(s, t) {
            problems.push(format!("oracle witness {w} does not verify"));
        }
    }

    let witness = if verdict.commutes {
        None
    } else {
        if verdict.first_failing_level.is_none() {
            problems.push("no failing level".into());
        }
        match find_witness(s, t) {
            Ok(w) if w.verifies(s, t) => Some(w),
            Ok(w) => {
                problems.push(format!("witness {w} does not verify"));
                None
            }
            Err(e) => {
                problems.push(format!("witness search failed: {e}"));
                None
            }
        }
    };

    PairCheck { s: s.clone(), t: t.clone(), verdict, criterion, oracle, witness, problems }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub max_num: u32,
    pub max_den: u32,
    pub oracle_half_width: u32,
    pub values: Vec<Rat>,
    /// Row-major over `values x values`.
    pub pairs: Vec<PairCheck>,
}

impl SweepReport {
    pub fn commuting(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| p.verdict.commutes)
    }

    pub fn inconsistent(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| !p.is_consistent())
    }

    /// Whether classification is symmetric under swapping the pair.
    pub fn exchange_symmetric(&self) -> bool {
        let k = self.values.len();
        (0..k).all(|i| {
            (0..k).all(|j| self.pairs[i * k + j].verdict.commutes == self.pairs[j * k + i].verdict.commutes)
        })
    }

    /// Whether the commuting set equals the union of the known families.
    pub fn matches_families(&self) -> bool {
        self.pairs.iter().all(|p| {
            let family = in_commuting_family(&p.s, &p.t);
            p.verdict.commutes == family && p.oracle.commutes() == family
        })
    }

    pub fn passed(&self) -> bool {
        self.inconsistent().next().is_none() && self.matches_families() && self.exchange_symmetric()
    }
}

/// Checks every ordered pair of the grid with the default oracle range.
pub fn run_sweep(max_num: u32, max_den: u32) -> SweepReport {
    run_sweep_with(max_num, max_den, ORACLE_HALF_WIDTH as u32)
}

/// Checks every ordered pair of the grid. Work is spread across threads;
/// results come back in row-major grid order.
pub fn run_sweep_with(max_num: u32, max_den: u32, oracle_half_width: u32) -> SweepReport {
    let values = grid_values(max_num, max_den);
    let range = oracle_range(oracle_half_width);
    let pairs: Vec<(usize, usize)> =
        (0..values.len()).flat_map(|i| (0..values.len()).map(move |j| (i, j))).collect();
    let pairs = pairs.par_iter().map(|&(i, j)| check_pair_in(&values[i], &values[j], &range)).collect();
    SweepReport { max_num, max_den, oracle_half_width, values, pairs }
}

/// Count of grid values, handy for sanity checks: `1 + 2 * sum_{q} #{p <= N : gcd(p, q) = 1}`.
pub fn grid_size(max_num: u32, max_den: u32) -> usize {
    let nonzero: usize = (1..=i64::from(max_den))
        .map(|q| (1..=i64::from(max_num)).filter(|p| p.gcd(&q) == 1).count())
        .sum();
    1 + 2 * nonzero
}
