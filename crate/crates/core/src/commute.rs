//! Deciding when `floor(s * floor(t x)) == floor(t * floor(s x))` for every
//! real `x`.
//!
//! The commuting pairs are exactly `(a, a)`, `(a, 0)`, `(0, a)` and the unit
//! fractions `(1/m, 1/n)` with `m, n >= 1`. [`classify`] reports which family
//! a pair belongs to; for every other pair it locates a level `n` whose upper
//! level sets differ, and [`find_witness`] turns that level into a concrete
//! point where the two composition orders disagree.
//!
//! Only rational parameters can be passed in. For an irrational `a` the same
//! classification applies symbolically: `(a, b)` commutes iff `a == b` or one
//! of them is zero, since an irrational is never a unit fraction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::dilated::{eval_affine, eval_pair};
use crate::error::{Error, Result};
use crate::levelset::{halfline_equal, separating_point, upper_level_set};

/// Which commuting family a pair falls into.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Equal,
    ZeroLeft,
    ZeroRight,
    UnitFractions { m: BigInt, n: BigInt },
    NonCommuting,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Equal => "Equal",
            Family::ZeroLeft => "ZeroLeft",
            Family::ZeroRight => "ZeroRight",
            Family::UnitFractions { .. } => "UnitFractions",
            Family::NonCommuting => "NonCommuting",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::UnitFractions { m, n } => write!(f, "UnitFractions(m={m}, n={n})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub commutes: bool,
    pub case: Family,
    /// For non-commuting pairs, a level whose upper level sets differ.
    pub first_failing_level: Option<BigInt>,
}

/// A point where `f_s(f_t(x)) != f_t(f_s(x))`.
///
/// Only constructible through the verifying constructors, so every value
/// has been checked by direct evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    x: Rat,
    #[serde(with = "crate::json::bigint")]
    lhs: BigInt,
    #[serde(with = "crate::json::bigint")]
    rhs: BigInt,
}

impl Witness {
    /// Evaluates both orders of `(s, t)` at `x`; `Some` only if they differ.
    pub fn for_pair(s: &Rat, t: &Rat, x: &Rat) -> Option<Witness> {
        let lhs = eval_pair(s, t, x);
        let rhs = eval_pair(t, s, x);
        (lhs != rhs).then(|| Witness { x: x.clone(), lhs, rhs })
    }

    /// Same, for `floor(a1 * floor(a2 x + g2) + g1)` against the reverse order.
    pub fn for_affine_pair(first: (&Rat, &Rat), second: (&Rat, &Rat), x: &Rat) -> Option<Witness> {
        let (a1, g1) = first;
        let (a2, g2) = second;
        let lhs = eval_affine(a1, g1, &Rat::from_int(eval_affine(a2, g2, x)));
        let rhs = eval_affine(a2, g2, &Rat::from_int(eval_affine(a1, g1, x)));
        (lhs != rhs).then(|| Witness { x: x.clone(), lhs, rhs })
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    /// `f_s(f_t(x))`.
    pub fn lhs(&self) -> &BigInt {
        &self.lhs
    }

    /// `f_t(f_s(x))`.
    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    /// Re-evaluates against `(s, t)`.
    pub fn verifies(&self, s: &Rat, t: &Rat) -> bool {
        Witness::for_pair(s, t, &self.x).as_ref() == Some(self)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} lhs={} rhs={}", self.x, self.lhs, self.rhs)
    }
}

/// Result of checking a level-set criterion over one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub first_failure: Option<BigInt>,
}

impl CriterionOutcome {
    fn from_failure(first_failure: Option<BigInt>) -> Self {
        CriterionOutcome { holds: first_failure.is_none(), first_failure }
    }
}

/// Period of both criterion defects in the level `n`.
///
/// With `a = 1/s` and `b = 1/t`, the positive-case defect is
///
/// ```text
/// b*ceil(n a) - a*ceil(n b) = b*(n a + u(n a)) - a*(n b + u(n b))
///                           = b*u(n a) - a*u(n b),      u(y) = ceil(y) - y
/// ```
///
/// and `u(n a)` depends only on `n mod den(a)` because `(n + den(a)) a` and
/// `n a` differ by the integer `num(a)`. The negative-case defect
/// `b*floor(n a) + b - a*floor(n b) - a = a*{n b} - b*{n a} + b - a` is
/// periodic for the same reason. Both therefore repeat with period
/// `lcm(den(a), den(b))`, and checking `0 <= n < L` decides every `n` in Z.
pub fn criterion_period(s: &Rat, t: &Rat) -> BigInt {
    // den(1/s) = |num(s)|
    s.numer().abs().lcm(&t.numer().abs())
}

/// `b*u(n a) - a*u(n b)` with `a = 1/s`, `b = 1/t`; zero iff the positive
/// criterion holds at `n`.
pub fn positive_defect(s: &Rat, t: &Rat, n: &BigInt) -> Result<Rat> {
    let (a, b) = (s.recip()?, t.recip()?);
    let n = Rat::from_int(n.clone());
    Ok(&b * (&n * &a).frac_up() - &a * (&n * &b).frac_up())
}

/// `a*{n b} - b*{n a} + b - a` with `a = 1/s`, `b = 1/t`; zero iff the
/// negative criterion holds at `n`.
pub fn negative_defect(s: &Rat, t: &Rat, n: &BigInt) -> Result<Rat> {
    let (a, b) = (s.recip()?, t.recip()?);
    let n = Rat::from_int(n.clone());
    Ok(&a * (&n * &b).frac() - &b * (&n * &a).frac() + &b - &a)
}

/// Whether `b*ceil(n a) == a*ceil(n b)` holds at level `n`.
pub fn positive_criterion_at(s: &Rat, t: &Rat, n: &BigInt) -> Result<bool> {
    let (a, b) = (s.recip()?, t.recip()?);
    let n = Rat::from_int(n.clone());
    Ok(&b * Rat::from_int((&n * &a).ceil()) == &a * Rat::from_int((&n * &b).ceil()))
}

/// Whether `b*floor(n a) + b == a*floor(n b) + a` holds at level `n`.
pub fn negative_criterion_at(s: &Rat, t: &Rat, n: &BigInt) -> Result<bool> {
    let (a, b) = (s.recip()?, t.recip()?);
    let n = Rat::from_int(n.clone());
    Ok(&b * Rat::from_int((&n * &a).floor()) + &b == &a * Rat::from_int((&n * &b).floor()) + &a)
}

fn first_failure_in_period(
    s: &Rat,
    t: &Rat,
    holds_at: impl Fn(&Rat, &Rat, &BigInt) -> Result<bool>,
) -> Result<Option<BigInt>> {
    let period = criterion_period(s, t);
    let mut n = BigInt::zero();
    while n < period {
        if !holds_at(s, t, &n)? {
            return Ok(Some(n));
        }
        n += 1;
    }
    Ok(None)
}

/// Level-set criterion for `s, t > 0`, checked over one full period.
pub fn criterion_positive(s: &Rat, t: &Rat) -> Result<CriterionOutcome> {
    if !(s.is_positive() && t.is_positive()) {
        return Err(Error::Precondition(format!("criterion_positive needs s, t > 0, got ({s}, {t})")));
    }
    first_failure_in_period(s, t, positive_criterion_at).map(CriterionOutcome::from_failure)
}

/// Level-set criterion for `s, t < 0`, checked over one full period.
///
/// Level 0 alone already forces `s == t`; the rest of the period is kept as
/// a cross-check.
pub fn criterion_negative(s: &Rat, t: &Rat) -> Result<CriterionOutcome> {
    if !(s.is_negative() && t.is_negative()) {
        return Err(Error::Precondition(format!("criterion_negative needs s, t < 0, got ({s}, {t})")));
    }
    first_failure_in_period(s, t, negative_criterion_at).map(CriterionOutcome::from_failure)
}

/// A level at which the two upper level sets differ, for `s * t < 0`.
///
/// One order always yields a closed downward ray and the other an open one,
/// so every level works; level 0 is returned after checking.
pub fn mixed_sign_disproof(s: &Rat, t: &Rat) -> Result<BigInt> {
    if (s * t) >= 0 {
        return Err(Error::Precondition(format!("mixed_sign_disproof needs s * t < 0, got ({s}, {t})")));
    }
    let level = BigInt::zero();
    let forward = upper_level_set(s, t, &level);
    let backward = upper_level_set(t, s, &level);
    if halfline_equal(&forward, &backward) {
        return Err(Error::Internal(format!(
            "mixed-sign level sets coincide for ({s}, {t}): {forward}"
        )));
    }
    Ok(level)
}

fn failing_level(s: &Rat, t: &Rat) -> Option<BigInt> {
    let outcome = match (s.is_positive(), t.is_positive()) {
        (true, true) => criterion_positive(s, t),
        (false, false) => criterion_negative(s, t),
        _ => return mixed_sign_disproof(s, t).ok(),
    };
    outcome.ok().and_then(|o| o.first_failure)
}

/// Which commuting family `(s, t)` belongs to.
///
/// Overlapping families resolve as Equal, then ZeroLeft/ZeroRight, then
/// UnitFractions.
pub fn classify(s: &Rat, t: &Rat) -> Verdict {
    let case = if s == t {
        Family::Equal
    } else if s.is_zero() {
        Family::ZeroLeft
    } else if t.is_zero() {
        Family::ZeroRight
    } else if let (Some(m), Some(n)) = (s.unit_fraction_index(), t.unit_fraction_index()) {
        Family::UnitFractions { m, n }
    } else {
        Family::NonCommuting
    };
    let first_failing_level = match case {
        Family::NonCommuting => failing_level(s, t),
        _ => None,
    };
    Verdict { commutes: case != Family::NonCommuting, case, first_failing_level }
}

/// A verified point where the two composition orders of `(s, t)` differ.
pub fn find_witness(s: &Rat, t: &Rat) -> Result<Witness> {
    let verdict = classify(s, t);
    if verdict.commutes {
        return Err(Error::Commutes(s.to_string(), t.to_string()));
    }
    let level = verdict
        .first_failing_level
        .ok_or_else(|| Error::Internal(format!("no failing level found for ({s}, {t})")))?;
    let forward = upper_level_set(s, t, &level);
    let backward = upper_level_set(t, s, &level);
    let x = separating_point(&forward, &backward).ok_or_else(|| {
        Error::Internal(format!("level sets at {level} coincide for ({s}, {t}): {forward}"))
    })?;
    Witness::for_pair(s, t, &x).ok_or_else(|| {
        Error::Internal(format!(
            "separating point {x} of {forward} and {backward} does not split ({s}, {t})"
        ))
    })
}

/// A closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatRange {
    lo: Rat,
    hi: Rat,
}

impl RatRange {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyRange(format!("[{lo}, {hi}]")));
        }
        Ok(RatRange { lo, hi })
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// The points `k / den` inside the range, in increasing order.
    pub fn lattice(&self, den: &BigInt) -> impl Iterator<Item = Rat> + '_ {
        let scale = Rat::from_int(den.clone());
        let first = (&self.lo * &scale).ceil();
        let last = (&self.hi * &scale).floor();
        let den = den.clone();
        num_iter_inclusive(first, last).map(move |k| Rat::new(k, den.clone()).expect("den >= 1"))
    }
}

fn num_iter_inclusive(first: BigInt, last: BigInt) -> impl Iterator<Item = BigInt> {
    std::iter::successors(Some(first), |k| Some(k + BigInt::one())).take_while(move |k| *k <= last)
}

/// Outcome of an exhaustive sweep for disagreeing points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    NoCounterexample,
    Refuted(Witness),
}

impl OracleOutcome {
    /// `true` when no counterexample turned up. Not a proof of commutation.
    pub fn commutes(&self) -> bool {
        matches!(self, OracleOutcome::NoCounterexample)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            OracleOutcome::Refuted(w) => Some(w),
            OracleOutcome::NoCounterexample => None,
        }
    }
}

fn check_denominator(den: &BigInt) -> Result<()> {
    if den < &BigInt::one() {
        return Err(Error::Precondition(format!("denominator bound must be >= 1, got {den}")));
    }
    Ok(())
}

/// Evaluates both composition orders at every `k / den` in `range` and
/// returns the first disagreement.
pub fn brute_force_commute(s: &Rat, t: &Rat, range: &RatRange, den: &BigInt) -> Result<OracleOutcome> {
    check_denominator(den)?;
    Ok(range
        .lattice(den)
        .find_map(|x| Witness::for_pair(s, t, &x))
        .map_or(OracleOutcome::NoCounterexample, OracleOutcome::Refuted))
}

/// The same sweep for `floor(a1 * floor(a2 x + g2) + g1)` against
/// `floor(a2 * floor(a1 x + g1) + g2)`. Exploratory only: nothing here
/// classifies affine pairs.
pub fn affine_commute_oracle(
    first: (&Rat, &Rat),
    second: (&Rat, &Rat),
    range: &RatRange,
    den: &BigInt,
) -> Result<OracleOutcome> {
    check_denominator(den)?;
    Ok(range
        .lattice(den)
        .find_map(|x| Witness::for_affine_pair(first, second, &x))
        .map_or(OracleOutcome::NoCounterexample, OracleOutcome::Refuted))
}

/// Denominator used by the sweep cross-check: `12 * den(s) * den(t)`.
pub fn sweep_oracle_denominator(s: &Rat, t: &Rat) -> BigInt {
    BigInt::from(12) * s.denom() * t.denom()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::dilated::eval_pair;
    use crate::testutil::{grid, nonzero_rat};
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn range(lo: i64, hi: i64) -> RatRange {
        RatRange::new(rat(lo, 1), rat(hi, 1)).unwrap()
    }

    #[test]
    fn classify_examples() {
        let v = classify(&rat(1, 2), &rat(1, 3));
        assert!(v.commutes);
        assert_eq!(v.case, Family::UnitFractions { m: big(2), n: big(3) });
        assert_eq!(v.first_failing_level, None);

        let v = classify(&rat(-7, 3), &rat(-7, 3));
        assert!(v.commutes);
        assert_eq!(v.case, Family::Equal);

        let v = classify(&rat(2, 1), &rat(3, 1));
        assert!(!v.commutes);
        assert_eq!(v.case, Family::NonCommuting);
        assert_eq!(v.first_failing_level, Some(big(1)));

        assert_eq!(classify(&Rat::zero(), &rat(5, 1)).case, Family::ZeroLeft);
        assert_eq!(classify(&rat(5, 1), &Rat::zero()).case, Family::ZeroRight);

        let v = classify(&rat(-1, 2), &rat(-1, 3));
        assert!(!v.commutes);
        assert_eq!(v.first_failing_level, Some(big(0)));
    }

    #[test]
    fn family_precedence() {
        assert_eq!(classify(&Rat::zero(), &Rat::zero()).case, Family::Equal);
        assert_eq!(classify(&rat(1, 4), &rat(1, 4)).case, Family::Equal);
        assert_eq!(
            classify(&Rat::one(), &rat(1, 9)).case,
            Family::UnitFractions { m: big(1), n: big(9) }
        );
    }

    #[test]
    fn criterion_positive_examples() {
        let o = criterion_positive(&rat(1, 2), &rat(1, 3)).unwrap();
        assert_eq!(o, CriterionOutcome { holds: true, first_failure: None });

        // a = 1/2, b = 1/3: level 0 gives 0 = 0, level 1 gives 1/3 vs 1/2.
        assert!(positive_criterion_at(&rat(2, 1), &rat(3, 1), &big(0)).unwrap());
        let o = criterion_positive(&rat(2, 1), &rat(3, 1)).unwrap();
        assert_eq!(o, CriterionOutcome { holds: false, first_failure: Some(big(1)) });

        for s in [rat(5, 7), rat(3, 1), rat(1, 9)] {
            assert!(criterion_positive(&s, &s).unwrap().holds);
        }
        assert!(matches!(criterion_positive(&rat(-1, 2), &rat(1, 3)), Err(Error::Precondition(_))));
        assert!(criterion_positive(&Rat::zero(), &rat(1, 3)).is_err());
    }

    #[test]
    fn criterion_negative_examples() {
        assert!(criterion_negative(&rat(-3, 4), &rat(-3, 4)).unwrap().holds);
        assert!(criterion_negative(&rat(-2, 1), &rat(-2, 1)).unwrap().holds);
        let o = criterion_negative(&rat(-1, 2), &rat(-1, 3)).unwrap();
        assert_eq!(o, CriterionOutcome { holds: false, first_failure: Some(big(0)) });
        assert!(criterion_negative(&rat(1, 2), &rat(-1, 3)).is_err());
    }

    #[test]
    fn criterion_matches_level_set_equality() {
        let vals: Vec<Rat> = grid(4, 6).into_iter().filter(|v| !v.is_zero()).collect();
        for s in &vals {
            for t in &vals {
                for n in -8..=8 {
                    let level = big(n);
                    let equal = upper_level_set(s, t, &level) == upper_level_set(t, s, &level);
                    if s.is_positive() && t.is_positive() {
                        assert_eq!(positive_criterion_at(s, t, &level).unwrap(), equal);
                    } else if s.is_negative() && t.is_negative() {
                        assert_eq!(negative_criterion_at(s, t, &level).unwrap(), equal);
                    } else {
                        assert!(!equal);
                    }
                }
            }
        }
    }

    #[test]
    fn defects_are_periodic() {
        let vals: Vec<Rat> = grid(5, 7).into_iter().filter(|v| !v.is_zero()).collect();
        for s in &vals {
            for t in &vals {
                let period = criterion_period(s, t);
                for n in -6..=6 {
                    let n = big(n);
                    let shifted = &n + &period;
                    if s.is_positive() && t.is_positive() {
                        let d = positive_defect(s, t, &n).unwrap();
                        assert_eq!(d, positive_defect(s, t, &shifted).unwrap());
                        assert_eq!(d.is_zero(), positive_criterion_at(s, t, &n).unwrap());
                    }
                    if s.is_negative() && t.is_negative() {
                        let d = negative_defect(s, t, &n).unwrap();
                        assert_eq!(d, negative_defect(s, t, &shifted).unwrap());
                        assert_eq!(d.is_zero(), negative_criterion_at(s, t, &n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_sign_examples() {
        assert_eq!(mixed_sign_disproof(&rat(1, 1), &rat(-1, 1)).unwrap(), big(0));
        assert_eq!(
            upper_level_set(&rat(1, 1), &rat(-1, 1), &big(0)).to_string(),
            "(-inf, 0]"
        );
        assert_eq!(
            upper_level_set(&rat(-1, 1), &rat(1, 1), &big(0)).to_string(),
            "(-inf, 1)"
        );
        assert_eq!(mixed_sign_disproof(&rat(2, 1), &rat(-3, 1)).unwrap(), big(0));
        assert_eq!(mixed_sign_disproof(&rat(-1, 2), &rat(5, 1)).unwrap(), big(0));
        assert!(mixed_sign_disproof(&rat(1, 2), &rat(5, 1)).is_err());
        assert!(mixed_sign_disproof(&Rat::zero(), &rat(5, 1)).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = find_witness(&rat(2, 1), &rat(3, 1)).unwrap();
        assert!(w.verifies(&rat(2, 1), &rat(3, 1)));
        // Level 1 sets are [1/3, inf) and [1/2, inf); the midpoint separates.
        assert_eq!(w.x(), &rat(5, 12));
        assert_eq!((w.lhs(), w.rhs()), (&big(2), &big(0)));
        // The hand-computed point 1/2 is also a witness.
        let half = Witness::for_pair(&rat(2, 1), &rat(3, 1), &rat(1, 2)).unwrap();
        assert_eq!((half.lhs(), half.rhs()), (&big(2), &big(3)));

        let w = find_witness(&rat(1, 1), &rat(-1, 1)).unwrap();
        assert_eq!(w.x(), &rat(1, 2));
        assert_eq!((w.lhs(), w.rhs()), (&big(-1), &big(0)));

        let w = find_witness(&rat(-1, 2), &rat(-1, 3)).unwrap();
        assert_eq!(w.x(), &rat(-5, 2));
        assert_eq!((w.lhs(), w.rhs()), (&big(0), &big(-1)));
        assert_eq!(eval_pair(&rat(-1, 2), &rat(-1, 3), &rat(-5, 2)), big(0));
        assert_eq!(eval_pair(&rat(-1, 3), &rat(-1, 2), &rat(-5, 2)), big(-1));
    }

    #[test]
    fn witness_refused_for_commuting_pairs() {
        for (s, t) in [(rat(1, 2), rat(1, 3)), (rat(4, 3), rat(4, 3)), (Rat::zero(), rat(9, 1))] {
            assert!(matches!(find_witness(&s, &t), Err(Error::Commutes(_, _))));
        }
    }

    #[test]
    fn witness_constructor_rejects_agreeing_points() {
        assert_eq!(Witness::for_pair(&rat(2, 1), &rat(3, 1), &Rat::zero()), None);
        assert_eq!(Witness::for_pair(&rat(1, 2), &rat(1, 3), &rat(7, 1)), None);
    }

    #[test]
    fn brute_force_examples() {
        let out = brute_force_commute(&rat(1, 2), &rat(1, 3), &range(-10, 10), &big(60)).unwrap();
        assert_eq!(out, OracleOutcome::NoCounterexample);

        let out = brute_force_commute(&rat(2, 1), &rat(3, 1), &range(-2, 2), &big(6)).unwrap();
        let w = out.witness().expect("refuted");
        assert!(w.verifies(&rat(2, 1), &rat(3, 1)));
        // Scanning upward from -2 in steps of 1/6, the first split is at -5/3:
        // f_2(f_3(-5/3)) = -10 and f_3(f_2(-5/3)) = -12.
        assert_eq!(w.x(), &rat(-5, 3));
        assert_eq!((w.lhs(), w.rhs()), (&big(-10), &big(-12)));

        for a in [rat(-7, 3), rat(0, 1), rat(5, 2)] {
            assert!(brute_force_commute(&a, &a, &range(-3, 3), &big(7)).unwrap().commutes());
        }
        assert!(matches!(
            brute_force_commute(&rat(1, 2), &rat(1, 3), &range(0, 1), &big(0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn affine_oracle_examples() {
        let zero = Rat::zero();
        for (a1, a2) in [(rat(2, 1), rat(3, 1)), (rat(1, 2), rat(1, 3)), (rat(-1, 2), rat(3, 4))] {
            let plain = brute_force_commute(&a1, &a2, &range(-3, 3), &big(12)).unwrap();
            let affine = affine_commute_oracle((&a1, &zero), (&a2, &zero), &range(-3, 3), &big(12)).unwrap();
            assert_eq!(plain, affine);
        }

        // floor(floor(x + 1/3) + 1/2) = floor(x + 1/3) against floor(x + 1/2):
        // these differ on [m - 1/2, m - 1/3), first hit at x = -3/2.
        let one = Rat::one();
        let out = affine_commute_oracle(
            (&one, &rat(1, 2)),
            (&one, &rat(1, 3)),
            &range(-2, 2),
            &big(12),
        )
        .unwrap();
        let w = out.witness().expect("refuted");
        assert_eq!(w.x(), &rat(-3, 2));
        assert_eq!((w.lhs(), w.rhs()), (&big(-2), &big(-1)));

        let out =
            affine_commute_oracle((&rat(2, 1), &rat(1, 2)), (&rat(3, 1), &zero), &range(-2, 2), &big(12))
                .unwrap();
        assert!(!out.commutes());
    }

    #[test]
    fn lattice_covers_range() {
        let r = RatRange::new(rat(-1, 3), rat(1, 2)).unwrap();
        let pts: Vec<Rat> = r.lattice(&big(4)).collect();
        assert_eq!(pts, vec![rat(-1, 4), Rat::zero(), rat(1, 4), rat(1, 2)]);
        assert!(RatRange::new(rat(1, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn reflection_and_reciprocal_asymmetry() {
        for m in 1..=6 {
            for n in 1..=6 {
                if m == n {
                    continue;
                }
                assert!(classify(&rat(1, m), &rat(1, n)).commutes);
                assert!(!classify(&rat(-1, m), &rat(-1, n)).commutes);
            }
        }
        assert!(classify(&rat(1, 2), &rat(1, 3)).commutes);
        assert!(!classify(&rat(2, 1), &rat(3, 1)).commutes);
    }

    proptest! {
        #[test]
        fn exchange_symmetry(s in nonzero_rat(), t in nonzero_rat()) {
            prop_assert_eq!(classify(&s, &t).commutes, classify(&t, &s).commutes);
        }

        #[test]
        fn mixed_signs_never_commute(s in nonzero_rat(), t in nonzero_rat()) {
            let (s, t) = if s.is_positive() == t.is_positive() { (s.clone(), -t) } else { (s, t) };
            prop_assert!(!classify(&s, &t).commutes);
            let w = find_witness(&s, &t).unwrap();
            prop_assert!(w.verifies(&s, &t));
        }

        #[test]
        fn equal_pairs_commute_under_reflection(s in nonzero_rat()) {
            prop_assert!(classify(&s, &s).commutes);
            prop_assert!(classify(&-&s, &-&s).commutes);
        }

        #[test]
        fn witnesses_verify(
            (sn, sd) in (-40i64..40, 1i64..12),
            (tn, td) in (-40i64..40, 1i64..12),
        ) {
            let s = rat(sn, sd);
            let t = rat(tn, td);
            match find_witness(&s, &t) {
                Ok(w) => prop_assert!(w.verifies(&s, &t)),
                Err(Error::Commutes(..)) => prop_assert!(classify(&s, &t).commutes),
                Err(e) => prop_assert!(false, "unexpected error {}", e),
            }
        }
    }
}
