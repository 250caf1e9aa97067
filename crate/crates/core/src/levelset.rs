//! Upper level sets `{x : floor(s * floor(t * x)) >= n}` of two-fold
//! compositions.
//!
//! Every such set is a half-line, the whole line, or empty. Writing
//! `a = 1/s` and `b = 1/t`, the endpoint formulas depend only on the signs:
//!
//! | s | t | set                                   |
//! |---|---|---------------------------------------|
//! | + | + | `[b * ceil(n a), inf)`                |
//! | - | - | `(b * floor(n a) + b, inf)`           |
//! | + | - | `(-inf, b * ceil(n a)]`               |
//! | - | + | `(-inf, b * floor(n a) + b)`          |
//!
//! and the composition is identically zero when `s * t == 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HalfLine {
    /// `[endpoint, inf)` when closed, `(endpoint, inf)` otherwise.
    Upward { endpoint: Rat, closed: bool },
    /// `(-inf, endpoint]` when closed, `(-inf, endpoint)` otherwise.
    Downward { endpoint: Rat, closed: bool },
    Everything,
    Empty,
}

impl HalfLine {
    pub fn contains(&self, x: &Rat) -> bool {
        match self {
            HalfLine::Upward { endpoint, closed: true } => x >= endpoint,
            HalfLine::Upward { endpoint, closed: false } => x > endpoint,
            HalfLine::Downward { endpoint, closed: true } => x <= endpoint,
            HalfLine::Downward { endpoint, closed: false } => x < endpoint,
            HalfLine::Everything => true,
            HalfLine::Empty => false,
        }
    }

    pub fn endpoint(&self) -> Option<&Rat> {
        match self {
            HalfLine::Upward { endpoint, .. } | HalfLine::Downward { endpoint, .. } => Some(endpoint),
            HalfLine::Everything | HalfLine::Empty => None,
        }
    }

    pub fn is_subset_of(&self, other: &HalfLine) -> bool {
        use HalfLine::*;
        match (self, other) {
            (Empty, _) | (_, Everything) => true,
            (_, Empty) | (Everything, _) => false,
            (Upward { endpoint: e1, closed: c1 }, Upward { endpoint: e2, closed: c2 }) => {
                e1 > e2 || (e1 == e2 && (!c1 || *c2))
            }
            (Downward { endpoint: e1, closed: c1 }, Downward { endpoint: e2, closed: c2 }) => {
                e1 < e2 || (e1 == e2 && (!c1 || *c2))
            }
            (Upward { .. }, Downward { .. }) | (Downward { .. }, Upward { .. }) => false,
        }
    }
}

impl fmt::Display for HalfLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfLine::Upward { endpoint, closed } => {
                write!(f, "{}{}, inf)", if *closed { '[' } else { '(' }, endpoint)
            }
            HalfLine::Downward { endpoint, closed } => {
                write!(f, "(-inf, {}{}", endpoint, if *closed { ']' } else { ')' })
            }
            HalfLine::Everything => f.write_str("R"),
            HalfLine::Empty => f.write_str("{}"),
        }
    }
}

impl FromStr for HalfLine {
    type Err = Error;

    /// Parses exactly the forms produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseHalfLine(s.to_string());
        match s {
            "R" => return Ok(HalfLine::Everything),
            "{}" => return Ok(HalfLine::Empty),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("(-inf, ") {
            let (body, closed) = if let Some(b) = rest.strip_suffix(']') {
                (b, true)
            } else if let Some(b) = rest.strip_suffix(')') {
                (b, false)
            } else {
                return Err(bad());
            };
            let endpoint = body.parse().map_err(|_| bad())?;
            return Ok(HalfLine::Downward { endpoint, closed });
        }
        let body = s.strip_suffix(", inf)").ok_or_else(bad)?;
        let (body, closed) = if let Some(b) = body.strip_prefix('[') {
            (b, true)
        } else if let Some(b) = body.strip_prefix('(') {
            (b, false)
        } else {
            return Err(bad());
        };
        let endpoint = body.parse().map_err(|_| bad())?;
        Ok(HalfLine::Upward { endpoint, closed })
    }
}

/// `{x : floor(s * floor(t * x)) >= n}` where `s` is the outer and `t` the
/// inner dilation.
pub fn upper_level_set(s: &Rat, t: &Rat, n: &BigInt) -> HalfLine {
    if s.is_zero() || t.is_zero() {
        return if n.is_positive() { HalfLine::Empty } else { HalfLine::Everything };
    }
    // Inverse parameters: a = 1/s, b = 1/t. Both are nonzero here.
    let a = s.recip().expect("s is nonzero");
    let b = t.recip().expect("t is nonzero");
    let na = Rat::from_int(n.clone()) * &a;

    // floor(s * m) >= n  <=>  m >= ceil(n a)   for s > 0
    //                    <=>  m <= floor(n a)  for s < 0
    // with m = floor(t x), then floor(t x) >= k <=> t x >= k and
    // floor(t x) <= k <=> t x < k + 1; dividing by t flips direction for t < 0.
    match (s.is_positive(), t.is_positive()) {
        (true, true) => HalfLine::Upward { endpoint: &b * Rat::from_int(na.ceil()), closed: true },
        (false, false) => HalfLine::Upward {
            endpoint: &b * Rat::from_int(na.floor() + BigInt::one()),
            closed: false,
        },
        (true, false) => HalfLine::Downward { endpoint: &b * Rat::from_int(na.ceil()), closed: true },
        (false, true) => HalfLine::Downward {
            endpoint: &b * Rat::from_int(na.floor() + BigInt::one()),
            closed: false,
        },
    }
}

/// Set equality. Canonical rationals make this structural.
pub fn halfline_equal(a: &HalfLine, b: &HalfLine) -> bool {
    a == b
}

/// A point lying in exactly one of `a` and `b`, or `None` when the sets are
/// equal.
///
/// Same-direction rays with distinct endpoints give the midpoint; rays that
/// differ only in endpoint membership give the endpoint. Otherwise a point one
/// unit past the relevant endpoint is used.
pub fn separating_point(a: &HalfLine, b: &HalfLine) -> Option<Rat> {
    use HalfLine::*;
    if a == b {
        return None;
    }
    let one = Rat::one();
    let point = match (a, b) {
        (Upward { endpoint: e1, .. }, Upward { endpoint: e2, .. })
        | (Downward { endpoint: e1, .. }, Downward { endpoint: e2, .. }) => {
            if e1 == e2 {
                e1.clone()
            } else {
                (e1 + e2) / Rat::from_int(2)
            }
        }
        // Strictly above both endpoints: inside the upward ray only.
        (Upward { endpoint: e1, .. }, Downward { endpoint: e2, .. })
        | (Downward { endpoint: e2, .. }, Upward { endpoint: e1, .. }) => e1.max(e2) + one,
        (Everything, Empty) | (Empty, Everything) => Rat::zero(),
        (Everything, Upward { endpoint, .. }) | (Upward { endpoint, .. }, Everything) => endpoint - one,
        (Everything, Downward { endpoint, .. }) | (Downward { endpoint, .. }, Everything) => {
            endpoint + one
        }
        (Empty, Upward { endpoint, .. }) | (Upward { endpoint, .. }, Empty) => endpoint + one,
        (Empty, Downward { endpoint, .. }) | (Downward { endpoint, .. }, Empty) => endpoint - one,
        (Everything, Everything) | (Empty, Empty) => unreachable!("equal sets handled above"),
    };
    debug_assert!(a.contains(&point) != b.contains(&point));
    Some(point)
}

/// Probe offset used when checking a level set against direct evaluation.
pub fn probe_offset(endpoint: &Rat) -> Rat {
    Rat::new(1, endpoint.denom() * BigInt::from(4)).expect("positive denominator")
}
