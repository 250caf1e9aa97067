use proptest::prelude::*;

use crate::arith::{rat, Rat};

pub fn any_rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    any_rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// Distinct reduced fractions `k/d` with `1 <= d <= max_den` and `|k| <= max_num`.
pub fn grid(max_den: i64, max_num: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = (1..=max_den)
        .flat_map(|d| (-max_num..=max_num).map(move |k| rat(k, d)))
        .collect();
    out.sort();
    out.dedup();
    out
}
