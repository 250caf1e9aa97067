//! Invariant checks bundled into the binary so a build can vouch for itself.

use num_bigint::BigInt;

use crate::arith::Rat;
use crate::commute::{classify, criterion_period, positive_defect};
use crate::dilated::{eval_ceiling_dual, eval_pair, h_closed_form, h_diff, tm_eval};
use crate::levelset::{probe_offset, separating_point, upper_level_set};
use crate::raster::{rasterize, render, Format};
use crate::sweep::run_sweep;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn small_grid(max_num: i64, max_den: i64) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=max_den)
        .flat_map(|d| (-max_num..=max_num).map(move |k| Rat::new(k, d).expect("d >= 1")))
        .collect();
    v.sort();
    v.dedup();
    v
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> Check {
    match failures.first() {
        None => Check { name, passed: true, detail: format!("{total} cases") },
        Some(first) => Check {
            name,
            passed: false,
            detail: format!("{} of {total} failed, first: {first}", failures.len()),
        },
    }
}

fn ceiling_identity() -> Check {
    let xs = small_grid(48, 12);
    let failures = xs
        .iter()
        .filter(|x| x.ceil() != -(-*x).floor() || x.frac() < 0 || x.frac() >= 1)
        .map(|x| x.to_string())
        .collect();
    check("ceiling identity", failures, xs.len())
}

fn h_identity() -> Check {
    let ps = small_grid(5, 3);
    let xs = small_grid(12, 4);
    let mut failures = Vec::new();
    let mut total = 0;
    for a in &ps {
        for b in &ps {
            for x in &xs {
                total += 1;
                let h = h_diff(a, b, x);
                let bounded = !a.is_positive() || (h <= 0 && h > -(a + &Rat::one()));
                if h != h_closed_form(a, b, x) || !bounded {
                    failures.push(format!("({a}, {b}, {x})"));
                }
            }
        }
    }
    check("h identity and bound", failures, total)
}

fn duality() -> Check {
    let ps = small_grid(5, 3);
    let xs = small_grid(12, 4);
    let mut failures = Vec::new();
    let mut total = 0;
    for a in &ps {
        for b in &ps {
            for x in &xs {
                total += 1;
                let dual = -eval_ceiling_dual(a, &Rat::from_int(eval_ceiling_dual(b, &-x)));
                if eval_pair(a, b, x) != dual {
                    failures.push(format!("({a}, {b}, {x})"));
                }
            }
        }
    }
    check("floor/ceiling duality", failures, total)
}

fn semigroup() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for m in 1..=12i64 {
        for n in 1..=12i64 {
            for k in -240..=240i64 {
                total += 1;
                let x = Rat::new(k, 24).expect("nonzero");
                let (bm, bn) = (BigInt::from(m), BigInt::from(n));
                let t = |i: &BigInt, v: &Rat| tm_eval(i, v).expect("index >= 1");
                let mn = t(&bm, &Rat::from_int(t(&bn, &x)));
                let nm = t(&bn, &Rat::from_int(t(&bm, &x)));
                if mn != nm || mn != t(&(&bm * &bn), &x) {
                    failures.push(format!("m={m} n={n} x={x}"));
                }
            }
        }
    }
    check("T_m semigroup", failures, total)
}

fn level_sets() -> Check {
    let ps: Vec<Rat> = small_grid(4, 3).into_iter().filter(|v| !v.is_zero()).collect();
    let mut failures = Vec::new();
    let mut total = 0;
    for s in &ps {
        for t in &ps {
            for n in -6..=6i64 {
                let level = BigInt::from(n);
                let set = upper_level_set(s, t, &level);
                let e = set.endpoint().expect("ray").clone();
                let d = probe_offset(&e);
                for x in [&e - &d, e.clone(), &e + &d] {
                    total += 1;
                    if set.contains(&x) != (eval_pair(s, t, &x) >= level) {
                        failures.push(format!("s={s} t={t} n={n} x={x}"));
                    }
                }
                let other = upper_level_set(t, s, &level);
                if let Some(x) = separating_point(&set, &other) {
                    if set.contains(&x) == other.contains(&x) {
                        failures.push(format!("separating point {x} for s={s} t={t} n={n}"));
                    }
                }
            }
        }
    }
    check("level set formulas", failures, total)
}

fn periodicity() -> Check {
    let ps: Vec<Rat> = small_grid(6, 4).into_iter().filter(|v| v.is_positive()).collect();
    let mut failures = Vec::new();
    let mut total = 0;
    for s in &ps {
        for t in &ps {
            let period = criterion_period(s, t);
            for n in -4..=4i64 {
                total += 1;
                let n = BigInt::from(n);
                let here = positive_defect(s, t, &n).expect("nonzero");
                let there = positive_defect(s, t, &(&n + &period)).expect("nonzero");
                if here != there {
                    failures.push(format!("s={s} t={t} n={n}"));
                }
            }
        }
    }
    check("criterion periodicity", failures, total)
}

fn sweep() -> Check {
    let report = run_sweep(3, 3);
    let failures = report
        .inconsistent()
        .map(|p| format!("({}, {}): {}", p.s, p.t, p.problems.join("; ")))
        .chain((!report.matches_families()).then(|| "commuting set differs from families".to_string()))
        .chain((!report.exchange_symmetric()).then(|| "not exchange symmetric".to_string()))
        .collect();
    check("classification sweep", failures, report.pairs.len())
}

fn symmetry() -> Check {
    let r = |n, d| Rat::new(n, d).expect("nonzero");
    let mut failures = Vec::new();
    if !classify(&r(1, 2), &r(1, 3)).commutes {
        failures.push("(1/2, 1/3) should commute".to_string());
    }
    if classify(&r(-1, 2), &r(-1, 3)).commutes {
        failures.push("(-1/2, -1/3) should not commute".to_string());
    }
    if classify(&r(2, 1), &r(3, 1)).commutes {
        failures.push("(2, 3) should not commute".to_string());
    }
    check("reflection and reciprocal asymmetry", failures, 3)
}

fn raster() -> Check {
    let line = rasterize(&Rat::new(1, 2).expect("nonzero"), &Rat::zero(), 0, 3).expect("range");
    let mut failures = Vec::new();
    if render(&line, Format::Ascii).ok().as_deref() != Some(b"..##\n##..\n".as_slice()) {
        failures.push("ascii".to_string());
    }
    let mut pgm = b"P5 4 2 255\n".to_vec();
    pgm.extend([255, 255, 0, 0, 0, 0, 255, 255]);
    if render(&line, Format::Pgm).ok() != Some(pgm) {
        failures.push("pgm".to_string());
    }
    check("raster rendering", failures, 2)
}

pub fn run_all() -> Vec<Check> {
    vec![
        ceiling_identity(),
        h_identity(),
        duality(),
        semigroup(),
        level_sets(),
        periodicity(),
        symmetry(),
        sweep(),
        raster(),
    ]
}
