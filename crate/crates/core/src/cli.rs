//! The `dilfloor` command line.
//!
//! Exit codes: 0 on success, 1 when an operation's contract is violated
//! (asking for a witness of a commuting pair, an empty raster range, a
//! failed sweep), 2 when the arguments do not parse.
//!
//! Rational arguments use the literal grammar `[+-]digits[/digits]`. Since a
//! leading `-` looks like a flag, pass negative pairs after `--`
//! (`classify -- -1/2 -1/3`) or with `--pair -1/2 -1/3`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::commute::{
    affine_commute_oracle, brute_force_commute, classify, find_witness, sweep_oracle_denominator,
    Family, OracleOutcome, RatRange, Witness,
};
use crate::dilated::{eval_chain, CompositionChain};
use crate::error::Error;
use crate::levelset::{upper_level_set, HalfLine};
use crate::raster::{rasterize, render, Format, Pixel};
use crate::selftest;
use crate::sweep::{run_sweep_with, ORACLE_HALF_WIDTH};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dilfloor", version, about = "Dilated floor functions: evaluation, level sets, commutativity")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate floor(a1 * floor(a2 * ... floor(ak * x))).
    Eval {
        /// Dilation factors, outermost first.
        #[arg(required = true)]
        factors: Vec<Rat>,
        #[arg(long, allow_hyphen_values = true)]
        at: Rat,
    },
    /// Upper level set {x : floor(s * floor(t * x)) >= level}.
    Levelset {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_hyphen_values = true)]
        level: BigInt,
    },
    /// Classify a pair and, if it does not commute, show a verified witness.
    Classify {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// A verified point where the two composition orders differ.
    Witness {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Search k/den for a disagreement. Sound refuter only.
    Oracle {
        #[command(flatten)]
        pair: PairArgs,
        /// Sampling range; defaults to [-10, 10].
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        range: Option<Vec<Rat>>,
        /// Lattice denominator; defaults to 12 * den(s) * den(t).
        #[arg(long)]
        den: Option<BigInt>,
        /// Offsets g1 g2: compare floor(s*floor(t x + g2) + g1) with the reverse order.
        #[arg(long, num_args = 2, value_names = ["G1", "G2"], allow_hyphen_values = true)]
        affine: Option<Vec<Rat>>,
    },
    /// Rasterize the digital line n -> floor(alpha * n + gamma).
    Raster {
        #[arg(allow_hyphen_values = true)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long, num_args = 2, value_names = ["N_MIN", "N_MAX"], allow_hyphen_values = true, required = true)]
        range: Vec<i64>,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// Write the image here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Classify every ordered pair of reduced p/q with |p| <= max-num and
    /// q <= max-den, cross-checking each against the brute-force oracle on
    /// [-10, 10] with lattice denominator 12 * den(s) * den(t).
    Sweep {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_num: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_den: u32,
        /// Oracle samples [-W, W].
        #[arg(long, value_name = "W", default_value_t = ORACLE_HALF_WIDTH as u32, value_parser = clap::value_parser!(u32).range(1..))]
        oracle_half_width: u32,
    },
    /// Run the built-in invariant checks.
    Selftest,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Outer dilation of the forward composition.
    #[arg(required_unless_present = "pair")]
    s: Option<Rat>,
    /// Inner dilation of the forward composition.
    #[arg(required_unless_present = "pair")]
    t: Option<Rat>,
    /// The pair as a flag; accepts negative values.
    #[arg(long, num_args = 2, value_names = ["S", "T"], allow_hyphen_values = true, conflicts_with_all = ["s", "t"])]
    pair: Option<Vec<Rat>>,
}

impl PairArgs {
    fn resolve(self) -> (Rat, Rat) {
        match (self.pair, self.s, self.t) {
            (Some(p), _, _) => {
                let mut it = p.into_iter();
                (it.next().expect("two values"), it.next().expect("two values"))
            }
            (None, Some(s), Some(t)) => (s, t),
            _ => unreachable!("clap enforces the pair"),
        }
    }
}

/// JSON shapes emitted by the subcommands.
pub mod output {
    use super::*;

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Value {
        #[serde(with = "crate::json::bigint")]
        pub value: BigInt,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct LevelSet {
        pub set: String,
        pub kind: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pub endpoint: Option<Rat>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pub closed: Option<bool>,
    }

    impl From<&HalfLine> for LevelSet {
        fn from(h: &HalfLine) -> Self {
            let (kind, closed) = match h {
                HalfLine::Upward { closed, .. } => ("upward", Some(*closed)),
                HalfLine::Downward { closed, .. } => ("downward", Some(*closed)),
                HalfLine::Everything => ("everything", None),
                HalfLine::Empty => ("empty", None),
            };
            LevelSet { set: h.to_string(), kind: kind.into(), endpoint: h.endpoint().cloned(), closed }
        }
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Classification {
        pub commutes: bool,
        pub case: String,
        #[serde(with = "crate::json::bigint_opt", skip_serializing_if = "Option::is_none", default)]
        pub m: Option<BigInt>,
        #[serde(with = "crate::json::bigint_opt", skip_serializing_if = "Option::is_none", default)]
        pub n: Option<BigInt>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pub witness: Option<Witness>,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Oracle {
        pub commutes: bool,
        pub lo: Rat,
        pub hi: Rat,
        #[serde(with = "crate::json::bigint")]
        pub den: BigInt,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pub witness: Option<Witness>,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Raster {
        pub alpha: Rat,
        pub gamma: Rat,
        pub pixels: Vec<Pixel>,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct SweepPair {
        pub s: Rat,
        pub t: Rat,
        pub case: String,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Sweep {
        pub max_num: u32,
        pub max_den: u32,
        pub oracle_half_width: u32,
        pub values: usize,
        pub pairs: usize,
        pub commuting: Vec<SweepPair>,
        pub witnesses: usize,
        pub noncommuting: usize,
        pub inconsistent: Vec<SweepPair>,
        pub exchange_symmetric: bool,
        pub matches_families: bool,
        pub passed: bool,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Check {
        pub name: String,
        pub passed: bool,
        pub detail: String,
    }

    #[derive(Debug, Serialize, Deserialize, PartialEq)]
    pub struct Selftest {
        pub checks: Vec<Check>,
        pub passed: bool,
    }
}

/// Failure of a subcommand after argument parsing.
enum Failure {
    Contract(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Contract(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Contract(format!("json encoding: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the CLI on `args` (program name first), writing to the given sinks.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Contract(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CONTRACT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONTRACT
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Eval { factors, at } => {
            let value = eval_chain(&CompositionChain::new(factors)?, &at);
            if json {
                emit_json(out, &output::Value { value })
            } else {
                writeln!(out, "{value}")?;
                Ok(EXIT_OK)
            }
        }
        Command::Levelset { pair, level } => {
            let (s, t) = pair.resolve();
            let set = upper_level_set(&s, &t, &level);
            if json {
                emit_json(out, &output::LevelSet::from(&set))
            } else {
                writeln!(out, "{set}")?;
                Ok(EXIT_OK)
            }
        }
        Command::Classify { pair } => cmd_classify(pair, json, out),
        Command::Witness { pair } => {
            let (s, t) = pair.resolve();
            let w = find_witness(&s, &t)?;
            if json {
                emit_json(out, &w)
            } else {
                writeln!(out, "{w}")?;
                Ok(EXIT_OK)
            }
        }
        Command::Oracle { pair, range, den, affine } => cmd_oracle(pair, range, den, affine, json, out),
        Command::Raster { alpha, gamma, range, format, output } => {
            let line = rasterize(&alpha, &gamma, range[0], range[1])?;
            if json {
                return emit_json(
                    out,
                    &output::Raster { alpha, gamma, pixels: line.pixels().to_vec() },
                );
            }
            let bytes = render(&line, format)?;
            match output {
                Some(path) => std::fs::write(path, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { max_num, max_den, oracle_half_width } => {
            cmd_sweep(max_num, max_den, oracle_half_width, json, out)
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let passed = checks.iter().all(|c| c.passed);
            if json {
                let report = output::Selftest {
                    checks: checks
                        .into_iter()
                        .map(|c| output::Check { name: c.name.into(), passed: c.passed, detail: c.detail })
                        .collect(),
                    passed,
                };
                emit_json(out, &report)?;
            } else {
                for c in &checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{mark} {}: {}", c.name, c.detail)?;
                }
            }
            Ok(if passed { EXIT_OK } else { EXIT_CONTRACT })
        }
    }
}

fn cmd_classify(pair: PairArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let (s, t) = pair.resolve();
    let verdict = classify(&s, &t);
    let witness = if verdict.commutes { None } else { Some(find_witness(&s, &t)?) };
    if json {
        let (m, n) = match &verdict.case {
            Family::UnitFractions { m, n } => (Some(m.clone()), Some(n.clone())),
            _ => (None, None),
        };
        return emit_json(
            out,
            &output::Classification {
                commutes: verdict.commutes,
                case: verdict.case.name().into(),
                m,
                n,
                witness,
            },
        );
    }
    writeln!(out, "pair: ({s}, {t})")?;
    writeln!(out, "commutes: {}", verdict.commutes)?;
    writeln!(out, "case: {}", verdict.case)?;
    if let Some(level) = &verdict.first_failing_level {
        writeln!(out, "level: {level}")?;
    }
    if let Some(w) = witness {
        writeln!(out, "witness: {w}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(
    pair: PairArgs,
    range: Option<Vec<Rat>>,
    den: Option<BigInt>,
    affine: Option<Vec<Rat>>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let (s, t) = pair.resolve();
    let range = match range {
        Some(r) => RatRange::new(r[0].clone(), r[1].clone())?,
        None => RatRange::new(Rat::from_int(-ORACLE_HALF_WIDTH), Rat::from_int(ORACLE_HALF_WIDTH))?,
    };
    let den = den.unwrap_or_else(|| sweep_oracle_denominator(&s, &t));
    let outcome = match &affine {
        Some(g) => affine_commute_oracle((&s, &g[0]), (&t, &g[1]), &range, &den)?,
        None => brute_force_commute(&s, &t, &range, &den)?,
    };
    if json {
        return emit_json(
            out,
            &output::Oracle {
                commutes: outcome.commutes(),
                lo: range.lo().clone(),
                hi: range.hi().clone(),
                den,
                witness: outcome.witness().cloned(),
            },
        );
    }
    match outcome {
        OracleOutcome::NoCounterexample => writeln!(
            out,
            "no counterexample among k/{den} in [{}, {}]",
            range.lo(),
            range.hi()
        )?,
        OracleOutcome::Refuted(w) => writeln!(out, "counterexample: {w}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(max_num: u32, max_den: u32, half_width: u32, json: bool, out: &mut dyn Write) -> Outcome {
    let report = run_sweep_with(max_num, max_den, half_width);
    let to_pair = |p: &crate::sweep::PairCheck| output::SweepPair {
        s: p.s.clone(),
        t: p.t.clone(),
        case: p.verdict.case.to_string(),
    };
    let noncommuting = report.pairs.iter().filter(|p| !p.verdict.commutes).count();
    let witnesses = report.pairs.iter().filter(|p| p.witness.is_some()).count();
    let passed = report.passed() && witnesses == noncommuting;
    if json {
        emit_json(
            out,
            &output::Sweep {
                max_num,
                max_den,
                oracle_half_width: half_width,
                values: report.values.len(),
                pairs: report.pairs.len(),
                commuting: report.commuting().map(to_pair).collect(),
                witnesses,
                noncommuting,
                inconsistent: report.inconsistent().map(to_pair).collect(),
                exchange_symmetric: report.exchange_symmetric(),
                matches_families: report.matches_families(),
                passed,
            },
        )?;
    } else {
        writeln!(out, "grid: |num| <= {max_num}, den <= {max_den} ({} values)", report.values.len())?;
        writeln!(out, "pairs: {}", report.pairs.len())?;
        writeln!(out, "oracle: range [-{half_width}, {half_width}], D = 12*den(s)*den(t)")?;
        writeln!(out, "commuting pairs: {}", report.commuting().count())?;
        for p in report.commuting() {
            writeln!(out, "  ({}, {}) {}", p.s, p.t, p.verdict.case)?;
        }
        writeln!(out, "witnesses: {witnesses}/{noncommuting}")?;
        for p in report.inconsistent() {
            writeln!(out, "MISMATCH ({}, {}): {}", p.s, p.t, p.problems.join("; "))?;
        }
        writeln!(out, "exchange symmetric: {}", report.exchange_symmetric())?;
        let mark = if passed { "PASS" } else { "FAIL" };
        writeln!(out, "{mark}: commuting set = {{s=t}} u {{s=0}} u {{t=0}} u {{(1/m, 1/n)}}")?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_CONTRACT })
}
