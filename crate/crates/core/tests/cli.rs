//! End-to-end checks of the `dilfloor` binary: outputs, JSON shapes and
//! exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use dilated_floor::cli::output;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn dilfloor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dilfloor")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dilfloor(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> Vec<u8> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Parses a JSON line into `T` and checks re-serializing gives the same bytes.
fn roundtrip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let line = text.strip_suffix('\n').expect("newline-terminated");
    let value: T = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), line);
    value
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "2", "3", "--at", "1/2"]), "2\n");
    assert_eq!(stdout(&["eval", "3", "2", "--at", "1/2"]), "3\n");
    assert_eq!(stdout(&["eval", "0", "--at", "99"]), "0\n");
    assert_eq!(stdout(&["eval", "1/2", "--at", "3"]), "1\n");
    assert_eq!(stdout(&["eval", "1", "--at", "-1/2"]), "-1\n");
    assert_eq!(stdout(&["eval", "--at", "5/2", "--", "-1/3"]), "-1\n");
    let json = stdout(&["eval", "2", "3", "--at", "1/2", "--json"]);
    assert_eq!(json, "{\"value\":2}\n");
    roundtrip::<output::Value>(&json);
}

#[test]
fn levelset_examples() {
    assert_eq!(stdout(&["levelset", "2/3", "1", "--level", "1"]), "[2, inf)\n");
    assert_eq!(stdout(&["levelset", "1", "1", "--level", "5"]), "[5, inf)\n");
    assert_eq!(stdout(&["levelset", "--pair", "-1", "-1", "--level", "0"]), "(-1, inf)\n");
    assert_eq!(stdout(&["levelset", "--level", "0", "--", "1", "-1"]), "(-inf, 0]\n");
    assert_eq!(stdout(&["levelset", "--level", "0", "--", "-1", "1"]), "(-inf, 1)\n");
    assert_eq!(stdout(&["levelset", "0", "3", "--level", "1"]), "{}\n");
    assert_eq!(stdout(&["levelset", "0", "3", "--level", "-2"]), "R\n");
    let json = stdout(&["levelset", "2/3", "1", "--level", "1", "--json"]);
    assert_eq!(json, "{\"set\":\"[2, inf)\",\"kind\":\"upward\",\"endpoint\":\"2\",\"closed\":true}\n");
    roundtrip::<output::LevelSet>(&json);
    let json = stdout(&["levelset", "0", "3", "--level", "-2", "--json"]);
    roundtrip::<output::LevelSet>(&json);
}

#[test]
fn classify_examples() {
    let text = stdout(&["classify", "1/2", "1/3"]);
    assert_eq!(text, "pair: (1/2, 1/3)\ncommutes: true\ncase: UnitFractions(m=2, n=3)\n");
    let json = stdout(&["classify", "1/2", "1/3", "--json"]);
    assert_eq!(json, "{\"commutes\":true,\"case\":\"UnitFractions\",\"m\":2,\"n\":3}\n");
    roundtrip::<output::Classification>(&json);

    let text = stdout(&["classify", "2", "3"]);
    assert_eq!(
        text,
        "pair: (2, 3)\ncommutes: false\ncase: NonCommuting\nlevel: 1\nwitness: x=5/12 lhs=2 rhs=0\n"
    );
    let json = stdout(&["classify", "2", "3", "--json"]);
    assert_eq!(
        json,
        "{\"commutes\":false,\"case\":\"NonCommuting\",\"witness\":{\"x\":\"5/12\",\"lhs\":2,\"rhs\":0}}\n"
    );
    roundtrip::<output::Classification>(&json);

    let json = stdout(&["classify", "0", "7/5", "--json"]);
    assert_eq!(json, "{\"commutes\":true,\"case\":\"ZeroLeft\"}\n");
    let json = stdout(&["classify", "--json", "--pair", "-7/3", "-7/3"]);
    assert_eq!(json, "{\"commutes\":true,\"case\":\"Equal\"}\n");
}

#[test]
fn witness_examples() {
    assert_eq!(stdout(&["witness", "--", "-1/2", "-1/3"]), "x=-5/2 lhs=0 rhs=-1\n");
    assert_eq!(stdout(&["witness", "--pair", "1", "-1"]), "x=1/2 lhs=-1 rhs=0\n");
    let json = stdout(&["witness", "--json", "--", "-1/2", "-1/3"]);
    assert_eq!(json, "{\"x\":\"-5/2\",\"lhs\":0,\"rhs\":-1}\n");
    roundtrip::<dilated_floor::Witness>(&json);
}

#[test]
fn oracle_examples() {
    let text = stdout(&["oracle", "1/2", "1/3", "--range", "-10", "10", "--den", "60"]);
    assert_eq!(text, "no counterexample among k/60 in [-10, 10]\n");
    let text = stdout(&["oracle", "2", "3", "--range", "-2", "2", "--den", "6"]);
    assert_eq!(text, "counterexample: x=-5/3 lhs=-10 rhs=-12\n");
    let json = stdout(&["oracle", "2", "3", "--range", "-2", "2", "--den", "6", "--json"]);
    assert_eq!(
        json,
        "{\"commutes\":false,\"lo\":\"-2\",\"hi\":\"2\",\"den\":6,\"witness\":{\"x\":\"-5/3\",\"lhs\":-10,\"rhs\":-12}}\n"
    );
    roundtrip::<output::Oracle>(&json);

    let text = stdout(&["oracle", "1", "1", "--affine", "1/2", "1/3", "--range", "-2", "2", "--den", "12"]);
    assert_eq!(text, "counterexample: x=-3/2 lhs=-2 rhs=-1\n");
    let text = stdout(&["oracle", "2", "3", "--affine", "0", "0", "--range", "-2", "2", "--den", "6"]);
    assert_eq!(text, "counterexample: x=-5/3 lhs=-10 rhs=-12\n");
}

#[test]
fn raster_goldens() {
    let out = dilfloor(&["raster", "1/2", "0", "--range", "0", "3", "--format", "ascii"]);
    assert_eq!(out.stdout, golden("line_half_0_3.txt"));
    let out = dilfloor(&["raster", "1/2", "0", "--range", "0", "3", "--format", "pgm"]);
    assert_eq!(out.stdout, golden("line_half_0_3.pgm"));
    let out = dilfloor(&["raster", "1/2", "0", "--range", "0", "3", "--format", "svg"]);
    assert_eq!(out.stdout, golden("line_half_0_3.svg"));

    let json = stdout(&["raster", "1/2", "0", "--range", "0", "3", "--json"]);
    assert_eq!(
        json,
        "{\"alpha\":\"1/2\",\"gamma\":\"0\",\"pixels\":[{\"n\":0,\"y\":0},{\"n\":1,\"y\":0},{\"n\":2,\"y\":1},{\"n\":3,\"y\":1}]}\n"
    );
    roundtrip::<output::Raster>(&json);
}

#[test]
fn raster_to_file() {
    let dir = std::env::temp_dir().join(format!("dilfloor-raster-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("line.pgm");
    let out = dilfloor(&["raster", "1/2", "0", "--range", "0", "3", "--format", "pgm", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), golden("line_half_0_3.pgm"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn small_sweep_passes() {
    let text = stdout(&["sweep", "--max-num", "1", "--max-den", "3"]);
    assert!(text.starts_with("grid: |num| <= 1, den <= 3 (7 values)\npairs: 49\n"));
    assert!(text.contains("  (1/2, 1/3) UnitFractions(m=2, n=3)\n"));
    assert!(text.ends_with("PASS: commuting set = {s=t} u {s=0} u {t=0} u {(1/m, 1/n)}\n"));
    let json = stdout(&["sweep", "--max-num", "2", "--max-den", "2", "--json"]);
    let report: output::Sweep = roundtrip(&json);
    assert!(report.passed);
    assert_eq!(report.pairs, report.values * report.values);
}

#[test]
fn selftest_passes() {
    let text = stdout(&["selftest"]);
    assert!(!text.contains("FAIL"), "{text}");
    let json = stdout(&["selftest", "--json"]);
    let report: output::Selftest = roundtrip(&json);
    assert!(report.passed);
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["eval", "1/0", "--at", "1"][..],
        &["eval", "abc", "--at", "1"],
        &["eval", "--at", "1"],
        &["classify", "1/2"],
        &["classify", "-1/2", "-1/3"],
        &["classify", "1.5", "2"],
        &["levelset", "1", "1"],
        &["raster", "1/2", "0", "--range", "0", "3", "--format", "png"],
        &["sweep", "--max-num", "0"],
        &["frobnicate"],
    ] {
        let out = dilfloor(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn contract_violations_exit_1() {
    for args in [
        &["witness", "1/2", "1/3"][..],
        &["witness", "0", "5"],
        &["raster", "1", "0", "--range", "3", "2"],
        &["oracle", "1", "2", "--den", "0"],
        &["oracle", "1", "2", "--range", "1", "0"],
    ] {
        let out = dilfloor(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    let out = dilfloor(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("sweep"));
    let out = dilfloor(&["sweep", "--help"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("12 * den(s) * den(t)"));
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dilated_floor::cli::run(["dilfloor", "witness", "--", "-1/2", "-1/3"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, b"x=-5/2 lhs=0 rhs=-1\n");
}
