use std::io::Write;
use std::process::{Command, Output, Stdio};

use psi_core::io::to_graph6;
use psi_core::verify::{sweep, SweepConfig};
use psi_core::{
    alpha, complete, corona, is_greedoid, named_fixture, path, psi, FixtureId, TheoremId,
};
use serde_json::Value;

fn psi_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psi"))
        .args(args)
        .env_remove("PSI_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn psi_plain_lists_the_family_with_labels() {
    let out = psi_cmd(&["psi", "--fixture", "W"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.contains(&"{e,g}") && lines.contains(&"{d,g}"));
    assert!(!lines.contains(&"{d}") && !lines.contains(&"{g}"));
    let w = named_fixture(FixtureId::WFig1);
    let expected: Vec<String> = psi(&w).iter().map(|s| w.format_set(s)).collect();
    assert_eq!(lines[1..], expected[..]);
}

#[test]
fn psi_json_matches_library() {
    let out = psi_cmd(&["psi", "--fixture", "G2_FIG3", "--format", "json"]);
    let v = json(&out);
    let g = named_fixture(FixtureId::G2Fig3);
    let fam = psi(&g);
    assert_eq!(v["graph6"], to_graph6(&g));
    assert_eq!(v["alpha"], alpha(&g));
    assert_eq!(v["psi_size"], fam.len());
    let family: Vec<Vec<usize>> = fam.iter().map(|s| s.to_vec()).collect();
    assert_eq!(v["family"], serde_json::to_value(family).unwrap());
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = [
        "verify", "P2_ZYKOV", "--sweep", "9", "--count", "30", "--seed", "5", "--format", "json",
    ];
    assert_eq!(psi_cmd(&args).stdout, psi_cmd(&args).stdout);
}

#[test]
fn check_exit_codes() {
    let g4 = psi_cmd(&["check", "--fixture", "G4_FIG3"]);
    assert_eq!(g4.status.code(), Some(0));
    assert_eq!(stdout(&g4).trim(), "GREEDOID");

    let w = psi_cmd(&["check", "--fixture", "W", "--format", "json"]);
    assert_eq!(w.status.code(), Some(1));
    let fixture = named_fixture(FixtureId::WFig1);
    let fam = psi(&fixture);
    let expected = serde_json::to_value(is_greedoid(&fam).unwrap().report(&fam)).unwrap();
    assert_eq!(json(&w), expected);

    let bad = psi_cmd(&["check", "--graph6", "C"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("offset 1"), "{err}");
}

#[test]
fn chain_for_g2() {
    let out = psi_cmd(&["chain", "--fixture", "G2", "{a,b,c}"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{} < {a} < {a,b} < {a,b,c}");
    let not_member = psi_cmd(&["chain", "--fixture", "W", "{d}"]);
    assert_eq!(not_member.status.code(), Some(1));
    let bad_set = psi_cmd(&["chain", "--fixture", "W", "{q}"]);
    assert_eq!(bad_set.status.code(), Some(2));
}

#[test]
fn compose_corona_matches_library() {
    let out = psi_cmd(&[
        "compose",
        "corona",
        "path:2",
        "complete:1",
        "complete:1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let c = corona(&path(2), &[complete(1), complete(1)]).unwrap();
    assert_eq!(v["graph6"], to_graph6(c.graph()));
    assert_eq!(v["origins"], serde_json::to_value(c.origins()).unwrap());
    // The corona of P2 with two K1 is P4 up to relabeling.
    assert_eq!(c.graph().edge_count(), 3);
}

#[test]
fn compose_rejects_wrong_operand_count() {
    let out = psi_cmd(&["compose", "corona", "path:3", "complete:1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = psi_cmd(&["compose", "lex", "path:3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exhaustive_trees() {
    let out = psi_cmd(&["verify", "T2_TREE", "--sweep", "7", "--exhaustive"]);
    assert!(out.status.success());
    // 1 + 1 + 3 + 16 + 125 + 1296 + 16807 labeled trees.
    assert_eq!(stdout(&out).trim(), "T2_TREE: 18249 of 18249 hold");
}

#[test]
fn verify_sweep_matches_library() {
    let out = psi_cmd(&[
        "verify",
        "L3_CORONA",
        "--sweep",
        "10",
        "--count",
        "12",
        "--seed",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let cfg = SweepConfig {
        max_order: 10,
        count: 12,
        seed: 4,
        exhaustive: false,
    };
    let reports = sweep(TheoremId::L3CoronaI, &cfg).unwrap();
    let v = json(&out);
    assert_eq!(v["reports"], serde_json::to_value(&reports).unwrap());
    assert_eq!(v["total"], 48);
    assert_eq!(v["violations"], 0);
}

#[test]
fn verify_operands_and_fixtures() {
    let out = psi_cmd(&["verify", "P2_ZYKOV", "complete:2", "path:3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS P2_ZYKOV"));
    let fixtures = psi_cmd(&["verify", "T1_NT"]);
    assert!(fixtures.status.success());
    assert!(stdout(&fixtures).ends_with("T1_NT: 9 of 9 hold\n"));
    let not_tree = psi_cmd(&["verify", "T2_TREE", "cycle:5"]);
    assert_eq!(not_tree.status.code(), Some(2));
    let no_exhaustive = psi_cmd(&["verify", "P1_UNION", "--sweep", "5", "--exhaustive"]);
    assert_eq!(no_exhaustive.status.code(), Some(2));
}

#[test]
fn stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_psi"))
        .args(["psi", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"n 4\n0 1\n1 2\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["psi_size"], psi(&path(4)).len());

    let dir = std::env::temp_dir().join(format!("psi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.g6");
    std::fs::write(&file, "Bg\nD?@\n").unwrap();
    let out = psi_cmd(&["check", "--file", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("offset 2"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_emits_graph6() {
    let out = psi_cmd(&["gen", "graphs:4"]);
    assert_eq!(stdout(&out).lines().count(), 11);
    let out = psi_cmd(&["gen", "random:12:0.3", "--seed", "9"]);
    let g = psi_core::generators::random_graph(12, 0.3, 9);
    assert_eq!(stdout(&out).trim(), to_graph6(&g));
}

#[test]
fn thread_count_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_psi"))
        .args(["gen", "path:3"])
        .env("PSI_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_psi"))
        .args(["verify", "T1_NT", "--sweep", "8", "--count", "20"])
        .env("PSI_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}
