//! End-to-end checks of the command-line interface: exit codes, JSON output,
//! and byte-level determinism of census reports across parallelism levels.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fixitylab"))
}

fn write_group(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fixitylab-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const WITNESS: &str = "degree 6\n(1,2,3)\n(2,5,3,6)(1,4)\n";
const D8_ON_4: &str = "degree 4\n(1,2,3,4)\n(1,3)\n";
const A5_ON_5: &str = "degree 5\n(1,2,3,4,5)\n(1,2,3)\n";
const C6_REGULAR: &str = "degree 6\n(1,2,3,4,5,6)\n";

#[test]
fn fixity_command_prints_the_profile() {
    let dir = temp_dir("fixity");
    let file = write_group(&dir, "witness.grp", WITNESS);
    let out = bin().arg("fixity").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("fixity 3"), "got: {stdout}");

    let file = write_group(&dir, "c6.grp", C6_REGULAR);
    let out = bin().arg("fixity").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("fixity 0"));
}

#[test]
fn fixity_command_exit_codes() {
    let dir = temp_dir("fixity-errors");
    let bad = write_group(&dir, "bad.grp", "degree 6\n(1,2,99)\n");
    let out = bin().arg("fixity").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "parse errors exit 2");

    let big = write_group(
        &dir,
        "big.grp",
        "degree 12\n(1,2)\n(1,2,3,4,5,6,7,8,9,10,11,12)\n",
    );
    let out = bin().arg("fixity").arg(&big).output().unwrap();
    assert_eq!(out.status.code(), Some(3), "group too large exits 3");
}

#[test]
fn classify_command_handles_the_three_outcomes() {
    let dir = temp_dir("classify");
    let witness = write_group(&dir, "witness.grp", WITNESS);
    let out = bin()
        .args(["classify", "--theorem", "3", "--json"])
        .arg(&witness)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["theorem"], "FIXITY3");
    assert_eq!(json["cases"][0], "Case3_Exceptional");
    assert_eq!(json["diagnostics"]["order"], 36);

    let d8 = write_group(&dir, "d8.grp", D8_ON_4);
    let out = bin()
        .args(["classify", "--theorem", "2", "--json"])
        .arg(&d8)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["cases"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!("Case1_RegularNormal")));

    let a5 = write_group(&dir, "a5.grp", A5_ON_5);
    let out = bin()
        .args(["classify", "--theorem", "2"])
        .arg(&a5)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "insoluble input exits 1");
}

#[test]
fn lemma_command_reports_statuses() {
    let dir = temp_dir("lemma");
    let witness = write_group(&dir, "witness.grp", WITNESS);
    let out = bin().arg("lemma").arg(&witness).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("HOLDS   normaliser-bounds"), "got: {stdout}");
    assert!(stdout.contains("minimal-normal-dichotomy"));
}

#[test]
fn enumerate_command_writes_datasets() {
    let dir = temp_dir("enumerate");
    let out_path = dir.join("transitive_6.tsv");
    let out = bin()
        .args(["enumerate", "--degree", "6", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().count(), 16);

    let out = bin().args(["enumerate", "--degree", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "degree out of range exits 2");
}

#[test]
fn census_command_is_deterministic_across_jobs() {
    let dir = temp_dir("census");
    let run = |jobs: &str, path: &Path| {
        let out = bin()
            .args(["census", "--degrees", "2..6", "--fixity", "2", "--jobs", jobs, "--json"])
            .arg(path)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(path).unwrap()
    };
    let one = run("1", &dir.join("jobs1.json"));
    let eight = run("8", &dir.join("jobs8.json"));
    assert_eq!(one, eight, "census bytes must not depend on parallelism");
    let json: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(json["summary"]["violations"], 0);
}

#[test]
fn degree_eighteen_inputs_are_accepted() {
    let dir = temp_dir("deg18");
    // D36 on 18 points: fixity 2, soluble, transitive
    let d36 = write_group(
        &dir,
        "d36.grp",
        "degree 18\n(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18)\n(2,18)(3,17)(4,16)(5,15)(6,14)(7,13)(8,12)(9,11)\n",
    );
    let out = bin().arg("fixity").arg(&d36).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("fixity 2"));

    let out = bin()
        .args(["classify", "--theorem", "2", "--json"])
        .arg(&d36)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["cases"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!("Case1_RegularNormal")));
}

#[test]
fn census_command_uses_data_dir_for_high_degrees() {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let out = bin()
        .args(["census", "--degrees", "8..8", "--fixity", "2", "--data"])
        .arg(&data)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let missing = temp_dir("census-missing");
    let out = bin()
        .args(["census", "--degrees", "8..8", "--fixity", "2", "--data"])
        .arg(&missing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "missing dataset exits 2");
}
