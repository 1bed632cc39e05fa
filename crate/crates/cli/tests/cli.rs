//! End-to-end tests of the `saca` binary: exit codes, file formats, and the
//! dump rows.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn saca(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_saca"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

struct Sandbox {
    _dir: tempfile::TempDir,
    path: PathBuf,
}

fn sandbox() -> Sandbox {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_path_buf();
    Sandbox { _dir: dir, path }
}

#[test]
fn build_writes_external_indices() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"acedcebceece").unwrap();
    let out = saca(&["build", "in", "-o", "out.sa", "--format", "text"], &sb.path);
    assert_eq!(code(&out), 0);
    let written = std::fs::read_to_string(sb.path.join("out.sa")).unwrap();
    assert_eq!(written, "0\n6\n10\n4\n1\n7\n3\n11\n5\n9\n2\n8\n");
}

#[test]
fn raw32_is_little_endian_without_header() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"ba").unwrap();
    let out = saca(&["build", "in", "-o", "out.sa", "--format", "raw32"], &sb.path);
    assert_eq!(code(&out), 0);
    let bytes = std::fs::read(sb.path.join("out.sa")).unwrap();
    // suffixes of "ba": "a" (1) < "ba" (0)
    assert_eq!(bytes, vec![1, 0, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn empty_input_builds_empty_output() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"").unwrap();
    let out = saca(&["build", "in", "-o", "out.sa"], &sb.path);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(sb.path.join("out.sa")).unwrap(), Vec::<u8>::new());
    let out = saca(&["verify", "in", "out.sa"], &sb.path);
    assert_eq!(code(&out), 0);
}

#[test]
fn nul_bytes_fail_strict_but_pass_remap() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), [0x61u8, 0x00, 0x62]).unwrap();
    let out = saca(&["build", "in", "-o", "out.sa"], &sb.path);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NUL"));

    let out = saca(
        &["build", "in", "-o", "out.sa", "--sentinel-policy", "remap"],
        &sb.path,
    );
    assert_eq!(code(&out), 0);
    let out = saca(
        &["verify", "in", "out.sa", "--sentinel-policy", "remap"],
        &sb.path,
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_distinguishes_wrong_content_from_bad_files() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"abracadabra").unwrap();
    let out = saca(&["build", "in", "-o", "out.sa", "--format", "raw32"], &sb.path);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&saca(&["verify", "in", "out.sa"], &sb.path)), 0);

    // swap two entries: still a permutation, no longer sorted
    let mut bytes = std::fs::read(sb.path.join("out.sa")).unwrap();
    bytes.swap(0, 4);
    bytes.swap(1, 5);
    bytes.swap(2, 6);
    bytes.swap(3, 7);
    std::fs::write(sb.path.join("swapped.sa"), &bytes).unwrap();
    assert_eq!(code(&saca(&["verify", "in", "swapped.sa"], &sb.path)), 1);

    // truncated file: wrong entry count is a format error
    let bytes = std::fs::read(sb.path.join("out.sa")).unwrap();
    std::fs::write(sb.path.join("short.sa"), &bytes[..bytes.len() - 4]).unwrap();
    assert_eq!(
        code(&saca(&["verify", "in", "short.sa", "--format", "raw32"], &sb.path)),
        2
    );

    // missing input file
    assert_eq!(code(&saca(&["verify", "missing", "out.sa"], &sb.path)), 2);
}

#[test]
fn bench_reports_json_schema_and_capacity_independent_checksum() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"mississippimississippi").unwrap();
    let out = saca(&["bench", "in", "--iterations", "2", "--json"], &sb.path);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    for field in [
        "init_s",
        "phase1_s",
        "phase2_s",
        "total_s",
        "aux_bytes_per_char",
        "n",
        "groups",
        "sa_checksum",
    ] {
        assert!(report.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(report["n"], 23);

    let tight = saca(
        &["bench", "in", "--iterations", "1", "--json", "--queue-capacity", "1"],
        &sb.path,
    );
    let tight: serde_json::Value = serde_json::from_str(stdout(&tight).trim()).unwrap();
    assert_eq!(report["sa_checksum"], tight["sa_checksum"]);
}

#[test]
fn inspect_prints_structure_rows() {
    let sb = sandbox();
    std::fs::write(sb.path.join("in"), b"acedcebceece").unwrap();
    let out = saca(&["inspect", "in", "--dump", "pss"], &sb.path);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-1 0 1 1 0 4 0 6 7 7 6 10 -1\n");

    let out = saca(&["inspect", "in", "--dump", "nss"], &sb.path);
    assert_eq!(stdout(&out), "12 4 3 4 6 6 12 10 9 10 12 12 13\n");

    let out = saca(&["inspect", "in", "--dump", "grouping", "--oracle"], &sb.path);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("2 5 8 9 11\n"));
    assert!(text.trim_end().ends_with("diff: none"));
}

#[test]
fn gen_is_deterministic() {
    let sb = sandbox();
    let out = saca(
        &["gen", "fib.txt", "--kind", "fibonacci", "--size", "13"],
        &sb.path,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(sb.path.join("fib.txt")).unwrap(), b"abaababaabaab");

    saca(&["gen", "empty", "--kind", "random", "--size", "0"], &sb.path);
    assert_eq!(std::fs::read(sb.path.join("empty")).unwrap(), Vec::<u8>::new());

    for name in ["r1", "r2"] {
        let out = saca(
            &[
                "gen", name, "--kind", "random", "--size", "4096", "--sigma", "26", "--seed", "9",
            ],
            &sb.path,
        );
        assert_eq!(code(&out), 0);
    }
    assert_eq!(
        std::fs::read(sb.path.join("r1")).unwrap(),
        std::fs::read(sb.path.join("r2")).unwrap()
    );
}
