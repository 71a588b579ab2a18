use std::process::{Command, Output};

fn stablerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablerep"))
        .args(args)
        .env_remove("STABLEREP_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rectangular_decomposition() {
    let o = stablerep(&["decompose", "--p", "7", "--nu", "2,2,2", "--l", "3", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("stably irreducible: yes"), "{text}");
    assert!(text.contains("case: rectangular"), "{text}");
    assert!(text.contains("AGREE"), "{text}");
}

#[test]
fn projective_boundary_in_json() {
    let o = stablerep(&["--format", "json", "decompose", "--p", "7", "--nu", "6", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["projective"], true);
    assert_eq!(v["result"]["decomposition"]["terms"].as_array().unwrap().len(), 0);
    assert!(v["oracle"].is_null());
}

#[test]
fn symmetric_square() {
    let o = stablerep(&["decompose", "--p", "5", "--nu", "1", "--l", "2"]);
    assert!(stdout(&o).contains("decomposition: Sym^2 E\n"));
}

#[test]
fn twisted_decomposition_with_oracle() {
    let o = stablerep(&["decompose", "--p", "5", "--nu", "2,1", "--l", "1", "--omega", "3", "--oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("AGREE"));
}

#[test]
fn tensor_identity_and_example() {
    let o = stablerep(&["tensor", "--p", "7", "--a", "0,0", "--b", "4,5"]);
    assert_eq!(stdout(&o), "k ⊗ Ω^5(Sym^4 E) = Ω^5(Sym^4 E)\n");
    let o = stablerep(&["tensor", "--p", "7", "--a", "2,2", "--b", "3,1"]);
    assert_eq!(stdout(&o), "Ω^2(Sym^2 E) ⊗ Ω(Sym^3 E) = Ω^3 E ⊕ Ω^3(Sym^3 E) ⊕ Ω^3(Sym^5 E)\n");
}

#[test]
fn tables_at_seven() {
    let o = stablerep(&["tables", "--p", "7"]);
    let text = stdout(&o);
    assert!(text.starts_with("Table 1 (p = 7)\n"));
    assert!(text.contains("5   | Ω^5 k | Ω^5(Sym^2 E) | Ω^5(Sym^4 E)"), "{text}");
    assert!(text.contains("0   | Sym^5 E      | Sym^3 E      | E"), "{text}");
    let o = stablerep(&["--format", "json", "tables", "--p", "7"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["tables"][1]["cells"][3][2], "Ω^3 E");
}

#[test]
fn classify_reports_agreement() {
    let o = stablerep(&["classify", "--p", "11", "--nu", "3,2", "--l", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("AGREE"));
}

#[test]
fn scan_is_reproducible() {
    let a = stablerep(&["--format", "json", "scan", "--p", "7", "--omega", "1"]);
    let b = stablerep(&["--format", "json", "scan", "--p", "7", "--omega", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 30 * 6);
}

#[test]
fn verify_single_check_at_thirteen() {
    let o = stablerep(&["verify", "--theorems", "projective", "--p-list", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS projective"));
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["--format", "json", "--seed", "3", "verify", "--p-list", "3,5", "--samples", "100"];
    let a = stablerep(&args);
    let b = stablerep(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--p-list", "4"][..],
        &["decompose", "--p", "9", "--nu", "1", "--l", "0"],
        &["decompose", "--p", "7", "--nu", "1,2", "--l", "0"],
        &["decompose", "--p", "7", "--nu", "1", "--l", "6"],
        &["decompose", "--p", "7", "--nu", "4,3", "--l", "0"],
        &["decompose", "--p", "17", "--nu", "1", "--l", "0", "--oracle"],
        &["tensor", "--p", "7", "--a", "2", "--b", "0,0"],
        &["verify", "--theorems", "nonsense"],
        &["frobnicate"],
    ] {
        assert_eq!(stablerep(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dimension_guard_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_stablerep"))
        .args(["decompose", "--p", "7", "--nu", "3", "--l", "5", "--oracle"])
        .env("STABLEREP_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle"));
}
