use std::path::PathBuf;
use std::process::{Command, Output};

fn arlex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arlex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = arlex(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str], code: i32) -> String {
    let out = arlex(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    String::from_utf8(out.stderr).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&ok(&v)).expect("valid json")
}

#[test]
fn construct() {
    let s = ok(&["construct", "-d", "3,4,4"]);
    assert!(s.trim().starts_with("(x1^3, "));
    assert!(s.trim().ends_with("x3^9)"));
    assert_eq!(s.matches(',').count(), 13);
    assert_eq!(ok(&["construct", "-d", "5"]).trim(), "(x1^5)");
    let v = json(&["construct", "-d", "3,4,4"]);
    assert_eq!(v["vars"], 3);
    assert_eq!(v["generators"].as_array().unwrap().len(), 14);
    assert!(fails(&["construct", "-d", "4,3"], 1).contains("degrees must be non-decreasing"));
    assert!(fails(&["construct", "-d", "1,2"], 1).contains("validation"));
    fails(&["construct", "-d", "x"], 1);
    fails(&["construct"], 1);
}

#[test]
fn hilbert() {
    assert_eq!(
        ok(&["hilbert", "-d", "4,5,7,8", "--upto", "10"]).trim(),
        "H: 1,4,10,20,34,51,70,89,105,116,120"
    );
    assert_eq!(
        ok(&["hilbert", "-d", "2", "--upto", "3"]).trim(),
        "H: 1,1,0,0"
    );
    let q = data("quintic.json");
    assert_eq!(
        ok(&["hilbert", "--ideal", &q, "--upto", "5"]).trim(),
        "H: 1,3,6,6,5,5"
    );
    let s = ok(&["hilbert", "-d", "4,5,7,8", "--deriv", "2"]);
    assert!(s.contains("c_1: 10") && s.contains("c_2: 6"), "{s}");
    let v = json(&["hilbert", "-d", "2,2,2", "--deriv", "1"]);
    assert!(v.is_object());
    fails(&["hilbert", "--ideal", "/nonexistent.json"], 1);
    fails(&["hilbert", "-d", "2,2", "--ideal", &q], 1);
}

#[test]
fn tangent() {
    for (d, dim, lex) in [("2,2,2", 36, 24), ("3,3,3", 147, 81), ("3,4,4", 286, 144)] {
        let v = json(&["tangent", "-d", d]);
        assert_eq!(
            (v["tangent_dim"].as_u64(), v["lex_dim"].as_u64()),
            (Some(dim), Some(lex)),
            "{d}"
        );
    }
    let s = ok(&["tangent", "-d", "2,2,2", "--audit"]);
    assert!(s.contains("audit: full reduction agrees"), "{s}");
    assert!(fails(&["tangent", "--ideal", &data("quintic.json")], 1).contains("not Artinian"));

    let dir = std::env::temp_dir().join(format!("arlex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("m").to_string_lossy().into_owned();
    ok(&["tangent", "-d", "2,2,2", "--out", &prefix]);
    let triplets = std::fs::read_to_string(format!("{prefix}.triplets")).unwrap();
    let columns = std::fs::read_to_string(format!("{prefix}.columns")).unwrap();
    assert_eq!(columns.lines().count(), 48);
    assert!(!triplets.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify() {
    assert_eq!(
        ok(&["classify", "-d", "5,5,5"]).trim(),
        "singular via sum-times-Hc1: 475 > 375"
    );
    let v = json(&["classify", "-d", "3,3,3", "--no-exact"]);
    assert_eq!(v["verdict"], "unknown");
    let v = json(&["classify", "-d", "3,3,3"]);
    assert_eq!(v["verdict"], "singular");
    assert_eq!(v["certificate"]["criterion"], "exact-tangent");
    assert_eq!(v["certificate"]["witness"]["lhs"], 147);
    assert!(fails(&["classify", "-d", "3,3"], 1).contains("Hilb_D^2 is irreducible and smooth"));
}

#[test]
fn verify() {
    let s = ok(&["verify", "-d", "3,4,4"]);
    assert!(!s.contains("FAIL"));
    let s = ok(&["verify", "-d", "2,2,2,2"]);
    assert!(s.contains("|B| = 12") && !s.contains("FAIL"), "{s}");
    let v = json(&["verify", "-d", "2,2,2"]);
    assert!(v.is_array() || v.is_object());
    fails(&["verify", "-d", "1,2"], 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tangent", "-d", "3,3,3", "--format", "json"][..],
        &["construct", "-d", "2,3,5"],
        &["classify", "-d", "4,4,4"],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn help_and_version() {
    assert!(ok(&["--help"]).contains("construct"));
    ok(&["--version"]);
    fails(&["bogus"], 1);
}
