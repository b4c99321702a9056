use std::io::Write;
use std::process::{Command, Output};

fn linfty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linfty")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_json(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("linfty-cli-{}-{name}.json", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn jacobi_on_bundled_fixture() {
    let o = linfty(&["check-jacobi", "--algebra", "heisenberg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nilpotency index 3"));
}

#[test]
fn jacobi_failure_exits_one() {
    let body = r#"{"name":"bad","generators":[
        {"symbol":"a","degree":0},{"symbol":"b","degree":0},{"symbol":"c","degree":0},
        {"symbol":"d","degree":0},{"symbol":"e","degree":0},{"symbol":"f","degree":0}],
      "brackets":[
        {"args":["a","b"],"value":[{"symbol":"d","coeff":"1"}]},
        {"args":["b","c"],"value":[{"symbol":"e","coeff":"1"}]},
        {"args":["a","e"],"value":[{"symbol":"f","coeff":"1"}]},
        {"args":["d","c"],"value":[{"symbol":"f","coeff":"-1"}]}]}"#;
    let path = temp_json("bad", body);
    let o = linfty(&["check-jacobi", "--algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn unknown_algebra_is_a_usage_error() {
    let o = linfty(&["check-jacobi", "--algebra", "no-such-algebra"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn contraction_and_gauge_pass() {
    assert_eq!(linfty(&["verify-contraction", "--n", "2", "--max-degree", "3"]).status.code(), Some(0));
    assert_eq!(linfty(&["verify-gauge", "--n", "2", "--max-degree", "3"]).status.code(), Some(0));
}

#[test]
fn sampled_horn_is_filled_thinly() {
    let o = linfty(&["fill-horn", "--algebra", "linfty3", "--n", "2", "--missing", "1", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("thin: true") && out.contains("faces match: true"));
}

#[test]
fn second_series_from_files() {
    let inputs = temp_json(
        "inputs",
        r#"[{"slot":[1],"value":[{"symbol":"x1","coeff":"1"}]},
            {"slot":[2],"value":[{"symbol":"x2","coeff":"1"}]}]"#,
    );
    let o = linfty(&["bch", "--algebra", "free3", "--n", "2", "--inputs", inputs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-x1 + x2 - 1/2*[x1,x2] + 1/12*[x1,[x1,x2]] + 1/12*[x2,[x1,x2]]");
}

#[test]
fn bad_input_slot_is_a_usage_error() {
    let inputs = temp_json("slot0", r#"[{"slot":[0,1],"value":[{"symbol":"x1","coeff":"1"}]}]"#);
    let o = linfty(&["bch", "--algebra", "free3", "--n", "2", "--inputs", inputs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compose_and_monodromy_agree_with_matrices() {
    let o = linfty(&["compose-table", "--algebra", "heisenberg", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matrix group law: true"));
    assert_eq!(linfty(&["verify-monodromy", "--rep", "heisenberg", "--samples", "5"]).status.code(), Some(0));
}

#[test]
fn dold_kan_on_abelian_fixture() {
    let o = linfty(&["dold-kan", "--algebra", "abelian_delta", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("integration bijective: true"));
}

#[test]
fn run_all_selection() {
    let o = linfty(&["run-all", "--only", "1", "nerve"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("criterion  1 contraction") && out.contains("criterion 13 nerve"));
    assert_eq!(linfty(&["run-all", "--only", "rho2-series"]).status.code(), Some(1));
    assert_eq!(linfty(&["run-all", "--only", "bogus"]).status.code(), Some(2));
}
