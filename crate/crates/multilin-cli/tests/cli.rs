//! End-to-end tests of the command-line surface: schemas, exit codes,
//! canonical output.

use std::path::Path;
use std::process::{Command, Output};

use multilin::{DenseMatrix, Rational, SymMatrix};
use multilin_cli::json;

fn multilin_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multilin"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    multilin_bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write fixture");
    name.to_string()
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn sym_2x2(values: [[i64; 2]; 2]) -> SymMatrix {
    let dense = DenseMatrix::from_rows(
        values
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect(),
    )
    .unwrap();
    SymMatrix::from_dense(2, 2, 1, 1, &dense).unwrap()
}

#[test]
fn odot_produces_the_expected_grid() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_matrix_to_json(&sym_2x2([[1, 2], [3, 4]])),
    );
    let b = write(
        dir.path(),
        "b.json",
        &json::sym_matrix_to_json(&sym_2x2([[5, 6], [7, 8]])),
    );
    let out = run(&["odot", &a, &b], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let parsed = json::parse_sym_matrix(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let expected = sym_2x2([[1, 2], [3, 4]])
        .odot(&sym_2x2([[5, 6], [7, 8]]))
        .unwrap();
    assert_eq!(parsed, expected);
    assert_eq!(parsed.entry_at_rank(0, 0), &q(10));
}

#[test]
fn odot_writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_matrix_to_json(&sym_2x2([[1, 0], [0, 1]])),
    );
    let out = run(&["odot", &a, &a, "--out", "c.json"], dir.path());
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("c.json")).unwrap();
    assert!(json::parse_sym_matrix(&text).is_ok());
}

#[test]
fn schema_violation_exits_2_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{
            "entries": [{"col": [1, 0], "row": [1, 1], "value": "1"}],
            "kind": "sym", "n": 2, "n_prime": 2, "p": 1, "p_prime": 1
        }"#,
    );
    let good = write(
        dir.path(),
        "good.json",
        &json::sym_matrix_to_json(&sym_2x2([[1, 0], [0, 1]])),
    );
    let out = run(&["odot", &bad, &good], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("entries[0].row"), "stderr: {stderr}");
}

#[test]
fn dimension_mismatch_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_matrix_to_json(&sym_2x2([[1, 0], [0, 1]])),
    );
    let three = SymMatrix::identity(3);
    let b = write(dir.path(), "b.json", &json::sym_matrix_to_json(&three));
    let out = run(&["odot", &a, &b], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weight_cap_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_matrix_to_json(&sym_2x2([[1, 2], [0, 1]])),
    );
    let out = run(&["sym-power", &a, "--k", "9"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("max-weight") || stderr.contains("MULTILIN_MAX_WEIGHT"));
    // Raising the cap lets the same computation through.
    let out = run(
        &["sym-power", &a, "--k", "9", "--max-weight", "9"],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    // The environment variable works as the default cap.
    let out = multilin_bin()
        .args(["sym-power", &a, "--k", "9"])
        .env("MULTILIN_MAX_WEIGHT", "10")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn compose_matches_substitution() {
    let dir = tempfile::tempdir().unwrap();
    // One-dimensional x^2 and y + 1 as block files.
    let square = r#"{
        "blocks": [
            {"entries": [], "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 0},
            {"entries": [], "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 1},
            {"entries": [{"col": [2], "row": [1], "value": "2"}],
             "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 2}
        ],
        "n_in": 1, "n_out": 1
    }"#;
    let shift = r#"{
        "blocks": [
            {"entries": [{"col": [0], "row": [1], "value": "1"}],
             "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 0},
            {"entries": [{"col": [1], "row": [1], "value": "1"}],
             "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 1}
        ],
        "n_in": 1, "n_out": 1
    }"#;
    let phi = write(dir.path(), "phi.json", square);
    let psi = write(dir.path(), "psi.json", shift);
    let out = run(&["compose", &phi, &psi], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let composed = json::parse_polymap(&String::from_utf8(out.stdout).unwrap()).unwrap();
    // (y + 1)^2 = y^2 + 2y + 1 at a few sample points.
    for y in [-2i64, 0, 1, 5] {
        let v = composed.eval(&[q(y)]).unwrap();
        assert_eq!(v, vec![q((y + 1) * (y + 1))]);
    }
}

#[test]
fn wedge_and_wedge_power_cover_the_alt_family() {
    let dir = tempfile::tempdir().unwrap();
    let dense = DenseMatrix::from_rows(vec![
        vec![q(2), q(0), q(0)],
        vec![q(0), q(3), q(0)],
        vec![q(0), q(0), q(5)],
    ])
    .unwrap();
    let alt = multilin::AltMatrix::from_dense(3, 3, 1, 1, &dense).unwrap();
    let a = write(dir.path(), "a.json", &json::alt_matrix_to_json(&alt));

    let out = run(&["wedge-power", &a, "--k", "2"], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let compound = json::parse_alt_matrix(&String::from_utf8(out.stdout).unwrap()).unwrap();
    // Second compound of diag(2,3,5): the 2x2 minors 6, 10, 15.
    let expected = alt.compound(2).unwrap();
    assert_eq!(compound, expected);
    assert_eq!(compound.entry_at_rank(0, 0), &q(6));
    assert_eq!(compound.entry_at_rank(1, 1), &q(10));
    assert_eq!(compound.entry_at_rank(2, 2), &q(15));

    let out = run(&["wedge", &a, &a], dir.path());
    assert!(out.status.success());
    let wedged = json::parse_alt_matrix(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(wedged, alt.wedge(&alt).unwrap());
}

#[test]
fn change_vars_rewrites_the_map() {
    let dir = tempfile::tempdir().unwrap();
    // x^2 under the input shift x = x' + 1, output unchanged.
    let square = multilin::PolyMap::from_blocks(
        1,
        1,
        vec![
            multilin::SymMatrix::zeros(1, 1, 1, 0),
            multilin::SymMatrix::zeros(1, 1, 1, 1),
            multilin::SymMatrix::from_dense(
                1,
                1,
                1,
                2,
                &DenseMatrix::from_entries(1, 1, vec![q(2)]).unwrap(),
            )
            .unwrap(),
        ],
    )
    .unwrap();
    let shift = multilin::PolyMap::from_blocks(
        1,
        1,
        vec![
            multilin::SymMatrix::from_dense(
                1,
                1,
                1,
                0,
                &DenseMatrix::from_entries(1, 1, vec![q(1)]).unwrap(),
            )
            .unwrap(),
            multilin::SymMatrix::from_dense(1, 1, 1, 1, &DenseMatrix::identity(1)).unwrap(),
        ],
    )
    .unwrap();
    let identity = multilin::PolyMap::identity(1);
    let m = write(dir.path(), "m.json", &json::polymap_to_json(&square));
    let s = write(dir.path(), "s.json", &json::polymap_to_json(&identity));
    let t_inv = write(dir.path(), "t.json", &json::polymap_to_json(&shift));
    let out = run(&["change-vars", &m, &s, &t_inv], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let changed = json::parse_polymap(&String::from_utf8(out.stdout).unwrap()).unwrap();
    for x in [-1i64, 0, 2, 4] {
        assert_eq!(changed.eval(&[q(x)]).unwrap(), vec![q((x + 1) * (x + 1))]);
    }
}

#[test]
fn norm_prints_a_decimal() {
    let dir = tempfile::tempdir().unwrap();
    let ones = multilin::AltMatrix::from_fn(2, 2, 1, 1, |_, _| q(1));
    let a = write(dir.path(), "a.json", &json::alt_matrix_to_json(&ones));
    let out = run(&["norm", &a, "--rho", "2"], dir.path());
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    let out = run(&["norm", &a, "--rho", "0.5"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mlprod_sym_emits_the_product_map() {
    let dir = tempfile::tempdir().unwrap();
    let scalar = |v: i64| {
        let dense = DenseMatrix::from_entries(1, 1, vec![q(v)]).unwrap();
        let matrix = SymMatrix::from_dense(1, 1, 1, 1, &dense).unwrap();
        multilin::SymMultiMap::from_matrix(matrix).unwrap()
    };
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_multimap_to_json(&scalar(3)),
    );
    let b = write(
        dir.path(),
        "b.json",
        &json::sym_multimap_to_json(&scalar(5)),
    );
    let c_map = multilin::BilinearMap::from_coefficients(1, 1, 1, &[q(1)]).unwrap();
    let c = write(dir.path(), "c.json", &json::bilinear_to_json(&c_map));
    let out = run(&["mlprod", "--kind", "sym", &a, &b, &c], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let product = json::parse_sym_multimap(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(product.arity(), 2);
    assert_eq!(
        product.eval(&[&[q(2)], &[q(7)]]).unwrap(),
        vec![q(3 * 5 * 2 * 7)]
    );
}

#[test]
fn emitted_json_reparses_to_equal_values() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &json::sym_matrix_to_json(&sym_2x2([[2, -1], [7, 3]])),
    );
    let b = write(
        dir.path(),
        "b.json",
        &json::sym_matrix_to_json(&sym_2x2([[0, 4], [1, -5]])),
    );
    let first = run(&["odot", &a, &b], dir.path());
    let text = String::from_utf8(first.stdout).unwrap();
    // Reserializing the parsed value reproduces the bytes.
    let parsed = json::parse_sym_matrix(&text).unwrap();
    assert_eq!(json::sym_matrix_to_json(&parsed), text);
}

#[test]
fn verify_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(&["verify", "--seed", "11"], dir.path());
    let second = run(&["verify", "--seed", "11"], dir.path());
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let report = String::from_utf8(first.stdout).unwrap();
    assert!(report.starts_with("seed: 11\n"));
    assert!(report.trim_end().ends_with("status: ok"));
    let other = run(&["verify", "--seed", "12"], dir.path());
    assert!(other.status.success());
}
