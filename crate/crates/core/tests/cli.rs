use std::io::Write;
use std::process::{Command, Output, Stdio};

use qpair::frobenius::FrobeniusSymbol;
use qpair::hypergeometric::{series_r_tilde, SeriesParams};
use qpair::overpartition::count_b;
use qpair::paths::LatticePath;
use serde_json::Value;

fn qpair(args: &[&str]) -> Output {
    run(args, None, &[])
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qpair"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(o)).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn series_constant_term_and_determinism() {
    let v = json(&qpair(&["series", "R", "--k", "2", "--i", "2", "--cutoff", "8"]));
    let first = &v["terms"][0];
    assert_eq!(
        (&first["a"], &first["b"], &first["x"], &first["q"], &first["re"]),
        (&0.into(), &0.into(), &0.into(), &0.into(), &1.into())
    );
    let a = qpair(&["series", "R", "--k", "2", "--i", "1", "--cutoff", "8"]);
    let b = qpair(&["series", "R", "--k", "2", "--i", "1", "--cutoff", "8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn series_matches_library() {
    let out = qpair(&["series", "Rtilde", "--k", "3", "--i", "2", "--cutoff", "10"]);
    let lib = series_r_tilde(&SeriesParams::new(3, 2, 10)).unwrap();
    assert_eq!(stdout(&out).trim(), lib.to_json());
}

#[test]
fn series_specialization_and_bad_params() {
    let args = "series bilateral-R --k 2 --i 2 --cutoff 9 --a 1 --b q^-1 --q-power 2 --format csv";
    let out = qpair(&args.split(' ').collect::<Vec<_>>());
    let rows: Vec<String> = stdout(&out).lines().skip(1).take(4).map(str::to_string).collect();
    assert_eq!(rows, ["0,0,0,0,1,0", "0,0,0,1,2,0", "0,0,0,2,4,0", "0,0,0,3,6,0"]);
    let bad = qpair(&["series", "R", "--k", "1", "--i", "1"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("k must be at least 2"));
    assert_eq!(code(&qpair(&["series", "R", "--k", "2", "--i", "1", "--a", "2q"])), 2);
}

#[test]
fn enumerate_tables_and_bounds() {
    let v = json(&qpair(&["enumerate", "B", "--k", "2", "--i", "2", "--n", "0"]));
    assert_eq!(v["entries"], serde_json::json!([{"s": 0, "t": 0, "n": 0, "re": "1", "im": "0"}]));
    let over = qpair(&["enumerate", "E", "--k", "5", "--i", "3", "--n", "115"]);
    assert_eq!(code(&over), 3);
    assert!(String::from_utf8_lossy(&over.stderr).contains("bound 24"));
    let csv = stdout(&qpair(&["enumerate", "C", "--k", "2", "--i", "2", "--n", "6", "--format", "csv"]));
    assert_eq!(csv, count_b(2, 2, 6, 18).unwrap().to_csv());
}

#[test]
fn listings_match_goldens() {
    for n in 0..=3 {
        let cases = [
            (vec!["enumerate", "pairs", "--as", "objects"], format!("pairs_n{n}.json")),
            (vec!["enumerate", "symbols", "--as", "objects"], format!("symbols_n{n}.json")),
            (vec!["enumerate", "paths", "--k", "2", "--i", "2", "--as", "objects"], format!("paths_k2_i2_n{n}.json")),
        ];
        for (mut args, file) in cases {
            let ns = n.to_string();
            args.extend(["--n", &ns]);
            let got = json(&qpair(&args));
            let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
            let want: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
            assert_eq!(got, want, "{file}");
        }
    }
    let pairs = json(&qpair(&["enumerate", "pairs", "--n", "3", "--as", "objects"]));
    assert_eq!(pairs.as_array().unwrap().len(), 32);
}

const FIGURE3: &str = "2: SE SE NE NE SW SE NE NE NE S NE NE SE SE SE NE SE NE NE S SE SE E NE NE SW NE SE NE NE S SE SE; ab a 1 1 b ab 1 b";

#[test]
fn biject_worked_examples() {
    let path = LatticePath::parse_compact(FIGURE3).unwrap();
    let out = run(&["biject", "path-to-symbol", "--k", "5", "--i", "3"], Some(&path.to_json()), &[]);
    let f: FrobeniusSymbol = serde_json::from_value(json(&out)).unwrap();
    assert_eq!(f.to_string(), "(14,12',12,8,7',4',3',2)/(9',8',8,7',5',4',3,1)");

    let back = run(&["biject", "symbol-to-path", "--k", "5", "--i", "3"], Some(&f.to_json()), &[]);
    let p: LatticePath = serde_json::from_value(json(&back)).unwrap();
    assert_eq!(p, path);

    let pi: FrobeniusSymbol = "12,12,8',7,6,3',2,1'/14,12,10',8',6,5,3',2".parse().unwrap();
    let out = run(&["biject", "k-conjugate", "--k", "4"], Some(&pi.to_json()), &[]);
    let image: FrobeniusSymbol = serde_json::from_value(json(&out)).unwrap();
    assert_eq!(image.to_string(), "(11,9,7',7,6,3',2,1')/(15,15,11',8',6,5,3',2)");
}

#[test]
fn biject_joichi_stanton_and_errors() {
    let row = r#"[{"size":12,"over":false},{"size":12,"over":false},{"size":8,"over":true},{"size":7,"over":false},{"size":6,"over":false},{"size":3,"over":true},{"size":2,"over":false},{"size":1,"over":true}]"#;
    let split = json(&run(&["biject", "joichi-stanton"], Some(row), &[]));
    assert_eq!(split["associated"], serde_json::json!([9, 9, 6, 5, 4, 2, 1, 1]));
    assert_eq!(split["marks"], serde_json::json!([7, 5, 2]));
    let back = json(&run(&["biject", "js-inverse"], Some(&split.to_string()), &[]));
    assert_eq!(back, serde_json::from_str::<Value>(row).unwrap());

    let path = LatticePath::parse_compact(FIGURE3).unwrap();
    let wrong = run(&["biject", "path-to-symbol", "--k", "5", "--i", "2"], Some(&path.to_json()), &[]);
    assert_eq!(code(&wrong), 2);
    assert!(String::from_utf8_lossy(&wrong.stderr).contains("odd (5,2)-conditions"));
    assert_eq!(code(&run(&["biject", "k-conjugate", "--k", "4"], Some("{\"top\": []}"), &[])), 2);
}

#[test]
fn verify_passes_and_reports() {
    let out = qpair(&["verify", "thm3-chain", "--k", "2,3", "--n-max", "10"]);
    assert_eq!(code(&out), 0);
    let rep: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep["suite"], "thm3-chain");
    assert_eq!(rep["checks_run"], 15);
    assert_eq!(rep["failures"], serde_json::json!([]));
    assert_eq!(code(&qpair(&["verify", "jtp", "--cutoff", "20"])), 0);
}

#[test]
fn verify_detects_a_corrupted_rank_window() {
    let out = qpair(&["verify", "thm3-chain", "--k", "2", "--n-max", "6", "--fault", "rank-window"]);
    assert_eq!(code(&out), 1);
    let rep: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let first = &rep["failures"][0];
    assert_eq!(first["identity"], "B pairs = C rank-bounded symbols");
    assert_eq!(first["coordinates"], "s,t,n");
}

#[test]
fn verify_usage_errors_and_config_precedence() {
    assert_eq!(code(&qpair(&["verify", "thm5"])), 2);
    assert_eq!(code(&qpair(&["verify", "jtp", "--fault", "everything"])), 2);
    let from_env = json(&run(&["verify", "q-gauss"], None, &[("QPAIR_CUTOFF", "7")]));
    assert_eq!(from_env["params"]["cutoff"], 7);
    let flag = json(&run(&["verify", "q-gauss", "--cutoff", "6"], None, &[("QPAIR_CUTOFF", "7")]));
    assert_eq!(flag["params"]["cutoff"], 6);
}

#[test]
fn export_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = qpair(&["export", "--dir", dir.path().to_str().unwrap(), "--k", "2", "--cutoff", "6", "--n-max", "4"]);
    assert!(out.status.success());
    let manifest: Vec<String> =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest.len(), 2 * 10);
    for name in &manifest {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let b = std::fs::read_to_string(dir.path().join("B_k2_i2.csv")).unwrap();
    assert_eq!(b, count_b(2, 2, 4, 18).unwrap().to_csv());
}
