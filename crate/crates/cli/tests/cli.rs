use std::fs;
use std::path::{Path, PathBuf};

use cihom::corpus::{self, CorpusFile};
use cihom::files::{load_ring, to_canonical_json, ModuleFile, RingFile};
use serde_json::{json, Value};

fn corpus_dir() -> PathBuf {
    corpus::default_dir()
}

fn module(name: &str) -> String {
    corpus_dir().join("modules").join(format!("{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> cihom::Output {
    cihom::run(std::iter::once("cihom").chain(args.iter().copied()))
}

fn run_json(args: &[&str]) -> Value {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let out = run(&argv);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    out.sort();
    out
}

#[test]
fn ring_files_roundtrip() {
    let mut paths = json_files(&corpus_dir().join("rings"));
    paths.push(corpus_dir().join("slow/exext.json"));
    assert_eq!(paths.len(), 5);
    for path in paths {
        let text = fs::read_to_string(&path).unwrap();
        let file: RingFile = serde_json::from_str(&text).unwrap();
        let ring = file.build().unwrap();
        let again = RingFile::of(&ring);
        let text2 = to_canonical_json(&again);
        let back: RingFile = serde_json::from_str(&text2).unwrap();
        assert_eq!(back, again, "{}", path.display());
        assert_eq!(to_canonical_json(&RingFile::of(&back.build().unwrap())), text2, "{}", path.display());
    }
}

#[test]
fn module_files_roundtrip() {
    let dir = corpus_dir();
    for (name, path) in corpus::modules(&dir).unwrap() {
        let text = fs::read_to_string(&path).unwrap();
        let file: ModuleFile = serde_json::from_str(&text).unwrap();
        let ring = load_ring(&path.parent().unwrap().join(file.ring.as_ref().unwrap())).unwrap();
        let m = file.build(ring.clone()).unwrap();
        let again = ModuleFile::of(&m, file.ring.clone());
        let text2 = to_canonical_json(&again);
        let back: ModuleFile = serde_json::from_str(&text2).unwrap();
        assert_eq!(back, again, "{name}");
        let m2 = back.build(ring).unwrap();
        assert_eq!(m2.gens(), m.gens(), "{name}");
        assert_eq!(to_canonical_json(&ModuleFile::of(&m2, file.ring.clone())), text2, "{name}");
    }
}

#[test]
fn corpus_file_roundtrip() {
    let c = corpus::load(&corpus_dir()).unwrap();
    let text = to_canonical_json(&c);
    let back: CorpusFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    assert_eq!(to_canonical_json(&back), text);
}

#[test]
fn tor_lengths_alternate() {
    let v = run_json(&["tor", "--M", &module("node_rx"), "--N", &module("node_rx2"), "--bound", "8"]);
    assert_eq!(v["tor"]["lengths"], json!([1, 0, 1, 0, 1, 0, 1, 0]));
    assert_eq!(v["tor"]["periodicity"]["shift"], json!(2));
}

#[test]
fn theta_of_rx_is_minus_one() {
    let v = run_json(&["theta", "--M", &module("node_rx"), "--N", &module("node_rx")]);
    let t = &v["theta"];
    assert_eq!(t["value"], json!({ "num": "-1", "den": "1" }));
    assert!(t["certificate"]["fit_polynomials"].is_object());
    assert!(t["certificate"]["lengths"].is_array());
}

#[test]
fn json_output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["--json", "betti", "--M", &module("cone_k")],
        &["--json", "theta", "--M", &module("node_rx"), "--N", &module("node_ry")],
        &["--json", "check", "all", "--M", &module("cross_rx"), "--N", &module("cross_rlin")],
        &["--json", "corpus", "run"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn fast_corpus_passes() {
    let out = run(&["corpus", "run"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("cases passed"));
}

#[test]
fn slow_tag_selects_exext() {
    let c = corpus::load(&corpus_dir()).unwrap();
    let slow: Vec<&str> =
        c.cases.iter().filter(|c| c.tags.contains(&corpus::Tag::Slow)).map(|c| c.id.as_str()).collect();
    assert!(!slow.is_empty());
    assert!(slow.iter().all(|id| id.starts_with("exext")), "{slow:?}");
}

fn copy_dir(from: &Path, to: &Path) {
    fs::create_dir_all(to).unwrap();
    for entry in fs::read_dir(from).unwrap() {
        let path = entry.unwrap().path();
        let dest = to.join(path.file_name().unwrap());
        if path.is_dir() {
            copy_dir(&path, &dest);
        } else {
            fs::copy(&path, &dest).unwrap();
        }
    }
}

#[test]
fn corrupted_fixture_is_reported() {
    let tmp = tempfile::tempdir().unwrap();
    copy_dir(&corpus_dir(), tmp.path());
    let path = tmp.path().join("cases.json");
    let mut c: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let case = c["cases"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|c| c["op"] == "betti" && c["tags"] == json!(["fast"]))
        .unwrap();
    let id = case["id"].as_str().unwrap().to_string();
    case["expected"] = json!({ "betti": { "totals": [999] } });
    fs::write(&path, serde_json::to_string_pretty(&c).unwrap()).unwrap();

    let dir = tmp.path().display().to_string();
    let out = run(&["corpus", "run", "--dir", &dir]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains(&format!("FAIL {id}")), "{}", out.stdout);
    assert!(out.stdout.contains("betti.totals"), "{}", out.stdout);
}

#[test]
fn malformed_module_names_the_field() {
    let tmp = tempfile::tempdir().unwrap();
    let ring = corpus_dir().join("rings/node.json");
    let bad = tmp.path().join("bad.json");
    fs::write(&bad, json!({ "ring": ring, "gens": [0], "relations": [["x+"]] }).to_string()).unwrap();
    let out = run(&["betti", "--M", &bad.display().to_string()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("relations[0][0]"), "{}", out.stderr);

    let bad = tmp.path().join("bad2.json");
    fs::write(&bad, json!({ "ring": ring, "gens": [0], "relations": [["x", "y"]] }).to_string()).unwrap();
    let out = run(&["betti", "--M", &bad.display().to_string()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("relations[0]"), "{}", out.stderr);
}

#[test]
fn malformed_ring_names_the_field() {
    let tmp = tempfile::tempdir().unwrap();
    let ring = tmp.path().join("r.json");
    fs::write(&ring, json!({ "p": 101, "vars": [{ "name": "x" }], "relations": ["x*q"] }).to_string()).unwrap();
    let m = tmp.path().join("m.json");
    fs::write(&m, json!({ "ring": "r.json", "gens": [0], "relations": [] }).to_string()).unwrap();
    let out = run(&["depth", "--M", &m.display().to_string()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("relations[0]"), "{}", out.stderr);
}

#[test]
fn unknown_theorem_is_an_input_error() {
    let out = run(&["check", "nonsense", "--M", &module("node_rx"), "--N", &module("node_rx")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("theorem"), "{}", out.stderr);
}

#[test]
fn compute_error_is_structured() {
    let out = run(&["--json", "theta", "--M", &module("cross_rx"), "--N", &module("cross_rx")]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("not_hypersurface"));
}

#[test]
fn text_mode_prints_paths() {
    let out = run(&["betti", "--M", &module("node_k"), "--bound", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("betti.totals: 1, 2, 2, 2"), "{}", out.stdout);
}

#[test]
fn random_sweep_has_no_alarm() {
    let out = run(&["--json", "corpus", "random", "--seed", "7", "--count", "6"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["red_alarm"], json!(false));
}
