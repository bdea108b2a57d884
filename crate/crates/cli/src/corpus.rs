//! Bundled corpus of rings, modules and expected report fragments.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::files::{load_module, load_ring};
use crate::ops::{self, CoreError, Inputs, Op, OpArgs};
use crate::report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Fast,
    Slow,
}

/// Where an expected value comes from: a published statement, an independent
/// computation, or an immediate identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Published,
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusCase {
    pub id: String,
    pub ring: String,
    #[serde(default)]
    pub modules: BTreeMap<String, String>,
    pub op: Op,
    #[serde(default)]
    pub args: OpArgs,
    pub expected: Value,
    pub tags: Vec<Tag>,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    pub cases: Vec<CorpusCase>,
}

/// The corpus shipped with this crate.
pub fn default_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

pub fn load(dir: &Path) -> Result<CorpusFile> {
    let path = dir.join("cases.json");
    let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: malformed corpus", path.display()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub red_alarm: bool,
    /// Mismatches as `path: expected X, got Y`.
    pub diff: Vec<String>,
    pub report: Value,
}

/// Inputs of a case, with the `M`/`N` modules over the case ring.
pub fn inputs(dir: &Path, case: &CorpusCase) -> Result<Inputs> {
    let ring = load_ring(&dir.join(&case.ring))?;
    let get = |key: &str| -> Result<Option<_>> {
        case.modules.get(key).map(|p| load_module(&dir.join(p), Some(&ring))).transpose()
    };
    let m = get("M")?.ok_or_else(|| anyhow!("case {}: modules.M: missing", case.id))?;
    let n = get("N")?;
    Ok(Inputs { ring, m, n })
}

/// Runs one case; compute errors become an `error` report so fixtures can
/// expect them. Input errors are returned.
pub fn run_case(dir: &Path, case: &CorpusCase) -> Result<CaseResult> {
    let inp = inputs(dir, case)?;
    let (report, red_alarm) = match ops::run(case.op, &inp, &case.args) {
        Ok(o) => (o.report, o.red_alarm),
        Err(e) => match e.downcast_ref::<CoreError>() {
            Some(CoreError(ce)) => (json!({ "error": report::error(ce) }), false),
            None => return Err(e.context(format!("case {}", case.id))),
        },
    };
    let mut diff = Vec::new();
    compare(&case.expected, &report, "", &mut diff);
    Ok(CaseResult { id: case.id.clone(), passed: diff.is_empty() && !red_alarm, red_alarm, diff, report })
}

/// Records where `actual` does not contain `expected`: objects match on the
/// expected keys only, everything else must be equal.
pub fn compare(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                match a.get(k) {
                    Some(av) => compare(ev, av, &p, out),
                    None => out.push(format!("{p}: expected {ev}, missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                compare(ev, av, &format!("{path}[{i}]"), out);
            }
        }
        _ if expected == actual => {}
        _ => out.push(format!("{path}: expected {expected}, got {actual}")),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub results: Vec<CaseResult>,
}

impl Summary {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn red_alarm(&self) -> bool {
        self.results.iter().any(|r| r.red_alarm)
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> Value {
        let cases: Vec<Value> = self
            .results
            .iter()
            .map(|r| json!({ "id": r.id, "passed": r.passed, "red_alarm": r.red_alarm, "diff": r.diff }))
            .collect();
        json!({
            "total": self.results.len(),
            "passed": self.passed(),
            "red_alarm": self.red_alarm(),
            "cases": cases,
        })
    }
}

/// Runs every case carrying one of `tags` concurrently; results are ordered by id.
pub fn run(dir: &Path, tags: &[Tag]) -> Result<Summary> {
    let corpus = load(dir)?;
    let selected: Vec<&CorpusCase> =
        corpus.cases.iter().filter(|c| c.tags.iter().any(|t| tags.contains(t))).collect();
    let mut results = selected.par_iter().map(|c| run_case(dir, c)).collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Summary { results })
}

/// Ring files of the corpus, by file stem.
pub fn rings(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir.join("rings")).with_context(|| format!("{}/rings", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
            out.push((stem, path));
        }
    }
    out.sort();
    Ok(out)
}

/// Module files of the corpus with their ring, by file stem.
pub fn modules(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir.join("modules")).with_context(|| format!("{}/modules", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
            out.push((stem, path));
        }
    }
    out.sort();
    Ok(out)
}
