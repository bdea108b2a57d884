//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus::{self, Tag};
use crate::files::{load_module, load_ring, module_ring_path, to_canonical_json, ModuleFile};
use crate::ops::{self, CoreError, Inputs, Op, OpArgs, THEOREMS};
use crate::random::Sweep;

#[derive(Parser, Debug)]
#[command(name = "cihom", version, about = "Tor, Ext, pairings and theorem checks over graded complete intersections")]
struct Cli {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Ring file; defaults to the ring named in the first module file.
    #[arg(long)]
    ring: Option<PathBuf>,
    /// Homological bound.
    #[arg(long, env = "CIHOM_BOUND")]
    bound: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct One {
    #[command(flatten)]
    common: Common,
    #[arg(long = "M", value_name = "FILE")]
    m: PathBuf,
}

#[derive(Args, Debug, Clone)]
struct Two {
    #[command(flatten)]
    common: Common,
    #[arg(long = "M", value_name = "FILE")]
    m: PathBuf,
    #[arg(long = "N", value_name = "FILE")]
    n: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers of a minimal resolution.
    Betti(One),
    /// Tor lengths, dimensions and periodicity.
    Tor(Two),
    /// Dimensions and lengths of Ext modules.
    Ext(Two),
    /// Depth, projective dimension and status flags.
    Depth(One),
    /// Serre's condition (S_n).
    Serre {
        #[command(flatten)]
        one: One,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Hochster's theta pairing over a hypersurface.
    Theta(Two),
    /// The eta_e pairing.
    Eta {
        #[command(flatten)]
        two: Two,
        /// Exponent; defaults to the number of defining relations.
        #[arg(long)]
        e: Option<usize>,
    },
    /// Pushforward M1, or the chain of `--steps` iterated pushforwards.
    Pushforward {
        #[command(flatten)]
        one: One,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Quasi-lifting of M one step down the hypersurface tower.
    Quasilift(One),
    /// Run a theorem checker.
    Check {
        /// One of depth-formula, lemma-hypersurface, main, cor-mcm, cor-dao, tor1, hw, powers, sp, all.
        theorem: String,
        #[command(flatten)]
        common: Common,
        #[arg(long = "M", value_name = "FILE")]
        m: PathBuf,
        #[arg(long = "N", value_name = "FILE")]
        n: Option<PathBuf>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
        /// Tensor power for `powers`.
        #[arg(long)]
        power: Option<usize>,
    },
    /// Bundled corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Run fixtures and compare with expected fragments.
    Run {
        /// Comma-separated tags.
        #[arg(long, value_delimiter = ',', default_value = "fast")]
        tags: Vec<String>,
        /// Corpus directory.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Red-alarm sweep over seeded random modules on every corpus ring.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, env = "CIHOM_BOUND")]
        bound: Option<usize>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// Exit code with the text written to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, code: i32) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    fn fail(stderr: String) -> Self {
        Output { code: 1, stdout: String::new(), stderr }
    }
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Output::ok(text, 0) } else { Output::fail(text) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Output::fail(format!("error: {e:#}\n")),
    }
}

fn inputs(common: &Common, m: &Path, n: Option<&Path>) -> Result<Inputs> {
    let ring = match &common.ring {
        Some(p) => load_ring(p)?,
        None => {
            let text = std::fs::read_to_string(m).map_err(|e| anyhow!("cannot read {}: {e}", m.display()))?;
            let file: ModuleFile =
                serde_json::from_str(&text).map_err(|e| anyhow!("{}: malformed input: {e}", m.display()))?;
            let rp = module_ring_path(m, &file)
                .ok_or_else(|| anyhow!("{}: ring: no ring in the module file and no --ring", m.display()))?;
            load_ring(&rp)?
        }
    };
    let mm = load_module(m, Some(&ring))?;
    let nn = n.map(|p| load_module(p, Some(&ring))).transpose()?;
    Ok(Inputs { ring, m: mm, n: nn })
}

fn op_output(op: Op, inp: &Inputs, args: &OpArgs, json: bool) -> Result<Output> {
    let out = match ops::run(op, inp, args) {
        Ok(o) => o,
        Err(e) => {
            if let Some(CoreError(ce)) = e.downcast_ref::<CoreError>() {
                if json {
                    let report = json!({ "error": crate::report::error(ce) });
                    return Ok(Output { code: 1, stdout: to_canonical_json(&report), stderr: format!("error: {ce}\n") });
                }
            }
            return Err(e);
        }
    };
    let code = if out.red_alarm { 2 } else { 0 };
    let text = if json { to_canonical_json(&out.report) } else { render(&out.report) };
    Ok(Output::ok(text, code))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let json = cli.json;
    let single = |op: Op, one: &One, args: OpArgs| -> Result<Output> {
        let inp = inputs(&one.common, &one.m, None)?;
        op_output(op, &inp, &OpArgs { bound: one.common.bound, ..args }, json)
    };
    let pair = |op: Op, two: &Two, args: OpArgs| -> Result<Output> {
        let inp = inputs(&two.common, &two.m, Some(&two.n))?;
        op_output(op, &inp, &OpArgs { bound: two.common.bound, ..args }, json)
    };
    match &cli.command {
        Command::Betti(one) => single(Op::Betti, one, OpArgs::default()),
        Command::Tor(two) => pair(Op::Tor, two, OpArgs::default()),
        Command::Ext(two) => pair(Op::Ext, two, OpArgs::default()),
        Command::Depth(one) => single(Op::Depth, one, OpArgs::default()),
        Command::Serre { one, n } => single(Op::Serre, one, OpArgs { n: Some(*n), ..OpArgs::default() }),
        Command::Theta(two) => pair(Op::Theta, two, OpArgs::default()),
        Command::Eta { two, e } => pair(Op::Eta, two, OpArgs { e: *e, ..OpArgs::default() }),
        Command::Pushforward { one, steps } => single(Op::Pushforward, one, OpArgs { n: *steps, ..OpArgs::default() }),
        Command::Quasilift(one) => single(Op::Quasilift, one, OpArgs::default()),
        Command::Check { theorem, common, m, n, c, e, power } => {
            if !THEOREMS.contains(&theorem.as_str()) {
                return Err(anyhow!("theorem: unknown checker `{theorem}` (expected one of {})", THEOREMS.join(", ")));
            }
            let inp = inputs(common, m, n.as_deref())?;
            let args = OpArgs { bound: common.bound, e: *e, c: *c, n: *power, theorem: Some(theorem.clone()) };
            op_output(Op::Check, &inp, &args, json)
        }
        Command::Corpus { command } => corpus_command(command, json),
    }
}

fn parse_tags(tags: &[String]) -> Result<Vec<Tag>> {
    tags.iter()
        .map(|t| match t.as_str() {
            "fast" => Ok(Tag::Fast),
            "slow" => Ok(Tag::Slow),
            other => Err(anyhow!("tags: unknown tag `{other}` (expected fast or slow)")),
        })
        .collect()
}

fn corpus_command(cmd: &CorpusCommand, json: bool) -> Result<Output> {
    match cmd {
        CorpusCommand::Run { tags, dir } => {
            let dir = dir.clone().unwrap_or_else(corpus::default_dir);
            let summary = corpus::run(&dir, &parse_tags(tags)?)?;
            let code = if summary.red_alarm() {
                2
            } else if summary.all_passed() {
                0
            } else {
                1
            };
            let text = if json {
                to_canonical_json(&summary.to_json())
            } else {
                let mut s = String::new();
                for r in &summary.results {
                    s.push_str(&format!("{} {}\n", if r.passed { "pass" } else { "FAIL" }, r.id));
                    for d in &r.diff {
                        s.push_str(&format!("    {d}\n"));
                    }
                }
                s.push_str(&format!("{}/{} cases passed\n", summary.passed(), summary.results.len()));
                s
            };
            Ok(Output::ok(text, code))
        }
        CorpusCommand::Random { seed, count, bound, dir } => {
            let dir = dir.clone().unwrap_or_else(corpus::default_dir);
            let mut report = serde_json::Map::new();
            let mut alarm = false;
            for (i, (name, path)) in corpus::rings(&dir)?.into_iter().enumerate() {
                let ring = load_ring(&path)?;
                let b = bound.unwrap_or(ring.dim() + 6);
                let sweep = Sweep::run(&ring, seed.wrapping_add(i as u64), *count, b);
                alarm |= !sweep.alarms().is_empty();
                report.insert(name, sweep.to_json());
            }
            let report = json!({ "seed": seed, "count": count, "rings": report, "red_alarm": alarm });
            let text = if json { to_canonical_json(&report) } else { render(&report) };
            Ok(Output::ok(text, if alarm { 2 } else { 0 }))
        }
    }
}

/// Plain-text rendering: one `path: value` line per scalar.
pub fn render(v: &Value) -> String {
    fn walk(v: &Value, path: &str, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                    walk(x, &p, out);
                }
            }
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let items: Vec<String> = a.iter().map(scalar).collect();
                out.push_str(&format!("{path}: {}\n", items.join(", ")));
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{path}[{i}]"), out);
                }
            }
            _ => out.push_str(&format!("{path}: {}\n", scalar(v))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::Null => "-".to_string(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}
