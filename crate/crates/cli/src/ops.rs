//! Operations shared by the command line and the corpus runner.

use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use cihom_core::constructions::{pushforward, pushforward_chain, quasi_lifting};
use cihom_core::homres::{depth, ext_hilbert, pd, serre_check, status_flags, tor_profile, Resolution};
use cihom_core::modules::FPModule;
use cihom_core::pairings::{default_bound, eta, theta};
use cihom_core::rings::CIRing;
use cihom_core::theorems::{
    check_cor_dao, check_cor_mcm, check_depth_formula, check_hw, check_lemma_hypersurface, check_main, check_pair,
    check_powers, check_sp, check_tor1, Verdict,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Betti,
    Tor,
    Ext,
    Depth,
    Serre,
    Theta,
    Eta,
    Pushforward,
    Quasilift,
    Check,
}

/// Theorem checkers selectable by name.
pub const THEOREMS: [&str; 10] =
    ["depth-formula", "lemma-hypersurface", "main", "cor-mcm", "cor-dao", "tor1", "hw", "powers", "sp", "all"];

/// Optional numeric parameters; each operation reads the ones it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpArgs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    /// Exponent of `η_e`, or the height parameter of the freeness corollary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    /// Codimension parameter of the (SP_c) and Tor_1 checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    /// Serre index, tensor power, or number of pushforward steps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
}

pub struct Inputs {
    pub ring: Arc<CIRing>,
    pub m: FPModule,
    pub n: Option<FPModule>,
}

pub struct Outcome {
    pub report: Value,
    pub red_alarm: bool,
}

impl Inputs {
    fn n(&self) -> Result<&FPModule> {
        self.n.as_ref().ok_or_else(|| anyhow!("N: this operation needs a second module"))
    }
}

fn core<T>(r: cihom_core::Result<T>) -> Result<T> {
    r.map_err(|e| anyhow!(CoreError(e)))
}

/// A core error kept intact for structured reporting.
#[derive(Debug)]
pub struct CoreError(pub cihom_core::Error);

impl std::fmt::Display for CoreError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for CoreError {}

fn plain(report: Value) -> Outcome {
    Outcome { report, red_alarm: false }
}

pub fn run(op: Op, inp: &Inputs, args: &OpArgs) -> Result<Outcome> {
    let m = &inp.m;
    let bound = args.bound.unwrap_or_else(|| default_bound(m));
    Ok(match op {
        Op::Betti => {
            let res = Resolution::new(m, bound);
            plain(json!({ "op": "betti", "betti": report::betti(&res.betti()) }))
        }
        Op::Tor => {
            let p = core(tor_profile(m, inp.n()?, bound))?;
            plain(json!({ "op": "tor", "tor": report::tor_profile(&p) }))
        }
        Op::Ext => {
            let n = inp.n()?;
            let mut res = Resolution::new(m, bound + 1);
            let ext: Vec<Value> = (0..=bound)
                .map(|i| {
                    let hs = ext_hilbert(&mut res, n, i);
                    json!({ "i": i, "dim": hs.dim(), "length": report::length(hs.length()) })
                })
                .collect();
            plain(json!({ "op": "ext", "bound": bound, "ext": ext }))
        }
        Op::Depth => {
            let flags = status_flags(m);
            plain(json!({
                "op": "depth",
                "depth": depth(m),
                "pd": report::pd(pd(m)),
                "ring_dim": inp.ring.dim(),
                "module": report::module(m),
                "is_torsion_free": flags.is_torsion_free,
                "is_reflexive": flags.is_reflexive,
                "is_mcm": flags.is_mcm,
            }))
        }
        Op::Serre => {
            let n = args.n.unwrap_or(1);
            plain(json!({ "op": "serre", "serre": report::serre(&serre_check(m, n)) }))
        }
        Op::Theta => {
            let r = core(theta(m, inp.n()?, bound))?;
            plain(json!({ "op": "theta", "theta": report::pairing(&r) }))
        }
        Op::Eta => {
            let e = args.e.unwrap_or_else(|| inp.ring.relative_codim().max(1));
            let r = core(eta(m, inp.n()?, e, bound))?;
            plain(json!({ "op": "eta", "eta": report::pairing(&r) }))
        }
        Op::Pushforward => match args.n {
            None => {
                let p = core(pushforward(m))?;
                plain(json!({ "op": "pushforward", "pushforward": report::pushforward(&p) }))
            }
            Some(steps) => {
                let chain = core(pushforward_chain(m, steps))?;
                let stages: Vec<Value> = chain.modules.iter().map(report::module).collect();
                let exact: Vec<bool> = chain.steps.iter().map(|s| s.certificate.is_exact()).collect();
                plain(json!({ "op": "pushforward", "chain": { "stages": stages, "exact": exact } }))
            }
        },
        Op::Quasilift => {
            let q = core(quasi_lifting(m))?;
            plain(json!({ "op": "quasilift", "quasilift": report::quasi_lifting(&q) }))
        }
        Op::Check => check(inp, args, bound)?,
    })
}

fn check(inp: &Inputs, args: &OpArgs, bound: usize) -> Result<Outcome> {
    let m = &inp.m;
    let name = args.theorem.as_deref().ok_or_else(|| anyhow!("theorem: missing checker name"))?;
    let ring_c = inp.ring.relative_codim().max(1);
    let verdicts: Vec<Verdict> = match name {
        "sp" => {
            let sp = check_sp(m, inp.n()?, args.c.unwrap_or(ring_c), bound);
            let items: Vec<Value> = sp
                .items()
                .iter()
                .map(|h| json!({ "name": h.name, "holds": !h.fails() }))
                .collect();
            return Ok(plain(json!({ "op": "check", "theorem": "sp", "c": sp.c, "holds": sp.holds(), "items": items })));
        }
        "depth-formula" => vec![check_depth_formula(m, inp.n()?, bound)],
        "lemma-hypersurface" => vec![check_lemma_hypersurface(m, inp.n()?, bound)],
        "main" => vec![check_main(m, inp.n()?, bound)],
        "cor-mcm" => vec![check_cor_mcm(m, inp.n()?, bound)],
        "cor-dao" => vec![check_cor_dao(m, inp.n()?, args.e.unwrap_or(1), bound)],
        "tor1" => vec![check_tor1(m, inp.n()?, args.c.unwrap_or(ring_c), bound)],
        "hw" => vec![check_hw(m, inp.n()?, bound)],
        "powers" => vec![check_powers(m, args.n.unwrap_or(2), bound)],
        "all" => check_pair(m, inp.n()?, bound),
        other => bail!("theorem: unknown checker `{other}` (expected one of {})", THEOREMS.join(", ")),
    };
    let red_alarm = verdicts.iter().any(Verdict::red_alarm);
    let mut out = serde_json::Map::new();
    for v in &verdicts {
        out.insert(v.theorem.clone(), report::verdict(v));
    }
    Ok(Outcome { report: json!({ "op": "check", "verdicts": out, "red_alarm": red_alarm }), red_alarm })
}
