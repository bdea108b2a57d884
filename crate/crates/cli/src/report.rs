//! Machine reports: core results as canonical JSON values.

use cihom_core::constructions::{Pushforward, QuasiLifting, SequenceCertificate};
use cihom_core::homres::{BettiTable, Periodicity, ProjDim, SerreReport, TorProfile};
use cihom_core::modules::FPModule;
use cihom_core::pairings::{PairingKind, PairingResult, Rational};
use cihom_core::theorems::{ConclusionStatus, Datum, Evidence, HypStatus, Verdict};
use cihom_core::Error;
use serde_json::{json, Map, Value};

use crate::files::ModuleFile;

/// Number of Hilbert function values listed for a module.
pub const HILBERT_WINDOW: i32 = 6;

pub fn rational(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn length(l: Option<u64>) -> Value {
    l.map_or(Value::Null, Value::from)
}

pub fn pd(p: ProjDim) -> Value {
    match p {
        ProjDim::Finite(p) => json!(p),
        ProjDim::Infinite => json!("infinite"),
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::InhomogeneousRelation { .. } => "inhomogeneous_relation",
        Error::NotRegularSequence { .. } => "not_regular_sequence",
        Error::RingMismatch => "ring_mismatch",
        Error::CompositionNotZero => "composition_not_zero",
        Error::NotHypersurface => "not_hypersurface",
        Error::TailNotFiniteLength { .. } => "tail_not_finite_length",
        Error::NotStabilized { .. } => "not_stabilized",
        Error::FitFailed { .. } => "fit_failed",
        Error::NotTorsionFree => "not_torsion_free",
        Error::ChainBlocked { .. } => "chain_blocked",
        Error::MissingMinPrimes => "missing_min_primes",
    }
}

pub fn error(e: &Error) -> Value {
    let mut v = json!({ "kind": error_kind(e), "message": e.to_string() });
    let extra = match e {
        Error::InhomogeneousRelation { index } | Error::NotRegularSequence { index } => Some(("index", *index)),
        Error::TailNotFiniteLength { index } => Some(("index", *index)),
        Error::NotStabilized { bound } | Error::FitFailed { bound } => Some(("bound", *bound)),
        Error::ChainBlocked { stage } => Some(("stage", *stage)),
        _ => None,
    };
    if let Some((k, x)) = extra {
        v[k] = json!(x);
    }
    v
}

/// Presentation plus Hilbert data of a module.
pub fn module(m: &FPModule) -> Value {
    let file = ModuleFile::of(m, None);
    let lo = m.gens().iter().copied().min().unwrap_or(0);
    let hs = m.hilbert();
    json!({
        "gens": file.gens,
        "relations": file.relations,
        "num_generators": m.num_generators(),
        "dim": m.dim(),
        "length": length(m.length()),
        "hilbert_from": lo,
        "hilbert": hs.values(lo, lo + HILBERT_WINDOW - 1),
    })
}

pub fn betti(t: &BettiTable) -> Value {
    let graded: Vec<Value> =
        t.entries.iter().map(|(&(i, j), &b)| json!({ "i": i, "j": j, "beta": b })).collect();
    json!({ "bound": t.bound, "totals": t.totals(), "graded": graded })
}

pub fn periodicity(p: &Option<Periodicity>) -> Value {
    match p {
        Some(p) => json!({ "from": p.from, "shift": p.shift }),
        None => Value::Null,
    }
}

/// Lengths are listed for `i = 1..=bound`; `tor0` carries `Tor_0 = M ⊗ N`.
pub fn tor_profile(p: &TorProfile) -> Value {
    let lengths: Vec<Value> = p.lengths[1..].iter().map(|&l| length(l)).collect();
    let dims: Vec<Value> = p.dims[1..].iter().map(|d| d.map_or(Value::Null, Value::from)).collect();
    json!({
        "bound": p.bound,
        "lengths": lengths,
        "dims": dims,
        "tor0": { "dim": p.dims[0], "length": length(p.lengths[0]) },
        "finite_length_from": p.finite_length_from,
        "periodicity": periodicity(&p.periodic),
    })
}

pub fn pairing(r: &PairingResult) -> Value {
    let c = &r.certificate;
    let (name, e) = match r.kind {
        PairingKind::Theta => ("theta", None),
        PairingKind::Eta(e) => ("eta", Some(e)),
    };
    let poly = |p: &Vec<Rational>| Value::Array(p.iter().map(rational).collect());
    let mut out = json!({
        "pairing": name,
        "value": r.value.as_ref().map_or(Value::Null, rational),
        "divergent": c.divergence_flag,
        "certificate": {
            "finite_length_from": c.finite_length_from,
            "fit_window": [c.fit_window.0, c.fit_window.1],
            "fit_polynomials": { "even": poly(&c.fit_polynomials[0]), "odd": poly(&c.fit_polynomials[1]) },
            "validation_indices": c.validation_indices,
            "periodicity": periodicity(&c.periodicity),
            "lengths": c.lengths.iter().map(|&l| length(l)).collect::<Vec<_>>(),
            "reproduces_observations": c.reproduces_observations(),
        },
    });
    if let Some(e) = e {
        out["e"] = json!(e);
    }
    out
}

pub fn serre(r: &SerreReport) -> Value {
    let ext: Vec<Value> =
        r.ext_dims.iter().map(|&(i, d)| json!({ "i": i, "dim": d.map_or(Value::Null, Value::from) })).collect();
    json!({ "n": r.n, "holds": r.holds, "ext_into_ring": ext })
}

pub fn sequence(c: &SequenceCertificate) -> Value {
    json!({
        "maps_well_defined": c.maps_well_defined,
        "composition_zero": c.composition_zero,
        "right_surjective": c.right_surjective,
        "hilbert_additive": c.hilbert_additive,
        "exact": c.is_exact(),
    })
}

pub fn pushforward(p: &Pushforward) -> Value {
    json!({
        "nu": p.nu,
        "free_twists": p.free_twists(),
        "m1": module(&p.m1),
        "m1_is_zero": p.m1.is_zero(),
        "certificate": sequence(&p.certificate),
    })
}

pub fn quasi_lifting(q: &QuasiLifting) -> Value {
    json!({
        "base": crate::files::RingFile::of(&q.base),
        "nu": q.pushforward.nu,
        "m1": module(&q.pushforward.m1),
        "e": module(&q.e),
        "certificate": sequence(&q.certificate),
    })
}

fn datum(d: &Datum) -> Value {
    match d {
        Datum::Bool(b) => json!(b),
        Datum::Int(i) => json!(i),
        Datum::Rational(r) => rational(r),
        Datum::Seq(s) => Value::Array(s.iter().map(|x| x.map_or(Value::Null, Value::from)).collect()),
        Datum::Text(t) => json!(t),
    }
}

fn evidence(e: &Evidence) -> Value {
    let mut m = Map::new();
    for (k, v) in &e.items {
        m.insert(k.clone(), datum(v));
    }
    Value::Object(m)
}

fn hyp_status(s: HypStatus) -> Value {
    match s {
        HypStatus::Holds => json!("holds"),
        HypStatus::Fails => json!("fails"),
        HypStatus::VerifiedUpTo(b) => json!(format!("verified_up_to_{b}")),
    }
}

pub fn conclusion(s: ConclusionStatus) -> Value {
    match s {
        ConclusionStatus::Certified => json!("certified"),
        ConclusionStatus::VerifiedUpTo(b) => json!(format!("verified_up_to_{b}")),
        ConclusionStatus::Refuted => json!("refuted"),
        ConclusionStatus::NotApplicable => json!("not_applicable"),
    }
}

/// Hypotheses are keyed by name so fixtures can pick single entries.
pub fn verdict(v: &Verdict) -> Value {
    let mut hyps = Map::new();
    for h in &v.hypotheses {
        hyps.insert(h.name.clone(), json!({ "status": hyp_status(h.status), "evidence": evidence(&h.evidence) }));
    }
    let mut sub = Map::new();
    for s in &v.sub {
        sub.insert(s.theorem.clone(), verdict(s));
    }
    json!({
        "theorem": v.theorem,
        "hypotheses": hyps,
        "conclusion": conclusion(v.conclusion),
        "observed": { "status": conclusion(v.observed.status), "evidence": evidence(&v.observed.evidence) },
        "sub": sub,
        "red_alarm": v.red_alarm(),
    })
}
