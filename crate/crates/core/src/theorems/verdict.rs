use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::pairings::Rational;

/// One machine-readable observation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Datum {
    Bool(bool),
    Int(i64),
    Rational(Rational),
    /// A sequence indexed from 0; `None` marks an infinite or undefined entry.
    Seq(Vec<Option<i64>>),
    Text(String),
}

impl From<bool> for Datum {
    fn from(b: bool) -> Self {
        Datum::Bool(b)
    }
}

impl From<usize> for Datum {
    fn from(v: usize) -> Self {
        Datum::Int(v as i64)
    }
}

impl From<i64> for Datum {
    fn from(v: i64) -> Self {
        Datum::Int(v)
    }
}

impl From<Rational> for Datum {
    fn from(v: Rational) -> Self {
        Datum::Rational(v)
    }
}

impl From<&str> for Datum {
    fn from(s: &str) -> Self {
        Datum::Text(s.to_string())
    }
}

impl From<String> for Datum {
    fn from(s: String) -> Self {
        Datum::Text(s)
    }
}

impl From<Option<usize>> for Datum {
    fn from(v: Option<usize>) -> Self {
        match v {
            Some(v) => Datum::Int(v as i64),
            None => Datum::Text("infinite".to_string()),
        }
    }
}

/// Named observations backing a status.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence {
    pub items: Vec<(String, Datum)>,
}

impl Evidence {
    pub fn new() -> Self {
        Evidence::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Datum>) -> Self {
        self.items.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Datum>) {
        self.items.push((key.to_string(), value.into()));
    }

    pub fn extend(&mut self, other: Evidence) {
        self.items.extend(other.items);
    }

    pub fn get(&self, key: &str) -> Option<&Datum> {
        self.items.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypStatus {
    Holds,
    Fails,
    /// Checked on every index up to the bound, not certified beyond it.
    VerifiedUpTo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypStatus,
    pub evidence: Evidence,
}

impl Hypothesis {
    pub fn new(name: &str, status: HypStatus, evidence: Evidence) -> Self {
        Hypothesis { name: name.to_string(), status, evidence }
    }

    pub fn check(name: &str, ok: bool, evidence: Evidence) -> Self {
        Hypothesis::new(name, if ok { HypStatus::Holds } else { HypStatus::Fails }, evidence)
    }

    pub fn fails(&self) -> bool {
        self.status == HypStatus::Fails
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConclusionStatus {
    Certified,
    VerifiedUpTo(usize),
    Refuted,
    NotApplicable,
}

impl ConclusionStatus {
    /// Worst of two observed statuses: refuted beats bounded beats certified.
    pub fn meet(self, other: ConclusionStatus) -> ConclusionStatus {
        use ConclusionStatus::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (VerifiedUpTo(a), VerifiedUpTo(b)) => VerifiedUpTo(a.min(b)),
            (VerifiedUpTo(a), _) | (_, VerifiedUpTo(a)) => VerifiedUpTo(a),
            (NotApplicable, x) | (x, NotApplicable) => x,
            (Certified, Certified) => Certified,
        }
    }

    pub fn from_bool(ok: bool) -> ConclusionStatus {
        if ok {
            ConclusionStatus::Certified
        } else {
            ConclusionStatus::Refuted
        }
    }

    /// Not refuted by the data.
    pub fn is_consistent_with_truth(self) -> bool {
        self != ConclusionStatus::Refuted
    }
}

/// The conclusion as observed on the data, independent of the hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observation {
    pub status: ConclusionStatus,
    pub evidence: Evidence,
}

impl Observation {
    pub fn new(status: ConclusionStatus, evidence: Evidence) -> Self {
        Observation { status, evidence }
    }
}

/// Outcome of checking one theorem on one input.
///
/// `conclusion` is `NotApplicable` as soon as a hypothesis fails; the data's
/// verdict on the conclusion is still recorded in `observed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: ConclusionStatus,
    pub observed: Observation,
    pub sub: Vec<Verdict>,
}

impl Verdict {
    pub fn new(theorem: &str, hypotheses: Vec<Hypothesis>, observed: Observation) -> Self {
        let conclusion =
            if hypotheses.iter().any(Hypothesis::fails) { ConclusionStatus::NotApplicable } else { observed.status };
        Verdict { theorem: theorem.to_string(), hypotheses, conclusion, observed, sub: Vec::new() }
    }

    /// A verdict grouping sub-verdicts; its conclusion is the worst applicable one.
    pub fn group(theorem: &str, hypotheses: Vec<Hypothesis>, sub: Vec<Verdict>) -> Self {
        let mut status = ConclusionStatus::NotApplicable;
        for v in &sub {
            status = status.meet(v.conclusion);
        }
        let mut v = Verdict::new(theorem, hypotheses, Observation::new(status, Evidence::new()));
        v.sub = sub;
        v
    }

    pub fn hypotheses_hold(&self) -> bool {
        !self.hypotheses.iter().any(Hypothesis::fails)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    /// No hypothesis fails yet the conclusion is refuted, here or in a sub-verdict.
    pub fn red_alarm(&self) -> bool {
        (self.hypotheses_hold() && self.observed.status == ConclusionStatus::Refuted)
            || self.sub.iter().any(Verdict::red_alarm)
    }
}
