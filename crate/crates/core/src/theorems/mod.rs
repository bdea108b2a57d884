//! Hypothesis/conclusion checkers for the Tor-vanishing theorems, with
//! rigidity rules that turn bounded computations into statements about every
//! index.

mod checks;
mod context;
mod verdict;

pub use checks::{
    check_cor_dao, check_cor_mcm, check_depth_formula, check_hw, check_lemma_hypersurface, check_main, check_pair,
    check_powers, check_sp, check_tor1, SPReport,
};
pub use verdict::{ConclusionStatus, Datum, Evidence, HypStatus, Hypothesis, Observation, Verdict};

use crate::homres::{ProjDim, TorProfile};
use crate::modules::FPModule;
use crate::pairings::PairingResult;
use context::PairContext;

/// Why `Tor_i(M, N) = 0` is known for every `i ≥ from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityRule {
    /// `M` or `N` is free.
    Free,
    /// Zeros observed up to `pd M` or `pd N`, beyond which Tor vanishes.
    FiniteProjDim,
    /// Two consecutive zeros inside the certified 2-periodic tail over a hypersurface.
    Periodicity,
    /// `c + 1` consecutive zeros over a complete intersection with `c` relations.
    Murthy,
    /// `c` consecutive zeros and `η_c(M, N) = 0`.
    DaoRigidity,
    /// Eventual vanishing with `M` or `N` maximal Cohen-Macaulay.
    Jorgensen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub rule: RigidityRule,
    /// `Tor_i = 0` for all `i ≥ from`.
    pub from: usize,
}

impl RigidityCertificate {
    /// Tor-independence: vanishing for every `i ≥ 1`.
    pub fn all_positive(&self) -> bool {
        self.from <= 1
    }
}

/// Best certificate of eventual vanishing obtainable from the profile.
pub fn rigidity_infer(m: &FPModule, n: &FPModule, profile: &TorProfile) -> Option<RigidityCertificate> {
    let ctx = PairContext::new(m, n, profile.bound);
    let eta = crate::pairings::eta_from_profile(profile, ctx.c(), ctx.c().max(1), None).ok();
    infer(&ctx, profile, eta.as_ref())
}

pub(crate) fn infer(
    ctx: &PairContext,
    profile: &TorProfile,
    eta_c: Option<&PairingResult>,
) -> Option<RigidityCertificate> {
    let b = profile.bound;
    // zeros observed on s..=b
    let s = (1..=b).rev().find(|&i| !profile.is_zero(i)).map_or(1, |i| i + 1);
    let zeros = (b + 1).saturating_sub(s);
    let c = ctx.c();
    let mut best: Option<RigidityCertificate> = None;
    let offer = |best: &mut Option<RigidityCertificate>, rule, from| {
        if best.is_none_or(|cert| from < cert.from) {
            *best = Some(RigidityCertificate { rule, from });
        }
    };
    if ctx.m.is_zero() || ctx.n.is_zero() || ctx.m.is_free() || ctx.n.is_free() {
        offer(&mut best, RigidityRule::Free, 1);
    }
    for p in [ctx.m.pd(), ctx.n.pd()] {
        if let ProjDim::Finite(p) = p {
            offer(&mut best, RigidityRule::FiniteProjDim, if p <= b { s } else { p + 1 });
        }
    }
    if let Some(per) = &profile.periodic {
        if zeros >= 2 && per.from < b {
            offer(&mut best, RigidityRule::Periodicity, s);
        }
    }
    if zeros > c {
        offer(&mut best, RigidityRule::Murthy, s);
    }
    if c >= 1 && zeros >= c && eta_c.is_some_and(|e| e.is_zero()) {
        offer(&mut best, RigidityRule::DaoRigidity, s);
    }
    if s == 1 && best.is_some() && (ctx.m.is_mcm() || ctx.n.is_mcm()) {
        offer(&mut best, RigidityRule::Jorgensen, 1);
    }
    best
}

#[cfg(test)]
mod tests;
