use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::context::{Facts, PairContext};
use super::verdict::{ConclusionStatus, Datum, Evidence, HypStatus, Hypothesis, Observation, Verdict};
use super::{infer, RigidityCertificate};
use crate::constructions::{pushforward_chain, quasi_lifting};
use crate::homres::{ProjDim, TorProfile};
use crate::modules::FPModule;
use crate::pairings::{theta, PairingResult};
use crate::Result;

fn seq_u64(v: &[Option<u64>]) -> Datum {
    Datum::Seq(v.iter().map(|x| x.map(|x| x as i64)).collect())
}

fn seq_usize(v: &[Option<usize>]) -> Datum {
    Datum::Seq(v.iter().map(|x| x.map(|x| x as i64)).collect())
}

fn profile_evidence(p: &TorProfile) -> Evidence {
    Evidence::new().with("tor_lengths", seq_u64(&p.lengths)).with("tor_dims", seq_usize(&p.dims)).with("bound", p.bound)
}

fn serre_evidence(f: &Facts) -> Evidence {
    let dims: Vec<Option<usize>> = f.ext_dims().iter().map(|&(_, e)| e).collect();
    Evidence::new().with("ext_into_ring_dims_from_1", seq_usize(&dims))
}

fn error_evidence(e: &crate::Error) -> Evidence {
    Evidence::new().with("undetermined", e.to_string())
}

fn pairing_hypothesis(name: &str, r: &Result<PairingResult>) -> Hypothesis {
    match r {
        Ok(p) => {
            let mut ev = Evidence::new().with("divergent", p.certificate.divergence_flag);
            if let Some(v) = p.value {
                ev.push("value", v);
            }
            Hypothesis::check(name, p.is_zero(), ev)
        }
        Err(e) => Hypothesis::new(name, HypStatus::Fails, error_evidence(e)),
    }
}

/// Observed status of `Tor_i(M, N) = 0` for every `i ≥ 1`.
fn tor_vanishing(ctx: &PairContext) -> Observation {
    let p = match ctx.profile() {
        Ok(p) => p,
        Err(e) => return Observation::new(ConclusionStatus::Refuted, error_evidence(e)),
    };
    let mut ev = profile_evidence(p);
    if let Some(i) = (1..=p.bound).find(|&i| !p.is_zero(i)) {
        ev.push("first_nonzero_index", i);
        return Observation::new(ConclusionStatus::Refuted, ev);
    }
    match certificate(ctx, p) {
        Some(cert) if cert.all_positive() => {
            ev.push("rigidity_rule", format!("{:?}", cert.rule));
            Observation::new(ConclusionStatus::Certified, ev)
        }
        _ => Observation::new(ConclusionStatus::VerifiedUpTo(p.bound), ev),
    }
}

fn certificate(ctx: &PairContext, p: &TorProfile) -> Option<RigidityCertificate> {
    infer(ctx, p, ctx.eta_c().as_ref().ok())
}

/// Item (iii) of the SP condition: `Tor_i(M, N)` of finite length for `i ≫ 0`.
fn tail_finite_length(ctx: &PairContext) -> Hypothesis {
    const NAME: &str = "tor_finite_length_tail";
    let d = ctx.d();
    if d == 0 {
        return Hypothesis::new(NAME, HypStatus::Holds, Evidence::new().with("reason", "ring has dimension 0"));
    }
    if ctx.m.length().is_some() || ctx.n.length().is_some() {
        return Hypothesis::new(NAME, HypStatus::Holds, Evidence::new().with("reason", "a module has finite length"));
    }
    if ctx.m.pd().finite().is_some() || ctx.n.pd().finite().is_some() {
        return Hypothesis::new(NAME, HypStatus::Holds, Evidence::new().with("reason", "finite projective dimension"));
    }
    if ctx.m.free_locus_height() >= d || ctx.n.free_locus_height() >= d {
        return Hypothesis::new(NAME, HypStatus::Holds, Evidence::new().with("reason", "locally free off the maximal ideal"));
    }
    let p = match ctx.profile() {
        Ok(p) => p,
        Err(e) => return Hypothesis::new(NAME, HypStatus::Fails, error_evidence(e)),
    };
    let b = p.bound;
    let ev = profile_evidence(p);
    let finite_at_end = p.finite_length_from.is_some_and(|f| f < b);
    match (finite_at_end, &p.periodic) {
        (true, Some(_)) => Hypothesis::new(NAME, HypStatus::Holds, ev.with("reason", "periodic tail")),
        (true, None) => Hypothesis::new(NAME, HypStatus::VerifiedUpTo(b), ev),
        (false, _) => Hypothesis::new(NAME, HypStatus::Fails, ev),
    }
}

/// The three items of the SP condition for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPReport {
    pub c: usize,
    /// `(S_{c−1})` for `M` and `N`.
    pub modules_serre: Hypothesis,
    /// `(S_c)` for `M ⊗ N`.
    pub tensor_serre: Hypothesis,
    /// Finite length of `Tor_i(M, N)` for `i ≫ 0`.
    pub tail: Hypothesis,
}

impl SPReport {
    pub fn items(&self) -> [&Hypothesis; 3] {
        [&self.modules_serre, &self.tensor_serre, &self.tail]
    }

    pub fn holds(&self) -> bool {
        self.items().iter().all(|h| !h.fails())
    }

    fn into_hypotheses(self) -> Vec<Hypothesis> {
        vec![self.modules_serre, self.tensor_serre, self.tail]
    }
}

fn sp(ctx: &PairContext, c: usize) -> SPReport {
    let k = c.saturating_sub(1);
    let (sm, sn) = (ctx.m.serre(k), ctx.n.serre(k));
    let mut ev = Evidence::new().with("serre_index", k).with("m_holds", sm).with("n_holds", sn);
    ev.extend(serre_evidence(&ctx.m));
    let modules_serre = Hypothesis::check("sp_modules_serre", sm && sn, ev);
    let t = ctx.tensor();
    let st = t.serre(c);
    let tensor_serre =
        Hypothesis::check("sp_tensor_serre", st, serre_evidence(t).with("serre_index", c).with("holds", st));
    SPReport { c, modules_serre, tensor_serre, tail: tail_finite_length(ctx) }
}

pub fn check_sp(m: &FPModule, n: &FPModule, c: usize, bound: usize) -> SPReport {
    sp(&PairContext::new(m, n, bound), c.max(1))
}

fn depth_datum(d: Option<usize>) -> Datum {
    d.into()
}

/// `depth M + depth N = depth R + depth(M ⊗ N)`, zero modules having depth ∞.
fn depth_formula_observation(ctx: &PairContext) -> Observation {
    let (dm, dn, dt) = (ctx.m.depth(), ctx.n.depth(), ctx.tensor().depth());
    let ev = Evidence::new()
        .with("depth_m", depth_datum(dm))
        .with("depth_n", depth_datum(dn))
        .with("depth_r", ctx.d())
        .with("depth_tensor", depth_datum(dt));
    let ok = match (dm, dn, dt) {
        (Some(a), Some(b), Some(t)) => a + b == ctx.d() + t,
        (Some(_), Some(_), None) => false,
        (_, _, t) => t.is_none(),
    };
    Observation::new(ConclusionStatus::from_bool(ok), ev)
}

fn depth_formula(ctx: &PairContext) -> Verdict {
    let tor = tor_vanishing(ctx);
    let status = match tor.status {
        ConclusionStatus::Certified => HypStatus::Holds,
        ConclusionStatus::VerifiedUpTo(b) => HypStatus::VerifiedUpTo(b),
        _ => HypStatus::Fails,
    };
    let hyp = Hypothesis::new("tor_independent", status, tor.evidence);
    Verdict::new("depth-formula", vec![hyp], depth_formula_observation(ctx))
}

pub fn check_depth_formula(m: &FPModule, n: &FPModule, bound: usize) -> Verdict {
    depth_formula(&PairContext::new(m, n, bound))
}

fn hypersurface_hypothesis(ctx: &PairContext) -> Hypothesis {
    Hypothesis::check("hypersurface", ctx.ring.is_hypersurface(), Evidence::new().with("relations", ctx.c()))
}

fn support_hypothesis(ctx: &PairContext) -> Hypothesis {
    let (t, _) = ctx.n.module.torsion_parts();
    let ok = crate::homres::support_contained(&t, &ctx.m.module);
    Hypothesis::check("torsion_support_in_support", ok, Evidence::new().with("torsion_is_zero", t.is_zero()))
}

fn lemma_hypersurface(ctx: &PairContext) -> Verdict {
    let mut hyps = vec![hypersurface_hypothesis(ctx)];
    if !ctx.ring.is_hypersurface() {
        return Verdict::new("lemma-hypersurface", hyps, Observation::new(ConclusionStatus::NotApplicable, Evidence::new()));
    }
    hyps.push(Hypothesis::check("dim_at_least_1", ctx.d() >= 1, Evidence::new().with("dim", ctx.d())));
    hyps.extend(sp(ctx, 1).into_hypotheses());
    hyps.push(support_hypothesis(ctx));
    hyps.push(pairing_hypothesis("theta_zero", ctx.theta()));
    let tor = tor_vanishing(ctx);
    let tf = ctx.n.is_torsion_free();
    let mut ev = tor.evidence;
    ev.push("n_torsion_free", tf);
    let status = tor.status.meet(ConclusionStatus::from_bool(tf));
    Verdict::new("lemma-hypersurface", hyps, Observation::new(status, ev))
}

pub fn check_lemma_hypersurface(m: &FPModule, n: &FPModule, bound: usize) -> Verdict {
    lemma_hypersurface(&PairContext::new(m, n, bound))
}

fn main_theorem(ctx: &PairContext) -> Verdict {
    let c = ctx.c().max(1);
    let mut hyps =
        vec![Hypothesis::check("dim_at_least_c", ctx.d() >= c, Evidence::new().with("dim", ctx.d()).with("c", c))];
    hyps.extend(sp(ctx, c).into_hypotheses());
    if c == 1 {
        hyps.push(support_hypothesis(ctx));
    } else {
        hyps.push(Hypothesis::new(
            "torsion_support_in_support",
            HypStatus::Holds,
            Evidence::new().with("reason", "implied by the SP condition when c ≥ 2"),
        ));
    }
    hyps.push(pairing_hypothesis("eta_c_zero", ctx.eta_c()));
    let mut v = Verdict::new("main", hyps, tor_vanishing(ctx));
    if c >= 2 && v.hypotheses_hold() {
        v.sub.push(main_proof_path(ctx, v.hypotheses.clone()));
    }
    v
}

/// Replays the reduction to the previous hypersurface stage: the quasi-liftings
/// `E`, `F` satisfy `(S_{c−1})`, so does `E ⊗_S F`, and `Tor^S_i(E, F) = 0`.
fn main_proof_path(ctx: &PairContext, hyps: Vec<Hypothesis>) -> Verdict {
    let c = ctx.c();
    let (e, f) = match (quasi_lifting(&ctx.m.module), quasi_lifting(&ctx.n.module)) {
        (Ok(e), Ok(f)) => (e.e, f.e),
        (Err(err), _) | (_, Err(err)) => {
            return Verdict::new("main-proof-path", hyps, Observation::new(ConclusionStatus::Refuted, error_evidence(&err)))
        }
    };
    let inner = PairContext::new(&e, &f, ctx.bound);
    let se = inner.m.serre(c - 1);
    let sf = inner.n.serre(c - 1);
    let st = inner.tensor().serre(c - 1);
    let mut ev = Evidence::new().with("e_serre", se).with("f_serre", sf).with("tensor_serre", st);
    let tor = tor_vanishing(&inner);
    ev.extend(tor.evidence);
    let status = ConclusionStatus::from_bool(se && sf && st).meet(tor.status);
    Verdict::new("main-proof-path", hyps, Observation::new(status, ev))
}

pub fn check_main(m: &FPModule, n: &FPModule, bound: usize) -> Verdict {
    main_theorem(&PairContext::new(m, n, bound))
}

fn cor_mcm(ctx: &PairContext) -> Verdict {
    let c = ctx.c().max(1);
    let d = ctx.d();
    let hyps = vec![
        Hypothesis::check("m_mcm", ctx.m.is_mcm(), Evidence::new().with("depth", depth_datum(ctx.m.depth()))),
        Hypothesis::check("n_mcm", ctx.n.is_mcm(), Evidence::new().with("depth", depth_datum(ctx.n.depth()))),
        Hypothesis::check("dim_at_least_c", d >= c, Evidence::new().with("dim", d).with("c", c)),
        Hypothesis::check(
            "isolated_singularity_probe",
            ctx.m.free_locus_height() >= d && ctx.n.free_locus_height() >= d,
            Evidence::new()
                .with("probe", true)
                .with("m_free_locus_height", ctx.m.free_locus_height())
                .with("n_free_locus_height", ctx.n.free_locus_height()),
        ),
        pairing_hypothesis("eta_c_zero", ctx.eta_c()),
    ];
    let t = ctx.tensor();
    let (i, ii) = (t.serre(c), t.is_mcm());
    let tor = tor_vanishing(ctx);
    let iii = tor.status.is_consistent_with_truth();
    let agree = i == ii && ii == iii;
    let status = if !agree {
        ConclusionStatus::Refuted
    } else if iii {
        tor.status
    } else {
        ConclusionStatus::Certified
    };
    let mut ev = Evidence::new().with("tensor_serre_c", i).with("tensor_mcm", ii).with("tor_vanishes", iii);
    ev.extend(tor.evidence);
    Verdict::new("cor-mcm", hyps, Observation::new(status, ev))
}

pub fn check_cor_mcm(m: &FPModule, n: &FPModule, bound: usize) -> Verdict {
    cor_mcm(&PairContext::new(m, n, bound))
}

fn cor_dao(ctx: &PairContext, e: usize) -> Verdict {
    let codim = ctx.ring.codim();
    let (sm, sn) = (ctx.m.serre(e), ctx.n.serre(e));
    let t = ctx.tensor();
    let st = t.serre(e + 1);
    let h = ctx.m.free_locus_height();
    let hyps = vec![
        Hypothesis::check("e_at_least_codim", e >= codim, Evidence::new().with("e", e).with("codim", codim)),
        Hypothesis::check("modules_serre_e", sm && sn, Evidence::new().with("m_holds", sm).with("n_holds", sn)),
        Hypothesis::check("tensor_serre_e_plus_1", st, serre_evidence(t)),
        Hypothesis::check("m_free_in_height_e", h > e, Evidence::new().with("m_free_locus_height", h)),
    ];
    let tor = tor_vanishing(ctx);
    let df = depth_formula_observation(ctx);
    let mut ev = tor.evidence;
    ev.extend(df.evidence);
    Verdict::new("cor-dao", hyps, Observation::new(tor.status.meet(df.status), ev))
}

pub fn check_cor_dao(m: &FPModule, n: &FPModule, e: usize, bound: usize) -> Verdict {
    cor_dao(&PairContext::new(m, n, bound), e)
}

fn tor1(ctx: &PairContext, c: usize) -> Verdict {
    let codim = ctx.ring.codim();
    let d = ctx.d();
    let c = c.max(1);
    let mut hyps = vec![
        Hypothesis::check("c_at_least_codim", c >= codim, Evidence::new().with("c", c).with("codim", codim)),
        Hypothesis::check("dim_at_least_codim", d >= codim, Evidence::new().with("dim", d).with("codim", codim)),
    ];
    hyps.extend(sp(ctx, c).into_hypotheses());
    if c == 1 {
        let (tm, tn) = (ctx.m.is_torsion_free(), ctx.n.is_torsion_free());
        hyps.push(Hypothesis::check(
            "m_or_n_torsion_free",
            tm || tn,
            Evidence::new().with("m_torsion_free", tm).with("n_torsion_free", tn),
        ));
    }
    let tor1_zero = ctx.profile().as_ref().map(|p| p.is_zero(1));
    match tor1_zero {
        Ok(z) => hyps.push(Hypothesis::check("tor1_zero", z, Evidence::new())),
        Err(e) => hyps.push(Hypothesis::new("tor1_zero", HypStatus::Fails, error_evidence(e))),
    }
    let mut v = Verdict::new("tor1", hyps, tor_vanishing(ctx));
    if codim >= 2 && v.hypotheses_hold() {
        v.sub.push(tor1_chain(ctx, codim, v.hypotheses.clone()));
    }
    v
}

/// Replays the invariants of the pushforward chain `M_0 = M, …, M_{c−1}`:
/// `M_n` is `(S_{c−n−1})`, `M_n ⊗ N` is `(S_{c−n})`, `Tor_i(M_n, N)` has finite
/// length at the bound, and `Tor_i(M_n, N) = 0` for `1 ≤ i ≤ n + 1`.
fn tor1_chain(ctx: &PairContext, c: usize, hyps: Vec<Hypothesis>) -> Verdict {
    let chain = match pushforward_chain(&ctx.m.module, c - 1) {
        Ok(ch) => ch,
        Err(e) => return Verdict::new("tor1-chain", hyps, Observation::new(ConclusionStatus::Refuted, error_evidence(&e))),
    };
    let mut ev = Evidence::new();
    let mut ok = true;
    for (n, mn) in chain.modules.iter().enumerate() {
        let inner = PairContext::new(mn, &ctx.n.module, ctx.bound);
        let s1 = inner.m.serre(c - n - 1);
        let s2 = inner.tensor().serre(c - n);
        let (s3, s4) = match inner.profile() {
            Ok(p) => (p.lengths[p.bound].is_some(), p.vanishes_on(1, n + 1)),
            Err(_) => (false, false),
        };
        ev.push(&format!("stage_{n}"), Datum::Seq(vec![Some(s1 as i64), Some(s2 as i64), Some(s3 as i64), Some(s4 as i64)]));
        ok &= s1 && s2 && s3 && s4;
    }
    Verdict::new("tor1-chain", hyps, Observation::new(ConclusionStatus::from_bool(ok), ev))
}

pub fn check_tor1(m: &FPModule, n: &FPModule, c: usize, bound: usize) -> Verdict {
    tor1(&PairContext::new(m, n, bound), c)
}

fn hw(ctx: &PairContext) -> Verdict {
    let hyps = vec![hypersurface_hypothesis(ctx)];
    if !ctx.ring.is_hypersurface() {
        return Verdict::group("hw", hyps, Vec::new());
    }
    Verdict::group("hw", hyps, vec![hw1_main(ctx), second_rigidity(ctx), hw2_fin_pd(ctx)])
}

fn rank_evidence(f: &Facts) -> Evidence {
    match f.rank() {
        Ok(Some(r)) => Evidence::new().with("rank", *r),
        Ok(None) => Evidence::new().with("rank", "none"),
        Err(e) => error_evidence(e),
    }
}

fn mcm_or_zero(f: &Facts) -> bool {
    f.is_zero() || f.is_mcm()
}

fn hw1_main(ctx: &PairContext) -> Verdict {
    let mut rank_ev = rank_evidence(&ctx.m);
    rank_ev.extend(rank_evidence(&ctx.n));
    let t = ctx.tensor();
    let hyps = vec![
        Hypothesis::check("m_or_n_has_rank", ctx.m.has_rank() || ctx.n.has_rank(), rank_ev),
        Hypothesis::check("tensor_mcm", t.is_mcm(), Evidence::new().with("depth", depth_datum(t.depth()))),
    ];
    let both = mcm_or_zero(&ctx.m) && mcm_or_zero(&ctx.n);
    let free = ctx.m.is_free() || ctx.n.is_free() || ctx.m.is_zero() || ctx.n.is_zero();
    let ev = Evidence::new().with("both_mcm", both).with("one_free", free);
    Verdict::new("hw1-main", hyps, Observation::new(ConclusionStatus::from_bool(both && free), ev))
}

fn second_rigidity(ctx: &PairContext) -> Verdict {
    let t = ctx.tensor();
    let hyps = vec![
        Hypothesis::check("modules_nonzero", !ctx.m.is_zero() && !ctx.n.is_zero(), Evidence::new()),
        Hypothesis::check("tensor_reflexive", t.is_reflexive(), Evidence::new()),
        Hypothesis::check("n_has_rank", ctx.n.has_rank(), rank_evidence(&ctx.n)),
    ];
    let tor = tor_vanishing(ctx);
    let (mr, nt) = (ctx.m.is_reflexive(), ctx.n.is_torsion_free());
    let mut ev = tor.evidence;
    ev.push("m_reflexive", mr);
    ev.push("n_torsion_free", nt);
    Verdict::new("second-rigidity", hyps, Observation::new(tor.status.meet(ConclusionStatus::from_bool(mr && nt)), ev))
}

fn hw2_fin_pd(ctx: &PairContext) -> Verdict {
    let hyp = match ctx.profile() {
        Ok(p) => {
            let ev = profile_evidence(p);
            match certificate(ctx, p) {
                Some(cert) => Hypothesis::new(
                    "tor_eventually_zero",
                    HypStatus::Holds,
                    ev.with("rigidity_rule", format!("{:?}", cert.rule)).with("from", cert.from),
                ),
                None => Hypothesis::new("tor_eventually_zero", HypStatus::Fails, ev),
            }
        }
        Err(e) => Hypothesis::new("tor_eventually_zero", HypStatus::Fails, error_evidence(e)),
    };
    let (pm, pn) = (ctx.m.pd(), ctx.n.pd());
    let ok = pm != ProjDim::Infinite || pn != ProjDim::Infinite;
    let ev = Evidence::new().with("pd_m", pm.finite()).with("pd_n", pn.finite());
    Verdict::new("hw2-fin-pd", vec![hyp], Observation::new(ConclusionStatus::from_bool(ok), ev))
}

pub fn check_hw(m: &FPModule, n: &FPModule, bound: usize) -> Verdict {
    hw(&PairContext::new(m, n, bound))
}

/// Tensor powers `⊗^1 M, …, ⊗^n M`.
fn tensor_powers(m: &FPModule, n: usize) -> Vec<FPModule> {
    let mut out = vec![m.minimalize()];
    for _ in 1..n {
        let next = out.last().unwrap().tensor(m).expect("same ring");
        out.push(next);
    }
    out
}

/// The pd bound for tensor powers and its corrected freeness consequence.
pub fn check_powers(m: &FPModule, n: usize, bound: usize) -> Verdict {
    let ring = m.ring().clone();
    let hs = Hypothesis::check("hypersurface", ring.is_hypersurface(), Evidence::new());
    let n_ok = Hypothesis::check("n_at_least_2", n >= 2, Evidence::new().with("n", n));
    if !ring.is_hypersurface() || n < 2 {
        return Verdict::group("powers", vec![hs, n_ok], Vec::new());
    }
    let d = ring.dim();
    let bound = bound.max(d + 4);
    let facts = Facts::new(m.clone());
    let powers = tensor_powers(m, n);
    let top = Facts::new(powers[n - 1].clone());
    let pd = facts.pd();

    let mut thetas = Vec::new();
    let mut theta_ok = true;
    for p in &powers[..n - 1] {
        match theta(m, p, bound) {
            Ok(t) => {
                theta_ok &= t.is_zero();
                thetas.push(t.value.map(|v| *v.numer() as i64));
            }
            Err(_) => {
                theta_ok = false;
                thetas.push(None);
            }
        }
    }
    let flh = facts.free_locus_height();
    let torsion: Vec<Option<i64>> = powers.iter().map(|p| Some(p.is_torsion_free() as i64)).collect();
    let powers_hyps = vec![
        Hypothesis::check("dim_at_least_1", d >= 1, Evidence::new().with("dim", d)),
        Hypothesis::check(
            "finite_pd_off_maximal_ideal",
            flh >= d,
            Evidence::new().with("probe", true).with("free_locus_height", flh),
        ),
        Hypothesis::check(
            "theta_vanishes_on_powers",
            theta_ok,
            Evidence::new().with("theta_m_power_j", Datum::Seq(thetas)),
        ),
        Hypothesis::check("top_power_torsion_free", top.is_torsion_free(), Evidence::new().with("powers_torsion_free", Datum::Seq(torsion))),
    ];
    let pd_ok = match pd {
        ProjDim::Finite(p) => n * p < d,
        ProjDim::Infinite => false,
    };
    let powers_verdict = Verdict::new(
        "prop-powers",
        powers_hyps,
        Observation::new(ConclusionStatus::from_bool(pd_ok), Evidence::new().with("pd", pd.finite())),
    );

    let rank_ev = rank_evidence(&facts);
    let miller_hyps = vec![
        Hypothesis::check("m_has_rank", facts.has_rank(), rank_ev),
        Hypothesis::check("n_at_least_max_2_d_minus_1", n >= 2 && n + 1 >= d, Evidence::new().with("n", n).with("dim", d)),
        Hypothesis::check("top_power_reflexive", top.is_reflexive(), Evidence::new()),
    ];
    let free = facts.is_free() || facts.is_zero();
    let miller_verdict = Verdict::new(
        "hyp-power",
        miller_hyps,
        Observation::new(ConclusionStatus::from_bool(free), Evidence::new().with("m_free", free)),
    );
    Verdict::group("powers", vec![hs, n_ok], vec![powers_verdict, miller_verdict])
}

/// Every pair checker on `(M, N)` sharing one set of computed invariants.
pub fn check_pair(m: &FPModule, n: &FPModule, bound: usize) -> Vec<Verdict> {
    let ctx = PairContext::new(m, n, bound);
    let c = ctx.ring.codim().max(1);
    let mut out = vec![depth_formula(&ctx), main_theorem(&ctx), cor_mcm(&ctx), cor_dao(&ctx, c), tor1(&ctx, c)];
    if ctx.ring.is_hypersurface() {
        out.push(lemma_hypersurface(&ctx));
        out.push(hw(&ctx));
    }
    out
}
