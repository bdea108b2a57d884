use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::homres::tor_profile;
use crate::polyalg::{Poly, PolyRing};
use crate::rings::CIRing;

const B: usize = 10;

fn ring(rels: &[&str], primes: Option<&[&[&str]]>) -> Arc<CIRing> {
    let q = PolyRing::standard(101, &["x", "y"]).unwrap();
    let rels = rels.iter().map(|s| q.parse(s).unwrap()).collect();
    let primes = primes.map(|ps| ps.iter().map(|p| p.iter().map(|s| q.parse(s).unwrap()).collect()).collect());
    Arc::new(CIRing::new(q, rels, primes).unwrap())
}

fn node() -> Arc<CIRing> {
    ring(&["x*y"], Some(&[&["x"], &["y"]]))
}

fn cyc(r: &Arc<CIRing>, gens: &[&str]) -> FPModule {
    let g: Vec<Poly> = gens.iter().map(|s| r.poly().parse(s).unwrap()).collect();
    FPModule::cyclic(r.clone(), &g).unwrap()
}

fn free(r: &Arc<CIRing>) -> FPModule {
    FPModule::free(r.clone(), vec![0])
}

fn status(v: &Verdict, name: &str) -> HypStatus {
    v.hypothesis(name).unwrap_or_else(|| panic!("no hypothesis {name}")).status
}

#[test]
fn sp_reports() {
    let r = node();
    let (rx, ry) = (cyc(&r, &["x"]), cyc(&r, &["y"]));
    let sp = check_sp(&rx, &rx, 1, B);
    assert!(sp.holds());
    assert_eq!(sp.tail.status, HypStatus::Holds);
    let sp = check_sp(&rx, &ry, 1, B);
    assert!(sp.tensor_serre.fails());
    assert!(check_sp(&free(&r), &ry, 1, B).holds());
}

#[test]
fn rigidity_rules() {
    let r = node();
    let (m, n) = (cyc(&r, &["x+y"]), cyc(&r, &["x"]));
    let p = tor_profile(&m, &n, B).unwrap();
    assert!(p.vanishes_on(1, B));
    assert!(rigidity_infer(&m, &n, &p).unwrap().all_positive());
    let rx = cyc(&r, &["x"]);
    let p = tor_profile(&rx, &rx, B).unwrap();
    assert_eq!(p.lengths[1..5], [Some(1), Some(0), Some(1), Some(0)]);
    assert!(rigidity_infer(&rx, &rx, &p).is_none());
    let p = tor_profile(&free(&r), &rx, B).unwrap();
    assert_eq!(rigidity_infer(&free(&r), &rx, &p).unwrap().rule, RigidityRule::Free);
}

#[test]
fn depth_formula_examples() {
    let r = node();
    let v = check_depth_formula(&cyc(&r, &["x+y"]), &cyc(&r, &["x"]), B);
    assert_eq!(v.conclusion, ConclusionStatus::Certified);
    let k = FPModule::residue_field(r.clone());
    assert_eq!(check_depth_formula(&free(&r), &k, B).conclusion, ConclusionStatus::Certified);
    let rx = cyc(&r, &["x"]);
    let v = check_depth_formula(&rx, &rx, B);
    assert_eq!(v.conclusion, ConclusionStatus::NotApplicable);
    assert!(!v.red_alarm());
}

#[test]
fn lemma_examples() {
    let r = node();
    let (rx, rx2) = (cyc(&r, &["x"]), cyc(&r, &["x^2"]));
    let v = check_lemma_hypersurface(&free(&r), &rx, B);
    assert_eq!(v.conclusion, ConclusionStatus::Certified);
    let v = check_lemma_hypersurface(&rx, &rx2, B);
    assert_eq!(status(&v, "theta_zero"), HypStatus::Fails);
    assert_eq!(v.observed.status, ConclusionStatus::Refuted);
    assert!(!v.red_alarm());
    let v = check_lemma_hypersurface(&rx, &rx, B);
    assert_eq!(status(&v, "sp_tensor_serre"), HypStatus::Holds);
    assert_eq!(status(&v, "theta_zero"), HypStatus::Fails);
}

#[test]
fn main_examples() {
    let r = node();
    let (rx, ry) = (cyc(&r, &["x"]), cyc(&r, &["y"]));
    assert_eq!(check_main(&free(&r), &rx, B).conclusion, ConclusionStatus::Certified);
    let m = rx.direct_sum(&ry).unwrap();
    let v = check_main(&m, &rx, B);
    assert_eq!(status(&v, "eta_c_zero"), HypStatus::Holds);
    assert_eq!(status(&v, "sp_tensor_serre"), HypStatus::Fails);
    assert_eq!(v.conclusion, ConclusionStatus::NotApplicable);
    let a = ring(&["x^2", "y^2"], None);
    let k = FPModule::residue_field(a);
    let v = check_main(&k, &k, B);
    assert_eq!(status(&v, "dim_at_least_c"), HypStatus::Fails);
}

#[test]
fn cor_mcm_examples() {
    let r = node();
    let (rx, ry) = (cyc(&r, &["x"]), cyc(&r, &["y"]));
    let v = check_cor_mcm(&rx, &ry, B);
    assert!(!v.red_alarm());
    assert_eq!(v.observed.evidence.get("tensor_mcm"), Some(&Datum::Bool(false)));
    assert_eq!(v.observed.evidence.get("tor_vanishes"), Some(&Datum::Bool(false)));
    let v = check_cor_mcm(&free(&r), &rx, B);
    assert_eq!(v.conclusion, ConclusionStatus::Certified);
    let v = check_cor_mcm(&rx, &rx, B);
    assert_eq!(status(&v, "eta_c_zero"), HypStatus::Fails);
    assert_eq!(v.conclusion, ConclusionStatus::NotApplicable);
}

#[test]
fn cor_dao_examples() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let v = check_cor_dao(&rx, &rx, 1, B);
    assert_eq!(status(&v, "m_free_in_height_e"), HypStatus::Fails);
    assert_eq!(check_cor_dao(&free(&r), &rx, 1, B).conclusion, ConclusionStatus::Certified);
    let a = ring(&["x^2", "y^2"], None);
    let k = FPModule::residue_field(a);
    let v = check_cor_dao(&k, &k, 2, B);
    assert_eq!(status(&v, "modules_serre_e"), HypStatus::Holds);
    assert_eq!(status(&v, "m_free_in_height_e"), HypStatus::Fails);
}

#[test]
fn powers_examples() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let v = check_powers(&rx, 2, B);
    let (powers, miller) = (&v.sub[0], &v.sub[1]);
    assert_eq!(status(powers, "theta_vanishes_on_powers"), HypStatus::Fails);
    assert_eq!(status(miller, "m_has_rank"), HypStatus::Fails);
    assert_eq!(status(miller, "top_power_reflexive"), HypStatus::Holds);
    assert_eq!(miller.observed.status, ConclusionStatus::Refuted);
    assert!(!v.red_alarm());
    let v = check_powers(&free(&r), 3, B);
    assert_eq!(v.sub[1].conclusion, ConclusionStatus::Certified);
}

#[test]
fn tor1_examples() {
    let r = node();
    let (rx, ry, rx2) = (cyc(&r, &["x"]), cyc(&r, &["y"]), cyc(&r, &["x^2"]));
    assert_eq!(check_tor1(&free(&r), &rx, 1, B).conclusion, ConclusionStatus::Certified);
    let v = check_tor1(&rx, &ry, 1, B);
    assert_eq!(status(&v, "sp_tensor_serre"), HypStatus::Fails);
    assert_eq!(v.conclusion, ConclusionStatus::NotApplicable);
    let v = check_tor1(&rx, &rx2, 1, B);
    assert_eq!(status(&v, "tor1_zero"), HypStatus::Fails);
}

#[test]
fn hw_examples() {
    let r = node();
    let (rx, m) = (cyc(&r, &["x"]), cyc(&r, &["x+y"]));
    let v = check_hw(&rx, &rx, B);
    assert_eq!(v.sub[0].conclusion, ConclusionStatus::NotApplicable);
    assert!(!v.red_alarm());
    let v = check_hw(&free(&r), &rx, B);
    assert_eq!(v.sub[0].conclusion, ConclusionStatus::Certified);
    let v = check_hw(&m, &rx, B);
    assert_eq!(v.sub[2].conclusion, ConclusionStatus::Certified);
}

#[test]
fn no_alarms_on_small_pairs() {
    let r = node();
    let mods =
        [free(&r), cyc(&r, &["x"]), cyc(&r, &["y"]), cyc(&r, &["x^2"]), cyc(&r, &["x+y"]), FPModule::residue_field(r.clone())];
    for m in &mods {
        for n in &mods {
            for v in check_pair(m, n, B) {
                assert!(!v.red_alarm(), "{v:?}");
            }
        }
    }
}
