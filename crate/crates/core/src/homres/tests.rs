use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::modules::FPModule;
use crate::polyalg::{Poly, PolyRing};
use crate::rings::CIRing;

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

#[test]
fn betti_numbers() {
    let r = node();
    let k = FPModule::residue_field(r.clone());
    assert_eq!(Resolution::new(&k, 4).betti_numbers(), vec![1, 2, 2, 2, 2]);
    let rx = cyc(&r, &["x"]);
    assert_eq!(Resolution::new(&rx, 5).betti_numbers(), vec![1; 6]);
    let a = ring(&["x^2", "y^2"], None);
    let k = FPModule::residue_field(a);
    assert_eq!(Resolution::new(&k, 4).betti_numbers(), vec![1, 2, 3, 4, 5]);
}

#[test]
fn differentials_compose_to_zero() {
    let a = ring(&["x^2", "y^2"], None);
    let k = FPModule::residue_field(a.clone());
    let res = Resolution::new(&k, 5);
    let amb = a.ambient();
    let f = amb.field();
    use crate::groebner::VectorOps;
    for i in 1..5 {
        for col in res.differential(i + 1) {
            let mut acc = crate::groebner::Vector::zero();
            for (s, c) in res.differential(i).iter().enumerate() {
                acc = f.v_add(&acc, &f.v_mul_poly(c, &col.component(s)));
            }
            assert!(amb.reduce_mod_ideal(&acc).is_zero());
            assert!(col.has_unit_entry().is_none());
        }
    }
}

#[test]
fn node_tor_lengths() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let rx2 = cyc(&r, &["x^2"]);
    let p = tor_profile(&rx, &rx2, 6).unwrap();
    assert_eq!(p.lengths[1..].to_vec(), vec![Some(1), Some(0), Some(1), Some(0), Some(1), Some(0)]);
    assert!(p.periodic.is_some());
    let p = tor_profile(&rx, &rx, 6).unwrap();
    assert_eq!(p.lengths[1..].to_vec(), vec![Some(1), Some(0), Some(1), Some(0), Some(1), Some(0)]);
    let free = FPModule::ring_module(r.clone());
    let p = tor_profile(&free, &rx2, 4).unwrap();
    assert!(p.vanishes_on(1, 4));
    assert!(p.periodic_zero_tail(1));
}

#[test]
fn explicit_tor_and_ext_modules_match_fast_path() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let rx2 = cyc(&r, &["x^2"]);
    let mut res = Resolution::new(&rx, 5);
    for i in 0..4 {
        assert_eq!(tor_module(&mut res, &rx2, i).hilbert(), tor_hilbert(&mut res, &rx2, i));
        assert_eq!(ext_module(&mut res, &rx2, i).hilbert(), ext_hilbert(&mut res, &rx2, i));
    }
    let k = FPModule::residue_field(r.clone());
    let mut res = Resolution::new(&k, 4);
    for i in 0..3 {
        assert_eq!(ext_module(&mut res, &rx, i).hilbert(), ext_hilbert(&mut res, &rx, i));
    }
}

#[test]
fn depth_examples() {
    let r = node();
    assert_eq!(depth(&FPModule::residue_field(r.clone())), Some(0));
    assert_eq!(depth(&cyc(&r, &["x"])), Some(1));
    assert_eq!(depth(&FPModule::zero(r.clone())), None);
    let a = ring(&["x^2", "y^2"], None);
    assert_eq!(depth(&FPModule::ring_module(a)), Some(0));
}

#[test]
fn pd_examples() {
    let r = node();
    assert_eq!(pd(&FPModule::residue_field(r.clone())), ProjDim::Infinite);
    assert_eq!(pd(&cyc(&r, &["x+y"])), ProjDim::Finite(1));
    assert_eq!(pd(&FPModule::ring_module(r.clone())), ProjDim::Finite(0));
}

#[test]
fn serre_examples() {
    let r = node();
    assert!(serre_check(&cyc(&r, &["x"]), 3).holds);
    assert!(!serre_check(&FPModule::residue_field(r.clone()), 1).holds);
    assert!(serre_check(&FPModule::zero(r.clone()), 5).holds);
}

#[test]
fn status_examples() {
    let r = node();
    let f = status_flags(&cyc(&r, &["x"]));
    assert!(f.is_torsion_free && f.is_reflexive && f.is_mcm);
    assert!(!status_flags(&cyc(&r, &["x^2"])).is_torsion_free);
    let f = status_flags(&FPModule::residue_field(r.clone()));
    assert!(!f.is_torsion_free && !f.is_reflexive && !f.is_mcm);
}

#[test]
fn free_locus_examples() {
    let r = node();
    assert_eq!(free_locus_height(&FPModule::free(r.clone(), vec![0, 1])), 2);
    assert_eq!(free_locus_height(&cyc(&r, &["x"])), 1);
    assert_eq!(free_locus_height(&FPModule::residue_field(r.clone())), 1);
}

#[test]
fn rank_examples() {
    let r = node();
    assert_eq!(rank_of(&FPModule::ring_module(r.clone())).unwrap(), Some(1));
    assert_eq!(rank_of(&cyc(&r, &["x"])).unwrap(), None);
    let m = cyc(&r, &["x"]).direct_sum(&cyc(&r, &["y"])).unwrap();
    assert_eq!(rank_of(&m).unwrap(), Some(1));
    assert_eq!(rank_of(&FPModule::residue_field(r.clone())).unwrap(), Some(0));
    let bare = ring(&["x*y"], None);
    assert!(rank_of(&FPModule::ring_module(bare)).is_err());
}

#[test]
fn gorenstein_probe() {
    for r in [node(), ring(&["x^2", "y^2"], None), ring(&["x^3 + y^3"], None)] {
        let d = r.dim();
        let rr = FPModule::ring_module(r.clone());
        let mut res = residue_resolution(&rr);
        for i in 0..=d {
            let l = ext_hilbert(&mut res, &rr, i).length();
            assert_eq!(l, Some(if i == d { 1 } else { 0 }), "i = {i}");
        }
    }
}

#[test]
fn support_containment() {
    let r = node();
    let k = FPModule::residue_field(r.clone());
    let rx = cyc(&r, &["x"]);
    let ry = cyc(&r, &["y"]);
    assert!(support_contained(&k, &rx));
    assert!(!support_contained(&rx, &ry));
    assert!(support_contained(&rx, &FPModule::ring_module(r.clone())));
}
