use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::polyalg::{Poly, PolyRing};

fn setup() -> (Ambient, PolyRing) {
    let r = PolyRing::standard(101, &["x", "y"]).unwrap();
    (Ambient::free(r.clone()), r)
}

fn ideal(r: &PolyRing, gens: &[&str]) -> Vec<Vector> {
    gens.iter().map(|g| Vector::from_poly(&r.parse(g).unwrap(), 0, 0)).collect()
}

fn basis_strings(amb: &Ambient, gb: &GroebnerBasis) -> Vec<alloc::string::String> {
    gb.elems().iter().map(|v| amb.poly().format_pretty(&v.component(0))).collect()
}

#[test]
fn single_monomial_basis() {
    let (amb, r) = setup();
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x*y"])).unwrap();
    assert_eq!(basis_strings(&amb, &gb), vec!["x*y"]);
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x^2", "x*y"])).unwrap();
    assert_eq!(basis_strings(&amb, &gb), vec!["x*y", "x^2"]);
}

#[test]
fn one_buchberger_step() {
    let (amb, r) = setup();
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x^2 + y^2", "x*y"])).unwrap();
    assert_eq!(basis_strings(&amb, &gb), vec!["x*y", "x^2 + y^2", "y^3"]);
    let y3 = Vector::from_poly(&r.parse("y^3").unwrap(), 0, 0);
    assert!(gb.normal_form(&amb, &y3).unwrap().is_zero());
}

#[test]
fn normal_forms() {
    let (amb, r) = setup();
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x*y"])).unwrap();
    let f = Vector::from_poly(&r.parse("x^2*y^3").unwrap(), 0, 0);
    assert!(gb.normal_form(&amb, &f).unwrap().is_zero());
    let g = Vector::from_poly(&r.parse("x^2 + y^2").unwrap(), 0, 0);
    assert_eq!(gb.normal_form(&amb, &g).unwrap(), g);
}

#[test]
fn inhomogeneous_input_rejected() {
    let (amb, r) = setup();
    assert!(groebner_basis(&amb, &[0], &ideal(&r, &["x^2 + y"])).is_err());
}

fn check_syz(amb: &Ambient, gens: &[Vector], syz: &[Vector]) {
    let f = amb.field();
    for s in syz {
        let mut acc = Vector::zero();
        for (i, g) in gens.iter().enumerate() {
            acc = f.v_add(&acc, &f.v_mul_poly(g, &s.component(i)));
        }
        assert!(amb.reduce_mod_ideal(&acc).is_zero());
    }
}

#[test]
fn koszul_and_domain_syzygies() {
    let (amb, r) = setup();
    let gens = ideal(&r, &["x", "y"]);
    let syz = minimal_syzygies(&amb, &[0], &gens, &[1, 1]).unwrap();
    assert_eq!(syz.len(), 1);
    check_syz(&amb, &gens, &syz);
    let s = &syz[0];
    let (a, b) = (s.component(0), s.component(1));
    assert_eq!(r.add(&r.mul(&a, &r.var(0)), &r.mul(&b, &r.var(1))), Poly::zero());
    assert_eq!(a.degree(), Some(1));

    let gens = ideal(&r, &["x"]);
    assert!(minimal_syzygies(&amb, &[0], &gens, &[1]).unwrap().is_empty());

    let gens = ideal(&r, &["x^2", "x*y"]);
    let syz = minimal_syzygies(&amb, &[0], &gens, &[2, 2]).unwrap();
    assert_eq!(syz.len(), 1);
    check_syz(&amb, &gens, &syz);
    let s = &syz[0];
    assert_eq!(amb.poly().monic(&s.component(0)), r.parse("y").unwrap());
    assert_eq!(amb.poly().monic(&s.component(1)), r.parse("x").unwrap());
}

#[test]
fn syzygies_over_quotient() {
    let r = PolyRing::standard(101, &["x", "y"]).unwrap();
    let amb = Ambient::new(r.clone(), &[r.parse("x*y").unwrap()]).unwrap();
    // over the node, ann(x) = (y)
    let gens = ideal(&r, &["x"]);
    let syz = minimal_syzygies(&amb, &[0], &gens, &[1]).unwrap();
    assert_eq!(syz.len(), 1);
    assert_eq!(amb.poly().monic(&syz[0].component(0)), r.parse("y").unwrap());
}

#[test]
fn hilbert_examples() {
    let (amb, r) = setup();
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x*y"])).unwrap();
    let hs = gb.hilbert(&amb);
    assert_eq!(hs.dim(), Some(1));
    assert_eq!(hs.values(0, 4), vec![1, 2, 2, 2, 2]);
    let gb = groebner_basis(&amb, &[0], &ideal(&r, &["x", "y"])).unwrap();
    let hs = gb.hilbert(&amb);
    assert_eq!(hs.dim(), Some(0));
    assert_eq!(hs.values(0, 3), vec![1, 0, 0, 0]);
    let gb = groebner_basis(&amb, &[0], &[]).unwrap();
    let hs = gb.hilbert(&amb);
    assert_eq!(hs.dim(), Some(2));
    assert_eq!(hs.values(0, 3), vec![1, 2, 3, 4]);
}

#[test]
fn minimal_generator_selection() {
    let (amb, r) = setup();
    let gens = ideal(&r, &["x", "x^2", "y", "x*y + y^2"]);
    assert_eq!(minimal_generators(&amb, &[0], &gens).unwrap(), vec![0, 2]);
}

#[test]
fn lifting_into_generators() {
    let (amb, r) = setup();
    let gens = ideal(&r, &["x^2 + y^2", "x*y"]);
    let target = Vector::from_poly(&r.parse("y^3").unwrap(), 0, 0);
    let l = lift(&amb, &[0], &gens, &[2, 2], core::slice::from_ref(&target)).unwrap().unwrap();
    let f = amb.field();
    let back = f.v_add(
        &f.v_mul_poly(&gens[0], &l[0].component(0)),
        &f.v_mul_poly(&gens[1], &l[0].component(1)),
    );
    assert_eq!(back, target);
    let outside = Vector::from_poly(&r.parse("x^2").unwrap(), 0, 0);
    assert!(lift(&amb, &[0], &gens, &[2, 2], &[outside]).unwrap().is_none());
}
