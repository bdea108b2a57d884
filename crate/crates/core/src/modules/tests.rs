use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::polyalg::PolyRing;

fn node() -> Arc<CIRing> {
    let q = PolyRing::standard(101, &["x", "y"]).unwrap();
    let xy = q.parse("x*y").unwrap();
    Arc::new(CIRing::new(q, vec![xy], None).unwrap())
}

fn cyc(r: &Arc<CIRing>, gens: &[&str]) -> FPModule {
    let g: Vec<Poly> = gens.iter().map(|s| r.poly().parse(s).unwrap()).collect();
    FPModule::cyclic(r.clone(), &g).unwrap()
}

fn p(r: &Arc<CIRing>, s: &str) -> Poly {
    r.poly().parse(s).unwrap()
}

/// Multiplication by a form of degree `d` as a map `R(-d-shift) → R(-shift)`.
fn mult(r: &Arc<CIRing>, f: &str, shift: i32) -> ModuleMap {
    let f = p(r, f);
    let d = f.degree().unwrap() as i32;
    let src = FPModule::free(r.clone(), vec![shift + d]);
    let tgt = FPModule::free(r.clone(), vec![shift]);
    ModuleMap::new(src, tgt, vec![Vector::from_poly(&f, 0, shift)]).unwrap()
}

#[test]
fn minimalize_examples() {
    let r = node();
    let k = FPModule::residue_field(r.clone());
    assert!(k.is_minimal());
    assert_eq!(k.num_generators(), 1);

    let rr = FPModule::from_columns(r.clone(), vec![0, 0], &[vec![Poly::constant(1), Poly::zero()]]).unwrap();
    let m = rr.minimalize();
    assert_eq!(m.ngens(), 1);
    assert!(m.relations().is_empty());

    let m = FPModule::from_columns(
        r.clone(),
        vec![0, 1],
        &[vec![p(&r, "x"), Poly::zero()], vec![p(&r, "y"), Poly::constant(1)]],
    )
    .unwrap();
    let (mm, iso) = m.minimalize_with_map();
    assert_eq!(mm.ngens(), 1);
    assert!(mm.same_hilbert(&cyc(&r, &["x"])));
    assert!(iso.is_well_defined());
    assert!(iso.is_surjective() && iso.is_injective());
}

#[test]
fn subquotient_examples() {
    let r = node();
    let m = cyc(&r, &["x^2"]);
    let zero = ModuleMap::zero(&m, &m);
    let h = subquotient(&zero, &zero).unwrap();
    assert!(h.same_hilbert(&m));
    let id = ModuleMap::identity(&m);
    assert!(subquotient(&id, &zero).unwrap().is_zero());
    assert_eq!(subquotient(&id, &id).unwrap_err(), Error::CompositionNotZero);

    // ker(x) = (y) = im(y): the homology vanishes
    let g = mult(&r, "x", 0);
    let f = mult(&r, "y", 1);
    assert!(subquotient(&g, &f).unwrap().is_zero());
    // against im(y^2) one copy of k survives, in degree 2
    let h = subquotient(&g, &mult(&r, "y^2", 1)).unwrap();
    assert_eq!(h.length(), Some(1));
    assert_eq!(h.hilbert().values(0, 3), vec![0, 0, 1, 0]);
}

#[test]
fn tensor_examples() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let ry = cyc(&r, &["y"]);
    let t = rx.tensor(&ry).unwrap();
    assert_eq!(t.length(), Some(1));
    let free = FPModule::ring_module(r.clone());
    assert!(rx.tensor(&free).unwrap().same_hilbert(&rx));
    assert!(rx.tensor(&rx).unwrap().same_hilbert(&rx));
}

#[test]
fn dual_examples() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let d = rx.dual();
    assert_eq!(d.mstar.ngens(), 1);
    assert!(d.mstar.same_hilbert(&rx.twist(-1)));
    assert!(d.kappa.is_well_defined());

    let free = FPModule::free(r.clone(), vec![0, 2]);
    let d = free.dual();
    assert!(d.mstar.same_hilbert(&FPModule::free(r.clone(), vec![0, -2])));
    assert!(d.kappa.is_injective() && d.kappa.is_surjective());

    let k = FPModule::residue_field(r.clone());
    assert!(k.dual().mstar.is_zero());
}

#[test]
fn fitting_examples() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let f0 = rx.fitting_ideal(0);
    assert!(f0.contains(&p(&r, "x")) && !f0.contains(&p(&r, "y")));
    assert!(rx.fitting_ideal(1).is_unit());
    assert!(rx.fitting_ideal(-1).is_zero());
    let k = FPModule::residue_field(r.clone());
    let f0 = k.fitting_ideal(0);
    assert!(f0.contains(&p(&r, "x")) && f0.contains(&p(&r, "y")) && !f0.is_unit());
}

#[test]
fn dim_length_examples() {
    let r = node();
    let k = FPModule::residue_field(r.clone());
    assert_eq!((k.dim(), k.length()), (Some(0), Some(1)));
    let rx = cyc(&r, &["x"]);
    assert_eq!((rx.dim(), rx.length()), (Some(1), None));
    assert_eq!(rx.hilbert().values(0, 3), vec![1, 1, 1, 1]);
    let (t, tf) = cyc(&r, &["x^2"]).torsion_parts();
    assert_eq!((t.dim(), t.length()), (Some(0), Some(1)));
    assert!(tf.same_hilbert(&rx));
    let z = FPModule::zero(r.clone());
    assert_eq!((z.dim(), z.length()), (None, Some(0)));
}

#[test]
fn torsion_and_reflexivity() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    assert!(rx.is_torsion_free() && rx.is_reflexive());
    assert!(!cyc(&r, &["x^2"]).is_torsion_free());
    let k = FPModule::residue_field(r.clone());
    let (t, tf) = k.torsion_parts();
    assert!(t.same_hilbert(&k) && tf.is_zero());
    assert!(!k.is_reflexive());
}

#[test]
fn annihilators_and_ideals() {
    let r = node();
    let rx = cyc(&r, &["x"]);
    let ann = rx.annihilator();
    assert!(ann.contains(&p(&r, "x")) && !ann.contains(&p(&r, "y")));
    let m = cyc(&r, &["x"]).direct_sum(&cyc(&r, &["y"])).unwrap();
    let ann = m.annihilator();
    assert!(ann.contains(&p(&r, "x*y")));
    assert!(!ann.contains(&p(&r, "x")) && !ann.contains(&p(&r, "y")));
    let i = Ideal::new(r.clone(), vec![p(&r, "x")]);
    let a = i.annihilator();
    assert!(a.contains(&p(&r, "y")) && !a.contains(&p(&r, "x")));
    let j = Ideal::new(r.clone(), vec![p(&r, "x^3")]);
    assert!(j.radical_contains(&p(&r, "x")));
    assert!(!j.radical_contains(&p(&r, "y")));
}
