//! Gröbner-based results against the dense linear-algebra oracle.

use std::sync::Arc;

use cihom_core::groebner::{minimal_generators, quotient_hilbert, syzygies, Vector};
use cihom_core::homres::{tor_hilbert, Resolution};
use cihom_core::modules::FPModule;
use cihom_core::polyalg::{Poly, PolyRing};
use cihom_core::rings::CIRing;
use cihom_testkit::{hilbert_function, monomials, syzygy_dims, tor_dims};
use proptest::prelude::*;

fn ring(id: usize) -> Arc<CIRing> {
    let (vars, rels): (&[&str], &[&str]) = match id {
        0 => (&["x", "y"], &["x*y"]),
        1 => (&["x", "y"], &["x^2", "y^2"]),
        2 => (&["x", "y", "z"], &["x^2+y*z"]),
        _ => (&["x", "y", "z"], &["x*y", "z^2"]),
    };
    let q = PolyRing::standard(101, vars).unwrap();
    let rels = rels.iter().map(|s| q.parse(s).unwrap()).collect();
    Arc::new(CIRing::new(q, rels, None).unwrap())
}

/// Homogeneous polynomial of degree `d` with coefficients drawn from `coeffs`.
fn poly_of(q: &PolyRing, d: i32, coeffs: &mut impl Iterator<Item = u32>) -> Poly {
    let terms = monomials(q, d).into_iter().filter_map(|m| match coeffs.next().unwrap_or(0) {
        c @ 1..=3 => Some((m, c)),
        _ => None,
    });
    q.from_terms(terms.collect())
}

#[derive(Clone, Debug)]
struct Spec {
    ring: usize,
    gens: Vec<i32>,
    rel_degs: Vec<i32>,
    coeffs: Vec<u32>,
}

fn build(s: &Spec) -> FPModule {
    let r = ring(s.ring);
    let q = r.poly().clone();
    let mut it = s.coeffs.iter().copied();
    let cols: Vec<Vec<Poly>> =
        s.rel_degs.iter().map(|&e| s.gens.iter().map(|&a| poly_of(&q, e - a, &mut it)).collect()).collect();
    FPModule::from_columns(r, s.gens.clone(), &cols).unwrap()
}

fn spec() -> impl Strategy<Value = Spec> {
    (
        0usize..4,
        prop::collection::vec(0i32..2, 1..3),
        prop::collection::vec(1i32..3, 0..3),
        prop::collection::vec(0u32..7, 80),
    )
        .prop_map(|(ring, gens, rel_degs, coeffs)| Spec { ring, gens, rel_degs, coeffs })
}

const HI: i32 = 7;

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn hilbert_function_matches(s in spec()) {
        let m = build(&s);
        let dense: Vec<i64> = hilbert_function(&m, -1, HI).into_iter().map(|v| v as i64).collect();
        prop_assert_eq!(m.hilbert().values(-1, HI), dense);
    }

    #[test]
    fn graded_betti_numbers_match(s in spec()) {
        let m = build(&s);
        let k = FPModule::residue_field(m.ring().clone());
        let table = tor_dims(&m, &k, 3, HI);
        let betti = Resolution::new(&m, 3).betti();
        for i in 0..=3 {
            for j in table.lo..=HI {
                let b = betti.entries.get(&(i, j)).copied().unwrap_or(0);
                prop_assert_eq!(b, table.dim(i, j), "beta_{},{}", i, j);
            }
        }
    }

    #[test]
    fn tor_dimensions_match(s in spec(), t in spec()) {
        let m = build(&s);
        let n = build(&Spec { ring: s.ring, ..t });
        let table = tor_dims(&m, &n, 2, HI - 1);
        let mut res = Resolution::new(&m, 3);
        for i in 0..=2 {
            let hs = tor_hilbert(&mut res, &n, i).values(table.lo, HI - 1);
            let dense: Vec<i64> = (table.lo..HI).map(|j| table.dim(i, j) as i64).collect();
            prop_assert_eq!(hs, dense, "Tor_{}", i);
        }
    }

    #[test]
    fn syzygies_match(s in spec()) {
        let m = build(&s);
        let amb = m.ambient();
        let twists = m.gens().to_vec();
        let cols = m.columns();
        let vecs: Vec<Vector> = cols.iter().map(|c| Vector::from_entries(c, &twists)).collect();
        let degs = m.relation_degrees();
        let syz = syzygies(amb, &twists, &vecs, &degs).unwrap();
        // dim Syz_j = dim F_j − dim (F / Syz)_j with F = ⊕ R(−deg g)
        let free = FPModule::free(m.ring().clone(), degs.clone()).hilbert().values(0, HI);
        let quot = quotient_hilbert(amb, &degs, &syz).unwrap().values(0, HI);
        let core: Vec<usize> = free.iter().zip(&quot).map(|(f, q)| (f - q) as usize).collect();
        prop_assert_eq!(core, syzygy_dims(&m, &twists, &cols, &degs, 0, HI));
    }

    #[test]
    fn minimal_generators_generate(s in spec()) {
        let m = build(&s);
        let amb = m.ambient();
        let twists = m.gens().to_vec();
        let vecs: Vec<Vector> = m.columns().iter().map(|c| Vector::from_entries(c, &twists)).collect();
        let keep = minimal_generators(amb, &twists, &vecs).unwrap();
        let sub: Vec<Vector> = keep.iter().map(|&i| vecs[i].clone()).collect();
        let all = quotient_hilbert(amb, &twists, &vecs).unwrap();
        prop_assert_eq!(quotient_hilbert(amb, &twists, &sub).unwrap(), all);
    }
}

#[test]
fn oracle_sees_residue_field_growth() {
    let r = ring(1);
    let k = FPModule::residue_field(r);
    let table = tor_dims(&k, &k, 3, 4);
    let totals: Vec<usize> = (0..=3).map(|i| table.total(i)).collect();
    assert_eq!(totals, [1, 2, 3, 4]);
}
