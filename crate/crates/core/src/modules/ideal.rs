use alloc::sync::Arc;
use alloc::vec::Vec;

use super::FPModule;
use crate::groebner::{groebner_basis, syzygies, GroebnerBasis, HilbertSeries, Vector};
use crate::polyalg::Poly;
use crate::rings::{CIRing, MinPrime};

/// A homogeneous ideal of `R`, given by generators reduced modulo the defining ideal.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<CIRing>,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: Arc<CIRing>, gens: Vec<Poly>) -> Self {
        let amb = ring.ambient();
        let gens = gens.iter().map(|g| amb.reduce_poly(g)).filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    pub fn zero(ring: Arc<CIRing>) -> Self {
        Ideal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<CIRing>) -> Self {
        Ideal { ring, gens: alloc::vec![Poly::constant(1)] }
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn ring(&self) -> &Arc<CIRing> {
        &self.ring
    }

    fn vectors(&self) -> Vec<Vector> {
        self.gens.iter().map(|g| Vector::from_poly(g, 0, 0)).collect()
    }

    pub fn gb(&self) -> GroebnerBasis {
        groebner_basis(self.ring.ambient(), &[0], &self.vectors()).expect("homogeneous generators")
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.gb().contains(self.ring.ambient(), &Vector::from_poly(f, 0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == Some(0))
    }

    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        let gb = other.gb();
        let amb = self.ring.ambient();
        self.gens.iter().all(|g| gb.contains(amb, &Vector::from_poly(g, 0, 0)))
    }

    /// `J ⊄ P` for a declared minimal prime.
    pub fn not_contained_in_prime(&self, p: &MinPrime) -> bool {
        let free = crate::groebner::Ambient::free(self.ring.poly().clone());
        self.gens.iter().any(|g| !p.gb.contains(&free, &Vector::from_poly(g, 0, 0)))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal { ring: self.ring.clone(), gens: g }
    }

    /// Hilbert series of `R / J`.
    pub fn quotient_hilbert(&self) -> HilbertSeries {
        self.gb().hilbert(self.ring.ambient())
    }

    /// `dim R/J`, `None` for the unit ideal.
    pub fn quotient_dim(&self) -> Option<usize> {
        self.quotient_hilbert().dim()
    }

    /// `ht J = dim R − dim R/J` (the ring is Cohen–Macaulay); `None` for the unit ideal.
    pub fn height(&self) -> Option<usize> {
        self.quotient_dim().map(|d| self.ring.dim() - d)
    }

    /// `J : f`.
    pub fn quotient(&self, f: &Poly) -> Ideal {
        let amb = self.ring.ambient();
        let f = amb.reduce_poly(f);
        if f.is_zero() {
            return Ideal::unit(self.ring.clone());
        }
        let mut gens = alloc::vec![Vector::from_poly(&f, 0, 0)];
        gens.extend(self.vectors());
        let degs: Vec<i32> = gens.iter().map(|v| v.degree().unwrap()).collect();
        let syz = syzygies(amb, &[0], &gens, &degs).expect("homogeneous");
        Ideal::new(self.ring.clone(), syz.iter().map(|s| s.component(0)).collect())
    }

    /// `J : f^∞`.
    pub fn saturation(&self, f: &Poly) -> Ideal {
        let mut cur = self.clone();
        let mut hs = cur.quotient_hilbert();
        loop {
            let next = cur.quotient(f);
            let nhs = next.quotient_hilbert();
            if nhs == hs {
                return cur;
            }
            cur = next;
            hs = nhs;
        }
    }

    /// `f ∈ √J`.
    pub fn radical_contains(&self, f: &Poly) -> bool {
        self.saturation(f).is_unit() || self.ring.ambient().reduce_poly(f).is_zero()
    }

    /// `√self ⊇ other`.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.radical_contains(g))
    }

    /// `0 : J`.
    pub fn annihilator(&self) -> Ideal {
        self.as_module().annihilator_of_ideal_gens(&self.gens)
    }

    /// `R / J`.
    pub fn as_module(&self) -> FPModule {
        FPModule::cyclic(self.ring.clone(), &self.gens).expect("homogeneous generators")
    }
}

impl FPModule {
    fn annihilator_of_ideal_gens(&self, gens: &[Poly]) -> Ideal {
        let ring = self.ring().clone();
        if gens.is_empty() {
            return Ideal::unit(ring);
        }
        // kernel of R → ⊕ R(deg g_k), 1 ↦ (g_1, …, g_s)
        let twists: Vec<i32> = gens.iter().map(|g| -(g.degree().unwrap() as i32)).collect();
        let v = Vector::from_entries(gens, &twists);
        let syz = syzygies(self.ambient(), &twists, &[v], &[0]).expect("homogeneous");
        Ideal::new(ring, syz.iter().map(|s| s.component(0)).collect())
    }
}
