//! Pushforwards, quasi-liftings and iterated pushforward chains.
//!
//! For a torsion-free module `M` over a Gorenstein ring `R`, choose a minimal
//! surjection `R^ν → M*`. Dualizing gives `M** → R^ν`, and composing with the
//! embedding `M → M**` yields
//!
//! ```text
//! 0 → M → R^ν → M1 → 0
//! ```
//!
//! where `M1` is the pushforward. When `R = S/(f)`, the kernel `E` of the
//! composite `S^ν → R^ν → M1` is the quasi-lifting of `M` to `S`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::groebner::{HilbertSeries, Vector};
use crate::modules::{subquotient_of, FPModule, ModuleMap};
use crate::rings::CIRing;
use crate::{Error, Result};

/// Evidence that `0 → A → B → C → 0` is exact.
///
/// The right map is surjective and composes to zero with the left one by
/// construction, so exactness reduces to additivity of Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceCertificate {
    pub maps_well_defined: bool,
    pub composition_zero: bool,
    pub right_surjective: bool,
    pub hilbert_additive: bool,
}

impl SequenceCertificate {
    pub fn is_exact(&self) -> bool {
        self.maps_well_defined && self.composition_zero && self.right_surjective && self.hilbert_additive
    }
}

#[derive(Clone, Debug)]
pub struct Pushforward {
    pub module: FPModule,
    /// `ν_R(M*)`.
    pub nu: usize,
    /// `M → R^ν`.
    pub embedding: ModuleMap,
    /// `R^ν → M1`.
    pub projection: ModuleMap,
    pub m1: FPModule,
    pub certificate: SequenceCertificate,
}

impl Pushforward {
    /// Twists of the free module `R^ν`.
    pub fn free_twists(&self) -> &[i32] {
        self.embedding.target().gens()
    }
}

pub fn pushforward(m: &FPModule) -> Result<Pushforward> {
    let ring = m.ring().clone();
    let dual = m.dual();
    if !m.is_torsion_free() {
        return Err(Error::NotTorsionFree);
    }
    let free = FPModule::free(ring.clone(), dual.h_twists.clone());
    let embedding = ModuleMap::raw(m.clone(), free.clone(), dual.kappa_vectors.clone());
    let raw_m1 = embedding.cokernel();
    let (m1, to_min) = raw_m1.minimalize_with_map();
    let projection = ModuleMap::raw(free.clone(), m1.clone(), to_min.columns().to_vec());
    let certificate = SequenceCertificate {
        maps_well_defined: embedding.is_well_defined() && projection.is_well_defined(),
        composition_zero: projection.compose(&embedding)?.is_zero(),
        right_surjective: projection.is_surjective(),
        hilbert_additive: m.hilbert().add(&m1.hilbert()) == free.hilbert(),
    };
    Ok(Pushforward { module: m.clone(), nu: dual.ystar.len(), embedding, projection, m1, certificate })
}

#[derive(Clone, Debug)]
pub struct QuasiLifting {
    /// `S`, with `R = S/(f)`.
    pub base: Arc<CIRing>,
    pub pushforward: Pushforward,
    /// `E = ker(S^ν → M1)` as an `S`-module.
    pub e: FPModule,
    /// Generators of `E` inside `S^ν`.
    pub e_vectors: Vec<Vector>,
    /// `HS(S^ν / E) = HS(M1)` and `HS(E) + HS(M1) = HS(S^ν)`.
    pub certificate: SequenceCertificate,
}

/// Quasi-lifting of `M` from `R = S/(f)` to the previous stage `S` of the
/// hypersurface tower, `f` being the last defining relation of `R`.
pub fn quasi_lifting(m: &FPModule) -> Result<QuasiLifting> {
    let ring = m.ring();
    let c = ring.relative_codim();
    if c == 0 {
        return Err(Error::InvalidInput("quasi-lifting needs at least one relation".into()));
    }
    let base = Arc::new(ring.stage(c - 1));
    quasi_lifting_to(m, base)
}

/// Quasi-lifting to a given `S` with `R = S/(f)`.
pub fn quasi_lifting_to(m: &FPModule, base: Arc<CIRing>) -> Result<QuasiLifting> {
    let ring = m.ring();
    let c = ring.relative_codim();
    if base.poly() != ring.poly() || base.relative_codim() + 1 != c || base.relations() != &ring.relations()[..c - 1] {
        return Err(Error::RingMismatch);
    }
    let push = pushforward(m)?;
    let f = &ring.relations()[c - 1];
    let twists = push.free_twists().to_vec();
    let mut gens: Vec<Vector> = push.embedding.columns().to_vec();
    gens.extend(twists.iter().enumerate().map(|(k, &t)| Vector::from_poly(f, k, t)));
    let free_s = FPModule::free(base.clone(), twists.clone());
    let e = subquotient_of(&free_s, &gens, &[]);
    let quotient = FPModule::new(base.clone(), twists, gens.clone())?;
    let m1_hs: HilbertSeries = push.m1.hilbert();
    let certificate = SequenceCertificate {
        maps_well_defined: push.certificate.maps_well_defined,
        composition_zero: true,
        right_surjective: push.certificate.right_surjective,
        hilbert_additive: quotient.hilbert() == m1_hs && e.hilbert().add(&m1_hs) == free_s.hilbert(),
    };
    Ok(QuasiLifting { base, pushforward: push, e, e_vectors: gens, certificate })
}

/// `M` viewed as a module over `S`, where `R = S/J` and `J` is generated by
/// the relations of `R` beyond those of `S`.
pub fn restrict_scalars(m: &FPModule, base: Arc<CIRing>) -> Result<FPModule> {
    let ring = m.ring();
    let k = base.relative_codim();
    if base.poly() != ring.poly() || k > ring.relative_codim() || base.relations() != &ring.relations()[..k] {
        return Err(Error::RingMismatch);
    }
    let mut rels = m.relations().to_vec();
    for f in &ring.relations()[k..] {
        for (i, &a) in m.gens().iter().enumerate() {
            rels.push(Vector::from_poly(f, i, a));
        }
    }
    FPModule::new(base, m.gens().to_vec(), rels)
}

/// `M_0 = M` and `M_{j+1}` the pushforward of `M_j`.
#[derive(Clone, Debug)]
pub struct PushforwardChain {
    pub modules: Vec<FPModule>,
    pub steps: Vec<Pushforward>,
}

pub fn pushforward_chain(m: &FPModule, n: usize) -> Result<PushforwardChain> {
    let mut modules = alloc::vec![m.minimalize()];
    let mut steps = Vec::with_capacity(n);
    for stage in 0..n {
        let cur = &modules[stage];
        let step = match pushforward(cur) {
            Ok(p) => p,
            Err(Error::NotTorsionFree) => return Err(Error::ChainBlocked { stage }),
            Err(e) => return Err(e),
        };
        modules.push(step.m1.clone());
        steps.push(step);
    }
    Ok(PushforwardChain { modules, steps })
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;
    use crate::modules::Ideal;
    use crate::polyalg::{Poly, PolyRing};

    fn ring(rels: &[&str]) -> Arc<CIRing> {
        let q = PolyRing::standard(101, &["x", "y"]).unwrap();
        let rels = rels.iter().map(|s| q.parse(s).unwrap()).collect();
        Arc::new(CIRing::new(q, rels, None).unwrap())
    }

    fn cyc(r: &Arc<CIRing>, gens: &[&str]) -> FPModule {
        let g: Vec<Poly> = gens.iter().map(|s| r.poly().parse(s).unwrap()).collect();
        FPModule::cyclic(r.clone(), &g).unwrap()
    }

    fn is_cyclic_over(m: &FPModule, gen: &str) -> bool {
        let r = m.ring();
        m.num_generators() == 1 && m.annihilator().is_contained_in(&Ideal::new(r.clone(), vec![r.poly().parse(gen).unwrap()]))
            && Ideal::new(r.clone(), vec![r.poly().parse(gen).unwrap()]).is_contained_in(&m.annihilator())
    }

    #[test]
    fn pushforward_of_free_is_zero() {
        let r = ring(&["x*y"]);
        let p = pushforward(&FPModule::free(r.clone(), vec![0, 1])).unwrap();
        assert!(p.m1.is_zero());
        assert_eq!(p.nu, 2);
        assert!(p.certificate.is_exact());
    }

    #[test]
    fn node_pushforwards_swap_branches() {
        let r = ring(&["x*y"]);
        let p = pushforward(&cyc(&r, &["x"])).unwrap();
        assert_eq!(p.nu, 1);
        assert!(p.certificate.is_exact());
        assert!(is_cyclic_over(&p.m1, "y"));
        let q = pushforward(&cyc(&r, &["y"])).unwrap();
        assert!(is_cyclic_over(&q.m1, "x"));
    }

    #[test]
    fn torsion_blocks() {
        let r = ring(&["x*y"]);
        assert!(matches!(pushforward(&cyc(&r, &["x^2"])), Err(Error::NotTorsionFree)));
        assert_eq!(pushforward_chain(&cyc(&r, &["x^2"]), 3).unwrap_err(), Error::ChainBlocked { stage: 0 });
    }

    #[test]
    fn chain_alternates() {
        let r = ring(&["x*y"]);
        let ch = pushforward_chain(&cyc(&r, &["x"]), 4).unwrap();
        for (j, m) in ch.modules.iter().enumerate() {
            assert!(is_cyclic_over(m, if j % 2 == 0 { "x" } else { "y" }), "stage {j}");
        }
        let free = pushforward_chain(&FPModule::free(r, vec![0]), 3).unwrap();
        assert!(free.modules[1..].iter().all(|m| m.is_zero()));
    }

    #[test]
    fn quasi_lifting_on_the_node() {
        let r = ring(&["x*y"]);
        let ql = quasi_lifting(&cyc(&r, &["x"])).unwrap();
        assert!(ql.certificate.is_exact());
        assert_eq!(ql.e.ngens(), 1);
        assert!(ql.e.relations().is_empty());
        assert_eq!(ql.e.gens(), &[ql.pushforward.free_twists()[0] + 1]);
        let free = quasi_lifting(&FPModule::free(r, vec![0])).unwrap();
        assert!(free.e.is_free_presentation());
    }

    #[test]
    fn artinian_rings_lift_everything() {
        let a = ring(&["x^2", "y^2"]);
        let ql = quasi_lifting(&cyc(&a, &["x"])).unwrap();
        assert!(ql.certificate.is_exact());
    }

    #[test]
    fn restriction_of_scalars() {
        let r = ring(&["x*y"]);
        let s = Arc::new(r.stage(0));
        let m = restrict_scalars(&cyc(&r, &["x"]), s).unwrap();
        assert_eq!(m.hilbert(), cyc(&r, &["x"]).hilbert());
    }
}
