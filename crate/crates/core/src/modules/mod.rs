//! Finitely presented graded modules over a complete intersection.
//!
//! A module is `F / U` where `F = ⊕ R(-a_i)` has generator degrees `a_i` and
//! `U` is spanned by homogeneous relation columns. All computations lift to the
//! polynomial ring with the defining ideal acting on every component.

mod ideal;
mod map;
mod ops;

use alloc::sync::Arc;
use alloc::vec::Vec;

pub use ideal::Ideal;
pub use map::ModuleMap;
pub use ops::{subquotient, subquotient_of, Dual};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, minimal_generators, Ambient, GroebnerBasis, HilbertSeries, Vector, VectorOps};
use crate::polyalg::Poly;
use crate::rings::CIRing;

#[derive(Clone, Debug)]
pub struct FPModule {
    ring: Arc<CIRing>,
    gens: Vec<i32>,
    relations: Vec<Vector>,
}

pub fn same_ring(a: &Arc<CIRing>, b: &Arc<CIRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FPModule {
    /// A module from generator degrees and relation vectors; relations are
    /// reduced modulo the defining ideal and zero relations dropped.
    pub fn new(ring: Arc<CIRing>, gens: Vec<i32>, relations: Vec<Vector>) -> Result<Self> {
        crate::groebner::check_vectors(ring.ambient(), &gens, &relations)?;
        let amb = ring.ambient();
        let relations = relations.iter().map(|r| amb.reduce_mod_ideal(r)).filter(|r| !r.is_zero()).collect();
        Ok(FPModule { ring, gens, relations })
    }

    /// A module from relation columns given entrywise.
    pub fn from_columns(ring: Arc<CIRing>, gens: Vec<i32>, columns: &[Vec<Poly>]) -> Result<Self> {
        let mut rels = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != gens.len() {
                return Err(Error::InvalidInput(alloc::format!(
                    "relation column {j} has {} entries for {} generators",
                    col.len(),
                    gens.len()
                )));
            }
            for f in col {
                ring.poly().validate(f)?;
            }
            let v = Vector::from_entries(col, &gens);
            if !v.is_homogeneous() {
                return Err(Error::InvalidInput(alloc::format!(
                    "relation column {j} is not homogeneous for the generator degrees"
                )));
            }
            rels.push(v);
        }
        FPModule::new(ring, gens, rels)
    }

    pub(crate) fn raw(ring: Arc<CIRing>, gens: Vec<i32>, relations: Vec<Vector>) -> Self {
        FPModule { ring, gens, relations }
    }

    /// `R(-a_1) ⊕ … ⊕ R(-a_n)`.
    pub fn free(ring: Arc<CIRing>, degrees: Vec<i32>) -> Self {
        FPModule { ring, gens: degrees, relations: Vec::new() }
    }

    pub fn zero(ring: Arc<CIRing>) -> Self {
        FPModule::free(ring, Vec::new())
    }

    /// `R/J` generated in degree 0.
    pub fn cyclic(ring: Arc<CIRing>, ideal: &[Poly]) -> Result<Self> {
        let cols: Vec<Vec<Poly>> = ideal.iter().map(|f| alloc::vec![f.clone()]).collect();
        FPModule::from_columns(ring, alloc::vec![0], &cols)
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: Arc<CIRing>) -> Self {
        let vars: Vec<Poly> = (0..ring.poly().nvars()).map(|i| ring.poly().var(i)).collect();
        FPModule::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &Arc<CIRing> {
        &self.ring
    }

    pub fn ambient(&self) -> &Ambient {
        self.ring.ambient()
    }

    /// Generator degrees.
    pub fn gens(&self) -> &[i32] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> Vec<i32> {
        self.relations.iter().map(|r| r.degree().unwrap()).collect()
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn gb(&self) -> GroebnerBasis {
        groebner_basis(self.ambient(), &self.gens, &self.relations).expect("relations validated")
    }

    pub fn hilbert(&self) -> HilbertSeries {
        self.gb().hilbert(self.ambient())
    }

    /// Krull dimension, `None` for the zero module.
    pub fn dim(&self) -> Option<usize> {
        self.hilbert().dim()
    }

    /// Length, `None` when infinite.
    pub fn length(&self) -> Option<u64> {
        let hs = self.hilbert();
        if hs.is_zero() {
            Some(0)
        } else {
            hs.length()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert().is_zero()
    }

    /// `M(k)`: the same module with every degree lowered by `k`.
    pub fn twist(&self, k: i32) -> FPModule {
        let gens: Vec<i32> = self.gens.iter().map(|a| a - k).collect();
        let rels = self.relations.iter().map(|r| r.remap(|c| c, &gens)).collect();
        FPModule { ring: self.ring.clone(), gens, relations: rels }
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let n = self.ngens();
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        let mut rels: Vec<Vector> = self.relations.iter().map(|r| r.remap(|c| c, &gens)).collect();
        rels.extend(other.relations.iter().map(|r| r.remap(|c| c + n, &gens)));
        Ok(FPModule { ring: self.ring.clone(), gens, relations: rels })
    }

    /// No constant entries and no redundant relations.
    pub fn is_minimal(&self) -> bool {
        self.relations.iter().all(|r| r.has_unit_entry().is_none())
            && minimal_generators(self.ambient(), &self.gens, &self.relations)
                .map(|m| m.len() == self.relations.len())
                .unwrap_or(false)
    }

    /// An isomorphic module with a minimal presentation, together with the
    /// isomorphism from `self`.
    pub fn minimalize_with_map(&self) -> (FPModule, ModuleMap) {
        let amb = self.ambient();
        let f = amb.field();
        let mut gens = self.gens.clone();
        let mut rels = self.relations.clone();
        // images of the original generators in the current free module
        let mut images: Vec<Vector> = (0..gens.len()).map(|i| Vector::unit(i, gens[i])).collect();
        loop {
            let Some((j, comp)) = rels.iter().enumerate().find_map(|(j, r)| r.has_unit_entry().map(|c| (j, c)))
            else {
                break;
            };
            let r = rels.swap_remove(j);
            let c = r.terms().iter().find(|t| t.0.comp as usize == comp && t.0.mono.is_one()).unwrap().1;
            let inv_neg = f.neg(f.inv(c));
            // e_comp = -(1/c) * (r - c e_comp) in the quotient
            let eliminate = |v: &Vector| -> Vector {
                let coef = v.component(comp);
                if coef.is_zero() {
                    return v.clone();
                }
                let scaled = amb.poly().scale(&coef, inv_neg);
                amb.reduce_mod_ideal(&f.v_add(v, &f.v_mul_poly(&r, &scaled)))
            };
            let mut new_index: Vec<Option<usize>> = Vec::with_capacity(gens.len());
            let mut k = 0;
            for i in 0..gens.len() {
                if i == comp {
                    new_index.push(None);
                } else {
                    new_index.push(Some(k));
                    k += 1;
                }
            }
            let new_gens: Vec<i32> = (0..gens.len()).filter(|&i| i != comp).map(|i| gens[i]).collect();
            rels = rels
                .iter()
                .map(|s| eliminate(s).restrict(&new_index, &new_gens))
                .filter(|s| !s.is_zero())
                .collect();
            images = images.iter().map(|v| eliminate(v).restrict(&new_index, &new_gens)).collect();
            gens = new_gens;
        }
        let keep = minimal_generators(amb, &gens, &rels).expect("valid relations");
        let rels: Vec<Vector> = keep.into_iter().map(|i| rels[i].clone()).collect();
        let target = FPModule { ring: self.ring.clone(), gens, relations: rels };
        let map = ModuleMap::raw(self.clone(), target.clone(), images);
        (target, map)
    }

    pub fn minimalize(&self) -> FPModule {
        self.minimalize_with_map().0
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.minimalize().ngens()
    }

    /// `M ⊗_R N` with generators `(i, j)` at index `i * ngens(N) + j`, minimalized.
    pub fn tensor(&self, other: &FPModule) -> Result<FPModule> {
        Ok(self.tensor_raw(other)?.minimalize())
    }

    pub(crate) fn tensor_raw(&self, other: &FPModule) -> Result<FPModule> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let (m, n) = (self.ngens(), other.ngens());
        let gens: Vec<i32> = (0..m * n).map(|k| self.gens[k / n] + other.gens[k % n]).collect();
        let mut rels = Vec::new();
        for r in &self.relations {
            for j in 0..n {
                rels.push(r.remap(|i| i * n + j, &gens));
            }
        }
        for i in 0..m {
            for s in &other.relations {
                rels.push(s.remap(|j| i * n + j, &gens));
            }
        }
        Ok(FPModule { ring: self.ring.clone(), gens, relations: rels })
    }

    /// Ring of a module as a module: `R` itself.
    pub fn ring_module(ring: Arc<CIRing>) -> Self {
        FPModule::free(ring, alloc::vec![0])
    }

    /// Render the relation matrix column by column.
    pub fn columns(&self) -> Vec<Vec<Poly>> {
        self.relations.iter().map(|r| r.entries(self.ngens())).collect()
    }

    /// Hilbert series equality; the iso evidence used throughout.
    pub fn same_hilbert(&self, other: &FPModule) -> bool {
        self.hilbert() == other.hilbert()
    }

    /// Is `v` (a vector in the generator free module) zero in the module?
    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.gb().contains(self.ambient(), v)
    }
}

#[cfg(test)]
mod tests;
