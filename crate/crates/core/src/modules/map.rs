use alloc::vec::Vec;

use super::{same_ring, FPModule};
use crate::error::{Error, Result};
use crate::groebner::{Vector, VectorOps};

/// A degree-preserving homomorphism of graded modules, given by the images of
/// the source generators as vectors over the target generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    columns: Vec<Vector>,
}

impl ModuleMap {
    /// Checks shapes, homogeneity, and that every source relation maps into the
    /// target relations.
    pub fn new(source: FPModule, target: FPModule, columns: Vec<Vector>) -> Result<Self> {
        if !same_ring(source.ring(), target.ring()) {
            return Err(Error::RingMismatch);
        }
        if columns.len() != source.ngens() {
            return Err(Error::InvalidInput("map needs one column per source generator".into()));
        }
        crate::groebner::check_vectors(target.ambient(), target.gens(), &columns)?;
        for (j, c) in columns.iter().enumerate() {
            if c.degree().is_some_and(|d| d != source.gens()[j]) {
                return Err(Error::InvalidInput(alloc::format!("column {j} has the wrong degree")));
            }
        }
        let amb = target.ambient();
        let columns = columns.iter().map(|c| amb.reduce_mod_ideal(c)).collect();
        let map = ModuleMap { source, target, columns };
        if !map.is_well_defined() {
            return Err(Error::InvalidInput("map does not respect the source relations".into()));
        }
        Ok(map)
    }

    pub(crate) fn raw(source: FPModule, target: FPModule, columns: Vec<Vector>) -> Self {
        ModuleMap { source, target, columns }
    }

    pub fn identity(m: &FPModule) -> Self {
        let cols = (0..m.ngens()).map(|i| Vector::unit(i, m.gens()[i])).collect();
        ModuleMap { source: m.clone(), target: m.clone(), columns: cols }
    }

    pub fn zero(source: &FPModule, target: &FPModule) -> Self {
        ModuleMap { source: source.clone(), target: target.clone(), columns: alloc::vec![Vector::zero(); source.ngens()] }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    /// Image of a vector over the source generators.
    pub fn apply(&self, v: &Vector) -> Vector {
        let amb = self.target.ambient();
        let f = amb.field();
        let mut acc = Vector::zero();
        for (j, c) in self.columns.iter().enumerate() {
            let coef = v.component(j);
            if !coef.is_zero() {
                acc = f.v_add(&acc, &f.v_mul_poly(c, &coef));
            }
        }
        amb.reduce_mod_ideal(&acc)
    }

    /// Certificate that relations map to relations.
    pub fn is_well_defined(&self) -> bool {
        let gb = self.target.gb();
        let amb = self.target.ambient();
        self.source.relations().iter().all(|r| gb.contains(amb, &self.apply(r)))
    }

    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target.ngens() != self.source.ngens() || first.target.gens() != self.source.gens() {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        let cols = first.columns.iter().map(|c| self.apply(c)).collect();
        Ok(ModuleMap { source: first.source.clone(), target: self.target.clone(), columns: cols })
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.target.gb();
        let amb = self.target.ambient();
        self.columns.iter().all(|c| gb.contains(amb, c))
    }

    /// Cokernel `target / image`.
    pub fn cokernel(&self) -> FPModule {
        let mut rels = self.target.relations().to_vec();
        rels.extend(self.columns.iter().filter(|c| !c.is_zero()).cloned());
        FPModule::raw(self.target.ring().clone(), self.target.gens().to_vec(), rels)
    }

    /// Image as a submodule-presented module.
    pub fn image(&self) -> FPModule {
        super::subquotient_of(&self.target, &self.columns, self.target.relations())
    }

    /// Kernel as a module.
    pub fn kernel(&self) -> FPModule {
        let pre = super::ops::preimage(self);
        super::subquotient_of(&self.source, &pre, self.source.relations())
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }
}
