//! Gröbner bases of submodules of graded free modules over `R = Q/I`, normal
//! forms, syzygies, minimal generators and Hilbert series.

mod basis;
mod hilbert;
mod vector;

use alloc::vec::Vec;

pub use basis::Ambient;
use basis::{run, Reducers};
pub use hilbert::{monomial_ideal_numerator, HilbertData, HilbertSeries, Laurent};
pub use vector::{Key, Vector, VectorOps};

use crate::error::{Error, Result};
use crate::polyalg::Monomial;

/// A reduced Gröbner basis of a submodule `U` of the graded free module with
/// the given twists, relative to `R`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    twists: Vec<i32>,
    red: Reducers,
}

impl GroebnerBasis {
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// Basis elements, monic, ascending by lead term.
    pub fn elems(&self) -> &[Vector] {
        &self.red.elems
    }

    pub fn normal_form(&self, amb: &Ambient, v: &Vector) -> Result<Vector> {
        check_vectors(amb, &self.twists, core::slice::from_ref(v))?;
        let (r, _) = self.red.reduce(amb, v.terms().to_vec(), None, 0);
        Ok(Vector::from_sorted_terms(r))
    }

    pub fn contains(&self, amb: &Ambient, v: &Vector) -> bool {
        self.red.reduce(amb, v.terms().to_vec(), None, 0).0.is_empty()
    }

    /// Lead monomials of `U + I F` grouped by component.
    pub fn lead_monomials(&self, amb: &Ambient) -> Vec<Vec<Monomial>> {
        let mut out: Vec<Vec<Monomial>> = (0..self.twists.len())
            .map(|_| amb.ideal().iter().map(|h| h.lead().unwrap().0).collect())
            .collect();
        for e in &self.red.elems {
            let k = e.lead().unwrap().0;
            out[k.comp as usize].push(k.mono);
        }
        out
    }

    /// Hilbert series of `F / (U + I F)`, read off the lead terms.
    pub fn hilbert(&self, amb: &Ambient) -> HilbertSeries {
        let poly = amb.poly();
        let mut num = Laurent::zero();
        for (k, leads) in self.lead_monomials(amb).iter().enumerate() {
            let n = monomial_ideal_numerator(leads, poly.weights(), poly.nvars());
            num = num.add(&n.shift(self.twists[k]));
        }
        HilbertSeries::new(num, poly.var_weights().to_vec())
    }
}

/// Validates that the vectors are homogeneous elements of the free module with these twists.
pub fn check_vectors(amb: &Ambient, twists: &[i32], vs: &[Vector]) -> Result<()> {
    let n = amb.poly().nvars();
    let p = amb.field().p();
    for (i, v) in vs.iter().enumerate() {
        for (k, c) in v.terms() {
            let comp = k.comp as usize;
            if comp >= twists.len()
                || k.deg != k.mono.deg() as i32 + twists[comp]
                || *c == 0
                || *c >= p
                || k.mono.exps()[n..].iter().any(|&e| e != 0)
            {
                return Err(Error::InvalidInput(alloc::format!(
                    "vector {i} does not belong to the free module"
                )));
            }
        }
        if !v.is_homogeneous() {
            return Err(Error::InvalidInput(alloc::format!("vector {i} is not homogeneous")));
        }
    }
    Ok(())
}

fn degrees_of(gens: &[Vector]) -> Result<Vec<i32>> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            g.degree().ok_or_else(|| Error::InvalidInput(alloc::format!("generator {i} is zero; give its degree")))
        })
        .collect()
}

fn check_degrees(gens: &[Vector], degs: &[i32]) -> Result<()> {
    if gens.len() != degs.len() {
        return Err(Error::InvalidInput("generator and degree counts differ".into()));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.degree().is_some_and(|d| d != degs[i]) {
            return Err(Error::InvalidInput(alloc::format!("generator {i} has the wrong degree")));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the submodule generated by `gens` (zero vectors allowed).
pub fn groebner_basis(amb: &Ambient, twists: &[i32], gens: &[Vector]) -> Result<GroebnerBasis> {
    check_vectors(amb, twists, gens)?;
    let nonzero: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let degs = degrees_of(&nonzero)?;
    let r = run(amb, twists.len(), &nonzero, &degs, false, false);
    let mut red = Reducers::new(twists.len());
    for v in r.basis {
        red.push(v, None);
    }
    Ok(GroebnerBasis { twists: twists.to_vec(), red })
}

/// Hilbert series of `F / (gens)` over `R`.
pub fn quotient_hilbert(amb: &Ambient, twists: &[i32], gens: &[Vector]) -> Result<HilbertSeries> {
    Ok(groebner_basis(amb, twists, gens)?.hilbert(amb))
}

/// A generating set of the syzygies of `gens` over `R`, living in the free
/// module whose twists are `gen_degrees` (needed for zero generators).
pub fn syzygies(amb: &Ambient, twists: &[i32], gens: &[Vector], gen_degrees: &[i32]) -> Result<Vec<Vector>> {
    check_vectors(amb, twists, gens)?;
    check_degrees(gens, gen_degrees)?;
    Ok(run(amb, twists.len(), gens, gen_degrees, true, true).syzygies)
}

/// Indices of a minimal generating subset of `gens`, chosen greedily by degree
/// and then by index.
pub fn minimal_generators(amb: &Ambient, twists: &[i32], gens: &[Vector]) -> Result<Vec<usize>> {
    check_vectors(amb, twists, gens)?;
    let idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    let nonzero: Vec<Vector> = idx.iter().map(|&i| gens[i].clone()).collect();
    let degs = degrees_of(&nonzero)?;
    let mut m: Vec<usize> = run(amb, twists.len(), &nonzero, &degs, false, false).minimal.iter().map(|&i| idx[i]).collect();
    m.sort_unstable();
    Ok(m)
}

/// A minimal generating set of the syzygy module, sorted by degree.
pub fn minimal_syzygies(
    amb: &Ambient,
    twists: &[i32],
    gens: &[Vector],
    gen_degrees: &[i32],
) -> Result<Vec<Vector>> {
    let syz = syzygies(amb, twists, gens, gen_degrees)?;
    let keep = minimal_generators(amb, gen_degrees, &syz)?;
    let mut out: Vec<Vector> = keep.into_iter().map(|i| syz[i].clone()).collect();
    out.sort_by_key(|v| v.degree());
    Ok(out)
}

/// Expresses each target as a combination of `gens` over `R`; `None` if some
/// target is outside the submodule they generate.
pub fn lift(
    amb: &Ambient,
    twists: &[i32],
    gens: &[Vector],
    gen_degrees: &[i32],
    targets: &[Vector],
) -> Result<Option<Vec<Vector>>> {
    check_vectors(amb, twists, gens)?;
    check_vectors(amb, twists, targets)?;
    check_degrees(gens, gen_degrees)?;
    let r = run(amb, twists.len(), gens, gen_degrees, true, false);
    let mut red = Reducers::new(twists.len());
    for (v, l) in r.basis.into_iter().zip(r.lifts) {
        red.push(v, Some(l));
    }
    let f = amb.field();
    let mut out = Vec::with_capacity(targets.len());
    for t in targets {
        let (rem, l) = red.reduce(amb, t.terms().to_vec(), Some(Vector::zero()), 0);
        if !rem.is_empty() {
            return Ok(None);
        }
        let l = l.unwrap();
        out.push(amb.reduce_mod_ideal(&f.v_scale(&l, f.neg(1))));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests;
