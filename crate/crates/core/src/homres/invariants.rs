use alloc::vec::Vec;

use super::{ext_hilbert, Resolution};
use crate::error::{Error, Result};
use crate::modules::FPModule;

/// Projective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjDim {
    Finite(usize),
    /// No Betti number vanished through `dim R + 1`; a finite value would be
    /// at most `depth R = dim R` by Auslander–Buchsbaum.
    Infinite,
}

impl ProjDim {
    pub fn finite(&self) -> Option<usize> {
        match self {
            ProjDim::Finite(p) => Some(*p),
            ProjDim::Infinite => None,
        }
    }
}

/// Residue field resolution long enough for depth computations.
pub fn residue_resolution(m: &FPModule) -> Resolution {
    let k = FPModule::residue_field(m.ring().clone());
    Resolution::new(&k, m.ring().dim() + 1)
}

/// Least `i` with `Ext^i(k, M) ≠ 0`; `None` for the zero module (depth ∞).
pub fn depth(m: &FPModule) -> Option<usize> {
    let mut res = residue_resolution(m);
    depth_with(&mut res, m)
}

pub fn depth_with(res_k: &mut Resolution, m: &FPModule) -> Option<usize> {
    if m.is_zero() {
        return None;
    }
    let d = m.ring().dim();
    for i in 0..=d {
        if !ext_hilbert(res_k, m, i).is_zero() {
            return Some(i);
        }
    }
    unreachable!("a nonzero module has depth at most dim R")
}

pub fn pd(m: &FPModule) -> ProjDim {
    let res = Resolution::new(m, m.ring().dim() + 1);
    pd_of(&res)
}

pub fn pd_of(res: &Resolution) -> ProjDim {
    let d = res.module().ring().dim();
    for i in 0..=d + 1 {
        if res.rank(i) == 0 {
            return ProjDim::Finite(i.saturating_sub(1));
        }
    }
    ProjDim::Infinite
}

/// Outcome of the Serre-condition test with the Ext dimensions behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreReport {
    pub n: usize,
    pub holds: bool,
    /// `(i, dim Ext^i(M, R))` for `1 ≤ i ≤ dim R`, `None` meaning the Ext vanishes.
    pub ext_dims: Vec<(usize, Option<usize>)>,
}

/// `(S_n)`: `dim Ext^i(M, R) ≤ dim R − i − n` for all `1 ≤ i ≤ dim R`.
///
/// By local duality over a Gorenstein ring, `depth M_p ≥ min(n, ht p)` for all
/// primes exactly when every prime in the support of `Ext^i(M, R)` has height
/// at least `i + n`.
pub fn serre_check(m: &FPModule, n: usize) -> SerreReport {
    let ext_dims = ext_dims_into_ring(m);
    serre_from_ext_dims(m.ring().dim(), n, ext_dims)
}

pub fn ext_dims_into_ring(m: &FPModule) -> Vec<(usize, Option<usize>)> {
    let d = m.ring().dim();
    let r = FPModule::ring_module(m.ring().clone());
    let mut res = Resolution::new(m, d + 1);
    (1..=d).map(|i| (i, ext_hilbert(&mut res, &r, i).dim())).collect()
}

pub fn serre_from_ext_dims(d: usize, n: usize, ext_dims: Vec<(usize, Option<usize>)>) -> SerreReport {
    let holds = ext_dims.iter().all(|&(i, e)| match e {
        None => true,
        Some(e) => (e + i + n) as i64 <= d as i64,
    });
    SerreReport { n, holds, ext_dims }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatusFlags {
    pub is_torsion_free: bool,
    pub is_reflexive: bool,
    pub is_mcm: bool,
}

pub fn is_mcm(m: &FPModule) -> bool {
    depth(m) == Some(m.ring().dim())
}

pub fn status_flags(m: &FPModule) -> StatusFlags {
    StatusFlags { is_torsion_free: m.is_torsion_free(), is_reflexive: m.is_reflexive(), is_mcm: is_mcm(m) }
}

/// Smallest height of a prime where `M` is not free; `dim R + 1` when `M` is free.
///
/// With `0 → K → F → M → 0` the first syzygy sequence, `M_p` is free exactly
/// when the class in `Ext^1(M, K)` vanishes at `p`.
pub fn free_locus_height(m: &FPModule) -> usize {
    let d = m.ring().dim();
    let mm = m.minimalize();
    if mm.relations().is_empty() {
        return d + 1;
    }
    let mut res = Resolution::new(&mm, 2);
    let k = FPModule::raw(mm.ring().clone(), res.degrees(1).to_vec(), res.differential(2).to_vec());
    match ext_hilbert(&mut res, &k, 1).dim() {
        None => d + 1,
        Some(e) => d - e,
    }
}

/// Constant local rank at the declared minimal primes, if `M` is free there
/// with the same rank everywhere.
pub fn rank_of(m: &FPModule) -> Result<Option<usize>> {
    let ring = m.ring();
    let primes = ring.min_primes().ok_or(Error::MissingMinPrimes)?;
    let mm = m.minimalize();
    let g = mm.ngens();
    let fitt: Vec<_> = (0..=g).map(|r| mm.fitting_ideal(r as i64)).collect();
    let mut rank = None;
    for p in primes {
        let r = (0..=g).find(|&r| fitt[r].not_contained_in_prime(p)).expect("Fitt_g is the unit ideal");
        if r > 0 && !fitt[r - 1].annihilator().not_contained_in_prime(p) {
            return Ok(None);
        }
        match rank {
            None => rank = Some(r),
            Some(q) if q != r => return Ok(None),
            _ => {}
        }
    }
    Ok(rank)
}

/// `Supp A ⊆ Supp B`, i.e. `ann B ⊆ √ann A`.
pub fn support_contained(a: &FPModule, b: &FPModule) -> bool {
    if a.is_zero() {
        return true;
    }
    a.annihilator().radical_contains_ideal(&b.annihilator())
}
