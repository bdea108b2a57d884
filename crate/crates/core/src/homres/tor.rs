use alloc::vec::Vec;

use super::Resolution;
use crate::error::{Error, Result};
use crate::groebner::{quotient_hilbert, HilbertSeries, Key, Vector};
use crate::modules::{subquotient_of, FPModule};

/// Twists of `F ⊗ N` (`sign = 1`) or `Hom(F, N)` (`sign = -1`), generator `(r, j)` at `r * n + j`.
fn block_twists(outer: &[i32], inner: &[i32], sign: i32) -> Vec<i32> {
    let n = inner.len();
    (0..outer.len() * n).map(|k| sign * outer[k / n] + inner[k % n]).collect()
}

/// Copies of the relations of `n` in every block.
fn block_relations(blocks: usize, n: &FPModule, twists: &[i32]) -> Vec<Vector> {
    let nn = n.ngens();
    let mut out = Vec::with_capacity(blocks * n.relations().len());
    for r in 0..blocks {
        for s in n.relations() {
            out.push(s.remap(|j| r * nn + j, twists));
        }
    }
    out
}

/// Images of the generators of `F_i ⊗ N` under `d_i ⊗ N`.
fn tensor_images(res: &Resolution, n: &FPModule, i: usize, twists: &[i32]) -> Vec<Vector> {
    let nn = n.ngens();
    let mut out = Vec::new();
    for col in res.differential(i) {
        for j in 0..nn {
            out.push(col.remap(|r| r * nn + j, twists));
        }
    }
    out
}

/// Images of the generators `(r, j)` of `Hom(F_{i-1}, N)` under `Hom(d_i, N)`.
fn hom_images(res: &Resolution, n: &FPModule, i: usize, twists: &[i32]) -> Vec<Vector> {
    let nn = n.ngens();
    let src = res.rank(i - 1);
    let mut terms: Vec<Vec<(Key, u32)>> = (0..src * nn).map(|_| Vec::new()).collect();
    for (s, col) in res.differential(i).iter().enumerate() {
        for &(k, c) in col.terms() {
            let r = k.comp as usize;
            for j in 0..nn {
                let comp = s * nn + j;
                terms[r * nn + j].push((Key { deg: k.mono.deg() as i32 + twists[comp], mono: k.mono, comp: comp as u32 }, c));
            }
        }
    }
    terms
        .into_iter()
        .map(|mut t| {
            t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            Vector::from_sorted_terms(t)
        })
        .collect()
}

fn free_sum_hilbert(degs: &[i32], n: &HilbertSeries, sign: i32) -> HilbertSeries {
    let mut acc = HilbertSeries::zero(n.weights().to_vec());
    for &d in degs {
        acc = acc.add(&n.shift(sign * d));
    }
    acc
}

/// `Hom(F_i, N)` / `F_i ⊗ N` and the relations that present it.
struct Term {
    twists: Vec<i32>,
    relations: Vec<Vector>,
}

fn tensor_term(res: &Resolution, n: &FPModule, i: usize) -> Term {
    let twists = block_twists(res.degrees(i), n.gens(), 1);
    let relations = block_relations(res.rank(i), n, &twists);
    Term { twists, relations }
}

fn hom_term(res: &Resolution, n: &FPModule, i: usize) -> Term {
    let twists = block_twists(res.degrees(i), n.gens(), -1);
    let relations = block_relations(res.rank(i), n, &twists);
    Term { twists, relations }
}

/// Hilbert series of `Tor_i(M, N)` from cokernels only:
/// `HS(C_i) + HS(C_{i+1}) − HS(F_{i−1} ⊗ N)` with `C_i = coker(d_i ⊗ N)`.
pub fn tor_hilbert(res: &mut Resolution, n: &FPModule, i: usize) -> HilbertSeries {
    res.extend_to(i + 1);
    let amb = n.ambient();
    let coker = |res: &Resolution, j: usize| -> HilbertSeries {
        let t = tensor_term(res, n, j - 1);
        let mut rels = t.relations;
        rels.extend(tensor_images(res, n, j, &t.twists));
        quotient_hilbert(amb, &t.twists, &rels).expect("valid complex")
    };
    if i == 0 {
        return coker(res, 1);
    }
    let hn = n.hilbert();
    coker(res, i).add(&coker(res, i + 1)).sub(&free_sum_hilbert(res.degrees(i - 1), &hn, 1))
}

/// Hilbert series of `Ext^i(M, N)`: `HS(K_i) + HS(K_{i+1}) − HS(Hom(F_{i+1}, N))`
/// with `K_i = coker(Hom(d_i, N))` and `K_0 = Hom(F_0, N)`.
pub fn ext_hilbert(res: &mut Resolution, n: &FPModule, i: usize) -> HilbertSeries {
    res.extend_to(i + 1);
    let amb = n.ambient();
    let coker = |res: &Resolution, j: usize| -> HilbertSeries {
        let t = hom_term(res, n, j);
        let mut rels = t.relations;
        if j > 0 {
            rels.extend(hom_images(res, n, j, &t.twists));
        }
        quotient_hilbert(amb, &t.twists, &rels).expect("valid complex")
    };
    let hn = n.hilbert();
    coker(res, i).add(&coker(res, i + 1)).sub(&free_sum_hilbert(res.degrees(i + 1), &hn, -1))
}

/// `Tor_i(M, N)` as a module, from `F ⊗ N`.
pub fn tor_module(res: &mut Resolution, n: &FPModule, i: usize) -> FPModule {
    res.extend_to(i + 1);
    let t = tensor_term(res, n, i);
    let carrier = FPModule::free(n.ring().clone(), t.twists.clone());
    // kernel of d_i ⊗ N inside F_i ⊗ N
    let kernel_pre: Vec<Vector> = if i == 0 {
        (0..t.twists.len()).map(|k| Vector::unit(k, t.twists[k])).collect()
    } else {
        let below = tensor_term(res, n, i - 1);
        let mut gens = tensor_images(res, n, i, &below.twists);
        let m = gens.len();
        let mut degs = t.twists.clone();
        degs.extend(below.relations.iter().map(|v| v.degree().unwrap()));
        gens.extend(below.relations);
        let syz = crate::groebner::syzygies(n.ambient(), &below.twists, &gens, &degs).expect("valid complex");
        let index: Vec<Option<usize>> = (0..gens.len()).map(|k| (k < m).then_some(k)).collect();
        syz.iter().map(|s| s.restrict(&index, &t.twists)).filter(|s| !s.is_zero()).collect()
    };
    let mut w = t.relations;
    w.extend(tensor_images(res, n, i + 1, &t.twists));
    subquotient_of(&carrier, &kernel_pre, &w)
}

/// `Ext^i(M, N)` as a module, from `Hom(F, N)`.
pub fn ext_module(res: &mut Resolution, n: &FPModule, i: usize) -> FPModule {
    res.extend_to(i + 1);
    let t = hom_term(res, n, i);
    let above = hom_term(res, n, i + 1);
    let carrier = FPModule::free(n.ring().clone(), t.twists.clone());
    let mut gens = hom_images(res, n, i + 1, &above.twists);
    let m = gens.len();
    let mut degs = t.twists.clone();
    degs.extend(above.relations.iter().map(|v| v.degree().unwrap()));
    gens.extend(above.relations);
    let syz = crate::groebner::syzygies(n.ambient(), &above.twists, &gens, &degs).expect("valid complex");
    let index: Vec<Option<usize>> = (0..gens.len()).map(|k| (k < m).then_some(k)).collect();
    let kernel_pre: Vec<Vector> = syz.iter().map(|s| s.restrict(&index, &t.twists)).filter(|s| !s.is_zero()).collect();
    let mut w = t.relations;
    if i > 0 {
        w.extend(hom_images(res, n, i, &t.twists));
    }
    subquotient_of(&carrier, &kernel_pre, &w)
}

/// Certificate that `Tor_{i+2} ≅ Tor_i(−shift)` for all `i ≥ from`.
///
/// Over a hypersurface the minimal resolution of any module is periodic of
/// period two from homological degree `dim R + 1` on, with `F_{i+2} = F_i(−deg f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub from: usize,
    pub shift: i32,
}

/// Per-index data for `Tor_i(M, N)`, `0 ≤ i ≤ bound`.
#[derive(Clone, Debug)]
pub struct TorProfile {
    pub bound: usize,
    pub hilbert: Vec<HilbertSeries>,
    /// Krull dimension per index, `None` for zero.
    pub dims: Vec<Option<usize>>,
    /// Length per index, `None` when infinite.
    pub lengths: Vec<Option<u64>>,
    /// Least `f` with `Tor_i` of finite length for all `f ≤ i ≤ bound`.
    pub finite_length_from: Option<usize>,
    pub periodic: Option<Periodicity>,
}

impl TorProfile {
    pub fn is_zero(&self, i: usize) -> bool {
        self.hilbert[i].is_zero()
    }

    /// `Tor_i = 0` for every `i` in `from..=to` (clamped to the bound).
    pub fn vanishes_on(&self, from: usize, to: usize) -> bool {
        (from..=to.min(self.bound)).all(|i| self.is_zero(i))
    }

    pub fn length(&self, i: usize) -> Option<u64> {
        self.lengths[i]
    }

    /// Values of the periodic tail beyond the bound, if certified.
    pub fn length_beyond(&self, i: usize) -> Option<Option<u64>> {
        if i <= self.bound {
            return Some(self.lengths[i]);
        }
        let p = self.periodic.as_ref()?;
        let j = if (i - self.bound).is_multiple_of(2) { self.bound } else { self.bound - 1 };
        (j >= p.from).then(|| self.lengths[j])
    }

    /// Zeros from `from` on hold for every index (not only up to the bound)
    /// because the tail is certified periodic.
    pub fn periodic_zero_tail(&self, from: usize) -> bool {
        match &self.periodic {
            Some(p) => {
                let b = self.bound;
                b > p.from && self.vanishes_on(from.max(1), b) && self.is_zero(b) && self.is_zero(b - 1)
            }
            None => false,
        }
    }
}

pub fn tor_profile(m: &FPModule, n: &FPModule, bound: usize) -> Result<TorProfile> {
    let mut res = Resolution::new(m, bound + 1);
    tor_profile_with(&mut res, n, bound)
}

pub fn tor_profile_with(res: &mut Resolution, n: &FPModule, bound: usize) -> Result<TorProfile> {
    let ring = n.ring();
    if !crate::modules::same_ring(res.module().ring(), ring) {
        return Err(Error::RingMismatch);
    }
    let hilbert: Vec<HilbertSeries> = (0..=bound).map(|i| tor_hilbert(res, n, i)).collect();
    let dims: Vec<Option<usize>> = hilbert.iter().map(|h| h.dim()).collect();
    let lengths: Vec<Option<u64>> =
        hilbert.iter().map(|h| if h.is_zero() { Some(0) } else { h.length() }).collect();
    let mut finite_length_from = None;
    for i in (0..=bound).rev() {
        if lengths[i].is_some() {
            finite_length_from = Some(i);
        } else {
            break;
        }
    }
    let mut periodic = None;
    if ring.is_hypersurface() {
        let from = ring.dim() + 2;
        let shift = ring.relations()[0].degree().unwrap() as i32;
        if bound > from && (from..=bound - 2).all(|i| hilbert[i + 2] == hilbert[i].shift(shift)) {
            periodic = Some(Periodicity { from, shift });
        }
    }
    Ok(TorProfile { bound, hilbert, dims, lengths, finite_length_from, periodic })
}
