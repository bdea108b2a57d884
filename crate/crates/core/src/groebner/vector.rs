use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::polyalg::{Coeff, Monomial, Poly, PrimeField};

/// A monomial of a graded free module: `mono * e_comp`, with `deg` the total
/// degree `deg(mono) + twist(comp)`.
///
/// Ordered degree first, then grevlex on the monomial, then by position with
/// lower component indices larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    pub deg: i32,
    pub mono: Monomial,
    pub comp: u32,
}

impl Key {
    #[inline]
    pub fn twist(&self) -> i32 {
        self.deg - self.mono.deg() as i32
    }

    #[inline]
    pub fn mul(&self, m: &Monomial) -> Key {
        Key { deg: self.deg + m.deg() as i32, mono: self.mono.mul(m), comp: self.comp }
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.mono.cmp(&other.mono))
            .then_with(|| other.comp.cmp(&self.comp))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of a graded free module, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<(Key, Coeff)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_sorted_terms(terms: Vec<(Key, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Vector { terms }
    }

    /// Basis vector `e_comp` in a free module where that component has the given twist.
    pub fn unit(comp: usize, twist: i32) -> Self {
        Vector { terms: alloc::vec![(Key { deg: twist, mono: Monomial::ONE, comp: comp as u32 }, 1)] }
    }

    /// `f * e_comp`.
    pub fn from_poly(f: &Poly, comp: usize, twist: i32) -> Self {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|&(m, c)| (Key { deg: m.deg() as i32 + twist, mono: m, comp: comp as u32 }, c))
                .collect(),
        }
    }

    /// Assemble a column from its entries.
    pub fn from_entries(entries: &[Poly], twists: &[i32]) -> Self {
        debug_assert_eq!(entries.len(), twists.len());
        let mut terms: Vec<(Key, Coeff)> = Vec::new();
        for (k, f) in entries.iter().enumerate() {
            for &(m, c) in f.terms() {
                terms.push((Key { deg: m.deg() as i32 + twists[k], mono: m, comp: k as u32 }, c));
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Vector { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Key, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Key, Coeff)> {
        self.terms
    }

    #[inline]
    pub fn lead(&self) -> Option<&(Key, Coeff)> {
        self.terms.first()
    }

    pub fn degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0.deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((k, _)) => self.terms.iter().all(|(l, _)| l.deg == k.deg),
        }
    }

    pub fn component(&self, comp: usize) -> Poly {
        Poly::from_sorted_terms(
            self.terms.iter().filter(|t| t.0.comp as usize == comp).map(|&(k, c)| (k.mono, c)).collect(),
        )
    }

    pub fn entries(&self, ncomps: usize) -> Vec<Poly> {
        let mut out: Vec<Vec<(Monomial, Coeff)>> = (0..ncomps).map(|_| Vec::new()).collect();
        for &(k, c) in &self.terms {
            out[k.comp as usize].push((k.mono, c));
        }
        out.into_iter().map(Poly::from_sorted_terms).collect()
    }

    /// Component of some constant (unit) entry, if any.
    pub fn has_unit_entry(&self) -> Option<usize> {
        self.terms.iter().find(|t| t.0.mono.is_one()).map(|t| t.0.comp as usize)
    }

    /// Relabel components through `f` into a free module with the given twists.
    pub fn remap(&self, f: impl Fn(usize) -> usize, twists: &[i32]) -> Vector {
        let mut terms: Vec<(Key, Coeff)> = self
            .terms
            .iter()
            .map(|&(k, c)| {
                let comp = f(k.comp as usize);
                (Key { deg: k.mono.deg() as i32 + twists[comp], mono: k.mono, comp: comp as u32 }, c)
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Vector { terms }
    }

    /// Keep the components with `new_index[comp] = Some(new)`, relabelled to `new`.
    pub fn restrict(&self, new_index: &[Option<usize>], twists: &[i32]) -> Vector {
        let mut terms: Vec<(Key, Coeff)> = self
            .terms
            .iter()
            .filter_map(|&(k, c)| {
                new_index[k.comp as usize].map(|comp| {
                    (Key { deg: k.mono.deg() as i32 + twists[comp], mono: k.mono, comp: comp as u32 }, c)
                })
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Vector { terms }
    }
}

/// Arithmetic on vectors over a prime field.
pub trait VectorOps {
    fn v_add_scaled(&self, a: &Vector, b: &Vector, c: Coeff, m: &Monomial) -> Vector;
    fn v_scale(&self, a: &Vector, c: Coeff) -> Vector;
    fn v_mul_poly(&self, a: &Vector, f: &Poly) -> Vector;

    fn v_add(&self, a: &Vector, b: &Vector) -> Vector {
        self.v_add_scaled(a, b, 1, &Monomial::ONE)
    }
}

impl VectorOps for PrimeField {
    fn v_add_scaled(&self, a: &Vector, b: &Vector, c: Coeff, m: &Monomial) -> Vector {
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        Vector { terms: merge_scaled(self, &a.terms, &b.terms, c, m) }
    }

    fn v_scale(&self, a: &Vector, c: Coeff) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector { terms: a.terms.iter().map(|&(k, d)| (k, self.mul(c, d))).collect() }
    }

    fn v_mul_poly(&self, a: &Vector, f: &Poly) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in f.terms() {
            acc = self.v_add_scaled(&acc, a, *c, m);
        }
        acc
    }
}

/// `a + c * m * b` on sorted term lists.
pub(crate) fn merge_scaled(
    f: &PrimeField,
    a: &[(Key, Coeff)],
    b: &[(Key, Coeff)],
    c: Coeff,
    m: &Monomial,
) -> Vec<(Key, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bk = b[j].0.mul(m);
        match a[i].0.cmp(&bk) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((bk, f.mul(c, b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(a[i].1, f.mul(c, b[j].1));
                if s != 0 {
                    out.push((bk, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(bk, bc) in &b[j..] {
        out.push((bk.mul(m), f.mul(c, bc)));
    }
    out
}

/// `a + c * m * h * e_comp` where `h` is a polynomial placed in component `comp`
/// of twist `twist`.
pub(crate) fn merge_scaled_poly(
    f: &PrimeField,
    a: &[(Key, Coeff)],
    h: &Poly,
    comp: u32,
    twist: i32,
    c: Coeff,
    m: &Monomial,
) -> Vec<(Key, Coeff)> {
    let hv: Vec<(Key, Coeff)> = h
        .terms()
        .iter()
        .map(|&(n, d)| (Key { deg: n.deg() as i32 + twist, mono: n, comp }, d))
        .collect();
    merge_scaled(f, a, &hv, c, m)
}
