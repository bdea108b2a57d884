use std::collections::HashMap;

use cihom_core::modules::FPModule;
use cihom_core::polyalg::{Coeff, Monomial, Poly, PolyRing};

use crate::linalg::{kernel, Echelon};

/// Monomials of weighted degree `d`, in a fixed order.
pub fn monomials(poly: &PolyRing, d: i32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let w = poly.var_weights();
    let mut exps = vec![0u16; w.len()];
    fn rec(i: usize, left: u32, w: &[u32], exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial::from_exps(exps, w));
            }
            return;
        }
        let mut e = 0;
        while e * w[i] <= left {
            exps[i] = e as u16;
            rec(i + 1, left - e * w[i], w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
    rec(0, d as u32, w, &mut exps, &mut out);
    out
}

/// One graded piece of `(⊕_k Q(−a_k)) / U` as a vector space.
struct Piece {
    basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    span: Echelon,
    free: Vec<usize>,
}

/// A graded module `(⊕_k Q(−a_k)) / U` over the polynomial ring `Q`,
/// handled one degree at a time by dense linear algebra.
pub struct DenseModule {
    poly: PolyRing,
    twists: Vec<i32>,
    /// Generators of `U` with their degrees.
    relations: Vec<(i32, Vec<Poly>)>,
    pieces: HashMap<i32, Piece>,
    monos: HashMap<i32, Vec<Monomial>>,
}

impl DenseModule {
    /// `(⊕ Q(−a_k)) / (rels + I·F)` for the ideal generators `ideal`.
    pub fn new(poly: &PolyRing, ideal: &[Poly], twists: &[i32], rels: &[Vec<Poly>]) -> Self {
        let mut relations = Vec::new();
        for r in rels {
            if let Some(d) = vector_degree(r, twists) {
                relations.push((d, r.clone()));
            }
        }
        for f in ideal {
            for (k, &a) in twists.iter().enumerate() {
                let mut v = vec![Poly::zero(); twists.len()];
                v[k] = f.clone();
                relations.push((a + f.degree().unwrap() as i32, v));
            }
        }
        DenseModule { poly: poly.clone(), twists: twists.to_vec(), relations, pieces: HashMap::new(), monos: HashMap::new() }
    }

    /// The module presented by `m`, over its ring.
    pub fn of(m: &FPModule) -> Self {
        let r = m.ring();
        DenseModule::new(r.poly(), r.relations(), m.gens(), &m.columns())
    }

    /// `⊕ R(−a_k)`.
    pub fn free(m_ring: &FPModule, twists: &[i32]) -> Self {
        let r = m_ring.ring();
        DenseModule::new(r.poly(), r.relations(), twists, &[])
    }

    pub fn poly(&self) -> &PolyRing {
        &self.poly
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    fn monos(&mut self, d: i32) -> Vec<Monomial> {
        let poly = &self.poly;
        self.monos.entry(d).or_insert_with(|| monomials(poly, d)).clone()
    }

    fn piece(&mut self, d: i32) -> &Piece {
        if !self.pieces.contains_key(&d) {
            let mut basis = Vec::new();
            for (k, &a) in self.twists.clone().iter().enumerate() {
                for m in self.monos(d - a) {
                    basis.push((k, m));
                }
            }
            let index: HashMap<(usize, Monomial), usize> = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
            let mut span = Echelon::new(*self.poly.field(), basis.len());
            for (e, r) in self.relations.clone() {
                for nu in self.monos(d - e) {
                    let v = coords_in(&self.poly, &index, basis.len(), &mul_vector(&self.poly, &nu, &r));
                    span.insert(&v);
                }
            }
            let free = span.free_columns();
            self.pieces.insert(d, Piece { basis, index, span, free });
        }
        &self.pieces[&d]
    }

    /// Vector-space dimension in degree `d`.
    pub fn dim(&mut self, d: i32) -> usize {
        self.piece(d).free.len()
    }

    /// Coordinates of a homogeneous vector of degree `d` on the chosen basis
    /// of the degree-`d` piece.
    pub fn reduce(&mut self, d: i32, v: &[Poly]) -> Vec<Coeff> {
        let poly = self.poly.clone();
        let p = self.piece(d);
        let full = coords_in(&poly, &p.index, p.basis.len(), v);
        let red = p.span.reduce(&full);
        p.free.iter().map(|&c| red[c]).collect()
    }

    /// The vector represented by basis element `i` of degree `d`.
    pub fn basis_vector(&mut self, d: i32, i: usize) -> Vec<Poly> {
        let n = self.twists.len();
        let p = self.piece(d);
        let (k, m) = p.basis[p.free[i]];
        let mut v = vec![Poly::zero(); n];
        v[k] = Poly::monomial(m, 1);
        v
    }

    /// Combination of basis vectors of degree `d`.
    pub fn combine(&mut self, d: i32, coeffs: &[Coeff]) -> Vec<Poly> {
        let n = self.twists.len();
        let poly = self.poly.clone();
        let mut v = vec![Poly::zero(); n];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let b = self.basis_vector(d, i);
                for (x, y) in v.iter_mut().zip(&b) {
                    *x = poly.add(x, &poly.scale(y, c));
                }
            }
        }
        v
    }
}

fn vector_degree(v: &[Poly], twists: &[i32]) -> Option<i32> {
    v.iter().zip(twists).find_map(|(p, &a)| p.degree().map(|e| e as i32 + a))
}

fn mul_vector(poly: &PolyRing, m: &Monomial, v: &[Poly]) -> Vec<Poly> {
    v.iter().map(|p| poly.mul_term(p, m, 1)).collect()
}

fn coords_in(poly: &PolyRing, index: &HashMap<(usize, Monomial), usize>, width: usize, v: &[Poly]) -> Vec<Coeff> {
    let f = poly.field();
    let mut out = vec![0; width];
    for (k, p) in v.iter().enumerate() {
        for &(m, c) in p.terms() {
            let i = *index.get(&(k, m)).expect("vector is homogeneous of the requested degree");
            out[i] = f.add(out[i], c);
        }
    }
    out
}

/// `Σ_s φ_{s,k} ⊗ x` for the basis element `(k, x)` of `F_i ⊗ N`, as a
/// vector in `F_{i−1} ⊗ N = ⊕_s N(−a_s)`.
fn tensor_image(poly: &PolyRing, col: &[Poly], x: &[Poly]) -> Vec<Vec<Poly>> {
    col.iter().map(|phi| x.iter().map(|e| poly.mul(phi, e)).collect()).collect()
}

/// Minimal generators, up to degree `hi`, of the submodule of the free module
/// `target` whose degree-`d` candidates are produced by `candidates`.
fn minimal_generators(
    target: &mut DenseModule,
    lo: i32,
    hi: i32,
    mut candidates: impl FnMut(&mut DenseModule, i32) -> Vec<Vec<Poly>>,
) -> (Vec<i32>, Vec<Vec<Poly>>) {
    let poly = target.poly.clone();
    let mut degs = Vec::new();
    let mut gens: Vec<Vec<Poly>> = Vec::new();
    for d in lo..=hi {
        let width = target.dim(d);
        let mut span = Echelon::new(*poly.field(), width);
        for (g, &e) in gens.iter().zip(&degs) {
            for nu in monomials(&poly, d - e) {
                let v = target.reduce(d, &mul_vector(&poly, &nu, g));
                span.insert(&v);
            }
        }
        for c in candidates(target, d) {
            let v = target.reduce(d, &c);
            if span.insert(&v) {
                degs.push(d);
                gens.push(c);
            }
        }
    }
    (degs, gens)
}

/// Minimal free resolution of `M`, truncated at internal degree `hi`, computed
/// without Gröbner bases.
pub struct DenseResolution {
    /// Generator degrees of `F_i`.
    pub twists: Vec<Vec<i32>>,
    /// Columns of `d_i: F_i → F_{i−1}`, stored at index `i − 1`.
    pub maps: Vec<Vec<Vec<Poly>>>,
    pub hi: i32,
}

impl DenseResolution {
    pub fn new(m: &FPModule, len: usize, hi: i32) -> Self {
        let r = m.ring();
        let poly = r.poly().clone();
        let lo0 = m.gens().iter().copied().min().unwrap_or(0);
        let mut twists = vec![m.gens().to_vec()];
        let mut maps = Vec::new();
        // F_1 generates the relations of M inside F_0
        let cols = m.columns();
        let col_degs: Vec<Option<i32>> = cols.iter().map(|c| vector_degree(c, m.gens())).collect();
        let mut f0 = DenseModule::free(m, m.gens());
        let (degs, gens) = minimal_generators(&mut f0, lo0, hi, |_, d| {
            let mut out = Vec::new();
            for (c, e) in cols.iter().zip(&col_degs) {
                if let Some(e) = *e {
                    for nu in monomials(&poly, d - e) {
                        out.push(mul_vector(&poly, &nu, c));
                    }
                }
            }
            out
        });
        twists.push(degs);
        maps.push(gens);
        for i in 1..len {
            let src = twists[i].clone();
            let tgt = twists[i - 1].clone();
            let columns = maps[i - 1].clone();
            let mut fs = DenseModule::free(m, &src);
            let mut ft = DenseModule::free(m, &tgt);
            let lo = src.iter().copied().min().map_or(hi + 1, |a| a + 1);
            let (degs, gens) = minimal_generators(&mut fs, lo, hi, |fs, d| {
                let n = fs.dim(d);
                let mut images = Vec::with_capacity(n);
                for b in 0..n {
                    let x = fs.basis_vector(d, b);
                    let mut img = vec![Poly::zero(); tgt.len()];
                    for (k, xk) in x.iter().enumerate() {
                        if xk.is_zero() {
                            continue;
                        }
                        for (s, phi) in columns[k].iter().enumerate() {
                            img[s] = poly.add(&img[s], &poly.mul(phi, xk));
                        }
                    }
                    images.push(ft.reduce(d, &img));
                }
                let width = ft.dim(d);
                let (ker, _) = kernel(*poly.field(), width, &images);
                ker.iter().map(|c| fs.combine(d, c)).collect()
            });
            twists.push(degs);
            maps.push(gens);
        }
        DenseResolution { twists, maps, hi }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists[i].len()
    }
}

/// `dim_F Tor_i(M, N)_j` for `0 ≤ i ≤ imax` and `lo ≤ j ≤ hi`, from a dense
/// resolution of `M` tensored with a dense model of `N`.
pub fn tor_dims(m: &FPModule, n: &FPModule, imax: usize, hi: i32) -> TorTable {
    let res = DenseResolution::new(m, imax + 1, hi);
    let poly = m.ring().poly().clone();
    let mut nd = DenseModule::of(n);
    let lo = m.gens().iter().copied().min().unwrap_or(0) + n.gens().iter().copied().min().unwrap_or(0);
    // dims of (F_i ⊗ N)_j and ranks of d_i ⊗ N in degree j
    let block_dim = |nd: &mut DenseModule, tw: &[i32], j: i32| -> usize { tw.iter().map(|&a| nd.dim(j - a)).sum() };
    let rank_of = |nd: &mut DenseModule, i: usize, j: i32| -> usize {
        if i == 0 || i >= res.twists.len() {
            return 0;
        }
        let src = &res.twists[i];
        let tgt = &res.twists[i - 1];
        let mut images = Vec::new();
        for (k, &a) in src.iter().enumerate() {
            let nb = nd.dim(j - a);
            for b in 0..nb {
                let x = nd.basis_vector(j - a, b);
                let blocks = tensor_image(&poly, &res.maps[i - 1][k], &x);
                let mut img = Vec::new();
                for (s, &t) in tgt.iter().enumerate() {
                    img.extend(nd.reduce(j - t, &blocks[s]));
                }
                images.push(img);
            }
        }
        let width = block_dim(nd, tgt, j);
        kernel(*poly.field(), width, &images).1
    };
    let mut dims = vec![vec![0usize; (hi - lo + 1).max(0) as usize]; imax + 1];
    for i in 0..=imax {
        for j in lo..=hi {
            let c = block_dim(&mut nd, &res.twists[i], j);
            let r_out = rank_of(&mut nd, i, j);
            let r_in = rank_of(&mut nd, i + 1, j);
            dims[i][(j - lo) as usize] = c - r_out - r_in;
        }
    }
    TorTable { lo, hi, dims }
}

/// Per-degree dimensions `dims[i][j − lo]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub lo: i32,
    pub hi: i32,
    pub dims: Vec<Vec<usize>>,
}

impl TorTable {
    pub fn dim(&self, i: usize, j: i32) -> usize {
        if j < self.lo || j > self.hi {
            return 0;
        }
        self.dims[i][(j - self.lo) as usize]
    }

    /// Total dimension of `Tor_i` over the computed degree window.
    pub fn total(&self, i: usize) -> usize {
        self.dims[i].iter().sum()
    }
}

/// Hilbert function of `M` on `lo..=hi` by dense linear algebra.
pub fn hilbert_function(m: &FPModule, lo: i32, hi: i32) -> Vec<usize> {
    let mut d = DenseModule::of(m);
    (lo..=hi).map(|j| d.dim(j)).collect()
}

/// `dim` of the degree-`j` syzygies of homogeneous vectors `gens` (of degrees
/// `degs`) in `⊕ R(−a_k)`, for `lo ≤ j ≤ hi`.
pub fn syzygy_dims(m_ring: &FPModule, twists: &[i32], gens: &[Vec<Poly>], degs: &[i32], lo: i32, hi: i32) -> Vec<usize> {
    let poly = m_ring.ring().poly().clone();
    let mut target = DenseModule::free(m_ring, twists);
    let mut source = DenseModule::free(m_ring, degs);
    (lo..=hi)
        .map(|j| {
            let n = source.dim(j);
            let mut images = Vec::new();
            for b in 0..n {
                let x = source.basis_vector(j, b);
                let mut img = vec![Poly::zero(); twists.len()];
                for (k, xk) in x.iter().enumerate() {
                    if xk.is_zero() {
                        continue;
                    }
                    for (s, g) in gens[k].iter().enumerate() {
                        img[s] = poly.add(&img[s], &poly.mul(g, xk));
                    }
                }
                images.push(target.reduce(j, &img));
            }
            let width = target.dim(j);
            kernel(*poly.field(), width, &images).0.len()
        })
        .collect()
}
