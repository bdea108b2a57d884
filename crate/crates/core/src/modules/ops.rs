use alloc::vec::Vec;

use super::{FPModule, Ideal, ModuleMap};
use crate::error::{Error, Result};
use crate::groebner::{lift, minimal_generators, minimal_syzygies, quotient_hilbert, syzygies, Key, Vector};
use crate::polyalg::Poly;

/// Presentation of `(P + W) / W` for vectors `P`, `W` in the generator free
/// module of `m`, minimalized. With `W ⊆ P` this is `P / W`.
pub fn subquotient_of(m: &FPModule, p: &[Vector], w: &[Vector]) -> FPModule {
    let amb = m.ambient();
    let twists = m.gens();
    let w: Vec<Vector> = w.iter().filter(|v| !v.is_zero()).cloned().collect();
    let wmin = minimal_generators(amb, twists, &w).expect("valid vectors");
    let w: Vec<Vector> = wmin.into_iter().map(|i| w[i].clone()).collect();
    let mut all = w.clone();
    all.extend(p.iter().filter(|v| !v.is_zero()).cloned());
    let mins = minimal_generators(amb, twists, &all).expect("valid vectors");
    let kept: Vec<Vector> = mins.into_iter().filter(|&i| i >= w.len()).map(|i| all[i].clone()).collect();
    let k = kept.len();
    let gens: Vec<i32> = kept.iter().map(|v| v.degree().unwrap()).collect();
    let mut combined = kept;
    combined.extend(w.iter().cloned());
    let degs: Vec<i32> = combined.iter().map(|v| v.degree().unwrap()).collect();
    let syz = syzygies(amb, twists, &combined, &degs).expect("valid vectors");
    let index: Vec<Option<usize>> = (0..combined.len()).map(|i| (i < k).then_some(i)).collect();
    let rels: Vec<Vector> = syz.iter().map(|s| s.restrict(&index, &gens)).filter(|s| !s.is_zero()).collect();
    FPModule::raw(m.ring().clone(), gens, rels).minimalize()
}

/// `{v in F_source : φ(v) ∈ U_target}` as generating vectors.
pub(crate) fn preimage(phi: &ModuleMap) -> Vec<Vector> {
    let src = phi.source();
    let tgt = phi.target();
    let amb = src.ambient();
    let mut gens: Vec<Vector> = phi.columns().to_vec();
    let mut degs: Vec<i32> = src.gens().to_vec();
    gens.extend(tgt.relations().iter().cloned());
    degs.extend(tgt.relation_degrees());
    let syz = syzygies(amb, tgt.gens(), &gens, &degs).expect("valid map");
    let m = src.ngens();
    let index: Vec<Option<usize>> = (0..gens.len()).map(|i| (i < m).then_some(i)).collect();
    syz.iter().map(|s| s.restrict(&index, src.gens())).filter(|s| !s.is_zero()).collect()
}

/// Homology `ker g / im f` of `L --f--> M --g--> N`.
pub fn subquotient(g: &ModuleMap, f: &ModuleMap) -> Result<FPModule> {
    if f.target().gens() != g.source().gens() {
        return Err(Error::InvalidInput("maps are not composable".into()));
    }
    if !g.compose(f)?.is_zero() {
        return Err(Error::CompositionNotZero);
    }
    let m = g.source();
    let pre = preimage(g);
    let mut w = m.relations().to_vec();
    w.extend(f.columns().iter().cloned());
    Ok(subquotient_of(m, &pre, &w))
}

/// Generators of `Hom(coker(rels), R)` inside `⊕ R(a_i)`, the kernel of the
/// transposed relation matrix.
fn transpose_kernel(m: &FPModule) -> Vec<Vector> {
    let amb = m.ambient();
    let rel_twists: Vec<i32> = m.relation_degrees().iter().map(|b| -b).collect();
    let n = m.ngens();
    let mut cols: Vec<Vec<(Key, u32)>> = (0..n).map(|_| Vec::new()).collect();
    for (j, r) in m.relations().iter().enumerate() {
        for &(k, c) in r.terms() {
            cols[k.comp as usize].push((Key { deg: k.mono.deg() as i32 + rel_twists[j], mono: k.mono, comp: j as u32 }, c));
        }
    }
    let cols: Vec<Vector> = cols
        .into_iter()
        .map(|mut t| {
            t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            Vector::from_sorted_terms(t)
        })
        .collect();
    let dual_degs: Vec<i32> = m.gens().iter().map(|a| -a).collect();
    minimal_syzygies(amb, &rel_twists, &cols, &dual_degs).expect("valid relations")
}

/// `M*`, `M**` and the canonical map `κ: M → M**`.
#[derive(Clone, Debug)]
pub struct Dual {
    /// `Hom(M, R)`, generated by `ystar`.
    pub mstar: FPModule,
    /// Generators of `M*` inside `⊕ R(a_i)`: `y_k(e_i)` is component `i`.
    pub ystar: Vec<Vector>,
    /// `Hom(M*, R)`, generated by `z`.
    pub mstarstar: FPModule,
    /// Generators of `M**` inside `H = ⊕ R(deg y_k)`.
    pub z: Vec<Vector>,
    /// Twists of `H`.
    pub h_twists: Vec<i32>,
    /// `κ(e_i) = (y_1(e_i), …, y_s(e_i))` in `H`.
    pub kappa_vectors: Vec<Vector>,
    /// `κ` as a map into the presentation of `M**`.
    pub kappa: ModuleMap,
}

impl FPModule {
    pub fn dual(&self) -> Dual {
        let amb = self.ambient();
        let ystar = transpose_kernel(self);
        let ydeg: Vec<i32> = ystar.iter().map(|y| y.degree().unwrap()).collect();
        let dual_twists: Vec<i32> = self.gens().iter().map(|a| -a).collect();
        let b = minimal_syzygies(amb, &dual_twists, &ystar, &ydeg).expect("valid vectors");
        let mstar = FPModule::raw(self.ring().clone(), ydeg.clone(), b);
        let h_twists: Vec<i32> = ydeg.iter().map(|d| -d).collect();
        let z = transpose_kernel(&mstar);
        let zdeg: Vec<i32> = z.iter().map(|v| v.degree().unwrap()).collect();
        let zrels = minimal_syzygies(amb, &h_twists, &z, &zdeg).expect("valid vectors");
        let mstarstar = FPModule::raw(self.ring().clone(), zdeg.clone(), zrels);
        let n = self.ngens();
        let mut kv: Vec<Vec<(Key, u32)>> = (0..n).map(|_| Vec::new()).collect();
        for (k, y) in ystar.iter().enumerate() {
            for &(key, c) in y.terms() {
                kv[key.comp as usize].push((Key { deg: key.mono.deg() as i32 + h_twists[k], mono: key.mono, comp: k as u32 }, c));
            }
        }
        let kappa_vectors: Vec<Vector> = kv
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Vector::from_sorted_terms(t)
            })
            .collect();
        let cols = lift(amb, &h_twists, &z, &zdeg, &kappa_vectors)
            .expect("valid vectors")
            .expect("κ lands in the double dual");
        let kappa = ModuleMap::raw(self.clone(), mstarstar.clone(), cols);
        Dual { mstar, ystar, mstarstar, z, h_twists, kappa_vectors, kappa }
    }

    /// Vectors generating the kernel of `F → M**`, i.e. the preimage of `t(M)`.
    fn torsion_preimage(&self, d: &Dual) -> Vec<Vector> {
        syzygies(self.ambient(), &d.h_twists, &d.kappa_vectors, self.gens()).expect("valid vectors")
    }

    /// `t(M) = ker(M → M**)` and `M / t(M)`.
    ///
    /// Over a Gorenstein ring a finitely generated module is torsion-free exactly
    /// when it embeds in its double dual, so the kernel of `κ` is the torsion
    /// submodule.
    pub fn torsion_parts(&self) -> (FPModule, FPModule) {
        let d = self.dual();
        self.torsion_parts_with(&d)
    }

    pub fn torsion_parts_with(&self, d: &Dual) -> (FPModule, FPModule) {
        let pre = self.torsion_preimage(d);
        let t = subquotient_of(self, &pre, self.relations());
        let mut rels = self.relations().to_vec();
        rels.extend(pre);
        let tf = FPModule::raw(self.ring().clone(), self.gens().to_vec(), rels).minimalize();
        (t, tf)
    }

    pub fn is_torsion_free(&self) -> bool {
        let d = self.dual();
        self.is_torsion_free_with(&d)
    }

    fn is_torsion_free_with(&self, d: &Dual) -> bool {
        let pre = self.torsion_preimage(d);
        let mut rels = self.relations().to_vec();
        rels.extend(pre);
        let amb = self.ambient();
        quotient_hilbert(amb, self.gens(), &rels).unwrap() == self.hilbert()
    }

    /// `κ` is an isomorphism.
    pub fn is_reflexive(&self) -> bool {
        let d = self.dual();
        if !self.is_torsion_free_with(&d) {
            return false;
        }
        let amb = self.ambient();
        quotient_hilbert(amb, &d.h_twists, &d.kappa_vectors).unwrap()
            == quotient_hilbert(amb, &d.h_twists, &d.z).unwrap()
    }

    /// `Fitt_r(M)`: the ideal of `(g − r)`-minors of a minimal presentation.
    pub fn fitting_ideal(&self, r: i64) -> Ideal {
        let ring = self.ring().clone();
        if r < 0 {
            return Ideal::zero(ring);
        }
        let m = self.minimalize();
        let g = m.ngens() as i64;
        let k = g - r;
        if k <= 0 {
            return Ideal::unit(ring);
        }
        let k = k as usize;
        let cols = m.columns();
        if k > cols.len() {
            return Ideal::zero(ring);
        }
        let amb = m.ambient();
        let mut minors = Vec::new();
        for rows in combinations(m.ngens(), k) {
            for cs in combinations(cols.len(), k) {
                let sub: Vec<Vec<Poly>> =
                    rows.iter().map(|&i| cs.iter().map(|&j| cols[j][i].clone()).collect()).collect();
                let d = determinant(amb, &sub);
                if !d.is_zero() {
                    minors.push(d);
                }
            }
        }
        Ideal::new(ring, minors)
    }

    /// `ann_R(M)`.
    pub fn annihilator(&self) -> Ideal {
        let n = self.ngens();
        let ring = self.ring().clone();
        if n == 0 {
            return Ideal::unit(ring);
        }
        // 1 ↦ (e_1 in copy 1, …, e_n in copy n) inside M^n, each copy twisted
        // so that the image has degree 0
        let a = self.gens();
        let twists: Vec<i32> = (0..n * n).map(|k| a[k % n] - a[k / n]).collect();
        let mut gens = alloc::vec![Vector::zero()];
        let w_terms: Vec<(Key, u32)> = {
            let mut t: Vec<(Key, u32)> = (0..n)
                .map(|i| (Key { deg: 0, mono: crate::polyalg::Monomial::ONE, comp: (i * n + i) as u32 }, 1))
                .collect();
            t.sort_unstable_by(|x, y| y.0.cmp(&x.0));
            t
        };
        gens[0] = Vector::from_sorted_terms(w_terms);
        let mut degs = alloc::vec![0];
        for i in 0..n {
            for r in self.relations() {
                gens.push(r.remap(|j| i * n + j, &twists));
                degs.push(r.degree().unwrap() - a[i]);
            }
        }
        let syz = syzygies(self.ambient(), &twists, &gens, &degs).expect("valid vectors");
        Ideal::new(ring, syz.iter().map(|s| s.component(0)).collect())
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by Laplace expansion along the first row, reduced modulo the ideal.
pub(crate) fn determinant(amb: &crate::groebner::Ambient, m: &[Vec<Poly>]) -> Poly {
    let k = m.len();
    if k == 0 {
        return Poly::constant(1);
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let poly = amb.poly();
    let mut acc = Poly::zero();
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = amb.mul_poly(&m[0][j], &determinant(amb, &minor));
        acc = if j % 2 == 0 { poly.add(&acc, &term) } else { poly.sub(&acc, &term) };
    }
    amb.reduce_poly(&acc)
}
