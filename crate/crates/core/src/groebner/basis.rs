use alloc::vec::Vec;

use super::vector::{merge_scaled, merge_scaled_poly, Key, Vector, VectorOps};
use crate::error::{Error, Result};
use crate::polyalg::{Coeff, Monomial, Poly, PolyRing, PrimeField};

/// The polynomial ring `Q` together with the reduced Gröbner basis of an ideal
/// `I`, so that all module computations happen over `R = Q/I`.
///
/// The ideal generators act as reducers on every component of every free
/// module, which is the same as adjoining the columns `f * e_i` over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    poly: PolyRing,
    ideal: Vec<Poly>,
}

impl Ambient {
    /// The polynomial ring itself (`I = 0`).
    pub fn free(poly: PolyRing) -> Self {
        Ambient { poly, ideal: Vec::new() }
    }

    pub fn new(poly: PolyRing, gens: &[Poly]) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            poly.validate(g)?;
            if !g.is_homogeneous() {
                return Err(Error::InhomogeneousRelation { index: i });
            }
        }
        let base = Ambient::free(poly);
        let vecs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0, 0)).collect();
        let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap_or(0) as i32).collect();
        let run = run(&base, 1, &vecs, &degs, false, false);
        let ideal = run.basis.iter().map(|v| v.component(0)).collect();
        Ok(Ambient { poly: base.poly, ideal })
    }

    #[inline]
    pub fn poly(&self) -> &PolyRing {
        &self.poly
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        self.poly.field()
    }

    /// Reduced monic Gröbner basis of the defining ideal, ascending by lead term.
    pub fn ideal(&self) -> &[Poly] {
        &self.ideal
    }

    fn ideal_reducer(&self, m: &Monomial) -> Option<&Poly> {
        self.ideal.iter().find(|h| h.lead().is_some_and(|l| l.0.divides(m)))
    }

    /// Normal form of a polynomial modulo the ideal.
    pub fn reduce_poly(&self, f: &Poly) -> Poly {
        let v = Vector::from_poly(f, 0, 0);
        self.reduce_mod_ideal(&v).component(0)
    }

    /// Normal form of a vector modulo `I * F`.
    pub fn reduce_mod_ideal(&self, v: &Vector) -> Vector {
        let empty = Reducers::new(0);
        Vector::from_sorted_terms(empty.reduce(self, v.terms().to_vec(), None, 0).0)
    }

    pub fn mul_poly(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce_poly(&self.poly.mul(a, b))
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Reducers {
    pub(crate) elems: Vec<Vector>,
    pub(crate) lifts: Vec<Vector>,
    by_comp: Vec<Vec<(Monomial, usize)>>,
}

enum Step<'a> {
    Ideal(&'a Poly),
    Elem(usize),
}

impl Reducers {
    pub(crate) fn new(ncomps: usize) -> Self {
        Reducers { elems: Vec::new(), lifts: Vec::new(), by_comp: (0..ncomps).map(|_| Vec::new()).collect() }
    }

    pub(crate) fn push(&mut self, v: Vector, lift: Option<Vector>) -> usize {
        let k = v.lead().expect("pushing zero reducer").0;
        let idx = self.elems.len();
        self.by_comp[k.comp as usize].push((k.mono, idx));
        self.elems.push(v);
        if let Some(l) = lift {
            self.lifts.push(l);
        }
        idx
    }

    fn find<'a>(&self, amb: &'a Ambient, k: &Key) -> Option<Step<'a>> {
        if let Some(h) = amb.ideal_reducer(&k.mono) {
            return Some(Step::Ideal(h));
        }
        self.by_comp
            .get(k.comp as usize)
            .and_then(|list| list.iter().find(|(m, _)| m.divides(&k.mono)))
            .map(|&(_, i)| Step::Elem(i))
    }

    /// Full reduction of the terms from position `start` on. When `lift` is
    /// given, each subtraction of `c * m * elem_j` also subtracts
    /// `c * m * lift_j` from it.
    pub(crate) fn reduce(
        &self,
        amb: &Ambient,
        mut terms: Vec<(Key, Coeff)>,
        mut lift: Option<Vector>,
        start: usize,
    ) -> (Vec<(Key, Coeff)>, Option<Vector>) {
        let f = amb.field();
        let mut cur = start;
        while cur < terms.len() {
            let (k, c) = terms[cur];
            let neg = f.neg(c);
            let tail = match self.find(amb, &k) {
                None => {
                    cur += 1;
                    continue;
                }
                Some(Step::Ideal(h)) => {
                    let m = h.lead().unwrap().0.quotient_of(&k.mono);
                    merge_scaled_poly(f, &terms[cur..], h, k.comp, k.twist(), neg, &m)
                }
                Some(Step::Elem(j)) => {
                    let g = &self.elems[j];
                    let m = g.lead().unwrap().0.mono.quotient_of(&k.mono);
                    if let Some(l) = lift.as_mut() {
                        *l = f.v_add_scaled(l, &self.lifts[j], neg, &m);
                    }
                    merge_scaled(f, &terms[cur..], g.terms(), neg, &m)
                }
            };
            terms.truncate(cur);
            terms.extend(tail);
        }
        (terms, lift)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Partner {
    Elem(usize),
    Ideal(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    deg: i32,
    lcm: Key,
    i: usize,
    partner: Partner,
}

pub(crate) struct Run {
    pub(crate) basis: Vec<Vector>,
    pub(crate) lifts: Vec<Vector>,
    pub(crate) syzygies: Vec<Vector>,
    /// Input indices that were needed as generators (nonzero normal form when processed).
    pub(crate) minimal: Vec<usize>,
}

fn make_monic(f: &PrimeField, v: Vec<(Key, Coeff)>, lift: Option<Vector>) -> (Vector, Option<Vector>) {
    let v = Vector::from_sorted_terms(v);
    let c = v.lead().unwrap().1;
    if c == 1 {
        return (v, lift);
    }
    let inv = f.inv(c);
    (f.v_scale(&v, inv), lift.map(|l| f.v_scale(&l, inv)))
}

/// Homogeneous Buchberger over `R`, degree by degree.
///
/// Within a degree, S-pairs are processed before input generators, so an input
/// generator survives exactly when it is not in the span of the lower-degree
/// part plus earlier generators of its own degree. When `track` is set every
/// basis element carries its expression in the inputs, and the expressions of
/// all zero reductions generate the syzygy module of the inputs over `R`.
pub(crate) fn run(
    amb: &Ambient,
    ncomps: usize,
    gens: &[Vector],
    gen_degrees: &[i32],
    track: bool,
    want_syz: bool,
) -> Run {
    let f = amb.field();
    let weights = *amb.poly().weights();
    let track = track || want_syz;
    let mut red = Reducers::new(ncomps);
    let mut pairs: Vec<Pair> = Vec::new();
    let mut syzygies = Vec::new();
    let mut minimal = Vec::new();

    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (gen_degrees[i], i));
    let mut gi = 0;

    let add = |red: &mut Reducers, pairs: &mut Vec<Pair>, v: Vector, lift: Option<Vector>| {
        let lead = v.lead().unwrap().0;
        let idx = red.push(v, lift);
        for &(m, j) in red.by_comp[lead.comp as usize].iter() {
            if j == idx {
                continue;
            }
            let l = m.lcm(&lead.mono, &weights);
            pairs.push(Pair {
                deg: l.deg() as i32 + lead.twist(),
                lcm: Key { deg: l.deg() as i32 + lead.twist(), mono: l, comp: lead.comp },
                i: idx,
                partner: Partner::Elem(j),
            });
        }
        for (h_idx, h) in amb.ideal().iter().enumerate() {
            let hm = h.lead().unwrap().0;
            if hm.is_coprime(&lead.mono) {
                continue;
            }
            let l = hm.lcm(&lead.mono, &weights);
            pairs.push(Pair {
                deg: l.deg() as i32 + lead.twist(),
                lcm: Key { deg: l.deg() as i32 + lead.twist(), mono: l, comp: lead.comp },
                i: idx,
                partner: Partner::Ideal(h_idx),
            });
        }
    };

    let record = |syz: &mut Vec<Vector>, lift: Option<Vector>| {
        if want_syz {
            let l = amb.reduce_mod_ideal(&lift.unwrap());
            if !l.is_zero() {
                syz.push(l);
            }
        }
    };

    loop {
        let pd = pairs.iter().map(|p| p.deg).min();
        let gd = order.get(gi).map(|&i| gen_degrees[i]);
        let d = match (pd, gd) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut now: Vec<Pair> = Vec::new();
        pairs.retain(|p| {
            if p.deg == d {
                now.push(*p);
                false
            } else {
                true
            }
        });
        now.sort();
        for p in now {
            let gi_v = &red.elems[p.i];
            let mi = gi_v.lead().unwrap().0.mono.quotient_of(&p.lcm.mono);
            let (s, lift) = match p.partner {
                Partner::Elem(j) => {
                    let gj = &red.elems[j];
                    let mj = gj.lead().unwrap().0.mono.quotient_of(&p.lcm.mono);
                    let mut s = merge_scaled(f, &[], gi_v.terms(), 1, &mi);
                    s = merge_scaled(f, &s, gj.terms(), f.neg(1), &mj);
                    let lift = track.then(|| {
                        let a = f.v_add_scaled(&Vector::zero(), &red.lifts[p.i], 1, &mi);
                        f.v_add_scaled(&a, &red.lifts[j], f.neg(1), &mj)
                    });
                    (s, lift)
                }
                Partner::Ideal(_) => {
                    let s = merge_scaled(f, &[], gi_v.terms(), 1, &mi);
                    let lift = track.then(|| f.v_add_scaled(&Vector::zero(), &red.lifts[p.i], 1, &mi));
                    (s, lift)
                }
            };
            let (r, lift) = red.reduce(amb, s, lift, 0);
            if r.is_empty() {
                record(&mut syzygies, lift);
            } else {
                let (v, lift) = make_monic(f, r, lift);
                add(&mut red, &mut pairs, v, lift);
            }
        }
        while gi < order.len() && gen_degrees[order[gi]] == d {
            let i = order[gi];
            gi += 1;
            let lift = track.then(|| Vector::unit(i, gen_degrees[i]));
            let (r, lift) = red.reduce(amb, gens[i].terms().to_vec(), lift, 0);
            if r.is_empty() {
                record(&mut syzygies, lift);
            } else {
                minimal.push(i);
                let (v, lift) = make_monic(f, r, lift);
                add(&mut red, &mut pairs, v, lift);
            }
        }
    }

    // Leads are already pairwise non-divisible; reduce the tails.
    for i in 0..red.elems.len() {
        let terms = red.elems[i].terms().to_vec();
        let lift = track.then(|| red.lifts[i].clone());
        let (r, lift) = red.reduce(amb, terms, lift, 1);
        red.elems[i] = Vector::from_sorted_terms(r);
        if let Some(l) = lift {
            red.lifts[i] = amb.reduce_mod_ideal(&l);
        }
    }

    let mut idx: Vec<usize> = (0..red.elems.len()).collect();
    idx.sort_by(|&a, &b| red.elems[a].lead().unwrap().0.cmp(&red.elems[b].lead().unwrap().0));
    let basis = idx.iter().map(|&i| red.elems[i].clone()).collect();
    let lifts = if track { idx.iter().map(|&i| red.lifts[i].clone()).collect() } else { Vec::new() };
    Run { basis, lifts, syzygies, minimal }
}
