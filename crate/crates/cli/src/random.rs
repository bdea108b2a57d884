//! Seeded random small modules and the red-alarm sweep over them.

use std::sync::Arc;

use cihom_core::modules::FPModule;
use cihom_core::polyalg::{Monomial, Poly, PolyRing};
use cihom_core::rings::CIRing;
use cihom_core::theorems::{check_pair, check_powers, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::files::ModuleFile;

/// Shape limits for random modules.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_gens: usize,
    pub max_relations: usize,
    /// Largest generator degree.
    pub max_gen_deg: i32,
    /// Largest degree of a relation entry.
    pub max_entry_deg: i32,
}

impl Default for Shape {
    fn default() -> Self {
        Shape { max_gens: 2, max_relations: 3, max_gen_deg: 1, max_entry_deg: 2 }
    }
}

fn monomials(q: &PolyRing, d: i32) -> Vec<Monomial> {
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
    let mut out = Vec::new();
    if d >= 0 {
        let w = q.var_weights();
        rec(0, d as u32, w, &mut vec![0; w.len()], &mut out);
    }
    out
}

/// Homogeneous polynomial of degree `d` with a few random terms.
pub fn random_poly(rng: &mut impl Rng, q: &PolyRing, d: i32) -> Poly {
    let monos = monomials(q, d);
    if monos.is_empty() {
        return Poly::zero();
    }
    let p = q.field().p();
    let nterms = rng.gen_range(1..=monos.len().min(3));
    let terms = (0..nterms).map(|_| (monos[rng.gen_range(0..monos.len())], rng.gen_range(1..p))).collect();
    q.from_terms(terms)
}

/// A random graded module over `ring` within `shape`.
pub fn random_module(rng: &mut impl Rng, ring: &Arc<CIRing>, shape: Shape) -> FPModule {
    let q = ring.poly().clone();
    let ngens = rng.gen_range(1..=shape.max_gens);
    let mut gens: Vec<i32> = (0..ngens).map(|_| rng.gen_range(0..=shape.max_gen_deg)).collect();
    gens.sort_unstable();
    let nrels = rng.gen_range(0..=shape.max_relations);
    let top = gens.iter().copied().max().unwrap_or(0);
    let cols: Vec<Vec<Poly>> = (0..nrels)
        .map(|_| {
            let e = rng.gen_range(top + 1..=shape.max_entry_deg.max(1) + gens[0]);
            gens.iter()
                .map(|&a| if rng.gen_bool(0.7) { random_poly(rng, &q, e - a) } else { Poly::zero() })
                .collect()
        })
        .collect();
    FPModule::from_columns(ring.clone(), gens, &cols).expect("homogeneous by construction")
}

/// `count` random modules over `ring`, reproducible from `seed`.
pub fn random_modules(ring: &Arc<CIRing>, seed: u64, count: usize, shape: Shape) -> Vec<FPModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_module(&mut rng, ring, shape)).collect()
}

/// Every checker on consecutive random pairs `(M_i, M_{i+1})` and on the
/// second tensor power of each `M_i`.
pub struct Sweep {
    pub modules: Vec<FPModule>,
    pub verdicts: Vec<Vec<Verdict>>,
}

impl Sweep {
    pub fn run(ring: &Arc<CIRing>, seed: u64, count: usize, bound: usize) -> Sweep {
        let modules = random_modules(ring, seed, count, Shape::default());
        let verdicts = (0..modules.len())
            .into_par_iter()
            .map(|i| {
                let (m, n) = (&modules[i], &modules[(i + 1) % modules.len()]);
                let mut v = check_pair(m, n, bound);
                v.push(check_powers(m, 2, bound));
                v
            })
            .collect();
        Sweep { modules, verdicts }
    }

    /// Indices of pairs with a red alarm.
    pub fn alarms(&self) -> Vec<usize> {
        (0..self.verdicts.len()).filter(|&i| self.verdicts[i].iter().any(Verdict::red_alarm)).collect()
    }

    pub fn to_json(&self) -> Value {
        let alarms: Vec<Value> = self
            .alarms()
            .into_iter()
            .map(|i| {
                let j = (i + 1) % self.modules.len();
                json!({
                    "index": i,
                    "M": ModuleFile::of(&self.modules[i], None),
                    "N": ModuleFile::of(&self.modules[j], None),
                    "theorems": self.verdicts[i].iter().filter(|v| v.red_alarm()).map(|v| v.theorem.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "modules": self.modules.len(), "red_alarms": alarms })
    }
}
