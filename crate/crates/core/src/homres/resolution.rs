use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::groebner::{minimal_syzygies, Vector};
use crate::modules::FPModule;

/// Minimal graded free resolution `… → F_2 → F_1 → F_0 → M`, computed up to a
/// homological bound and extendable on demand.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: FPModule,
    /// `degrees[i]`: generator degrees of `F_i`.
    degrees: Vec<Vec<i32>>,
    /// `maps[i]`: columns of `d_{i+1}: F_{i+1} → F_i`.
    maps: Vec<Vec<Vector>>,
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
    pub bound: usize,
}

impl BettiTable {
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, i32::MIN)..=(i, i32::MAX)).map(|(_, v)| *v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.bound).map(|i| self.total(i)).collect()
    }
}

impl Resolution {
    /// Resolve through `F_bound` (so `d_1 … d_bound` are known).
    pub fn new(m: &FPModule, bound: usize) -> Self {
        let module = m.minimalize();
        let mut res = Resolution {
            degrees: alloc::vec![module.gens().to_vec()],
            maps: Vec::new(),
            module,
        };
        res.extend_to(bound);
        res
    }

    pub fn module(&self) -> &FPModule {
        &self.module
    }

    /// Largest `i` with `F_i` known.
    pub fn bound(&self) -> usize {
        self.maps.len()
    }

    pub fn extend_to(&mut self, bound: usize) {
        let amb = self.module.ambient().clone();
        while self.maps.len() < bound {
            let i = self.maps.len();
            let next = if i == 0 {
                self.module.relations().to_vec()
            } else if self.maps[i - 1].is_empty() {
                Vec::new()
            } else {
                minimal_syzygies(&amb, &self.degrees[i - 1], &self.maps[i - 1], &self.degrees[i])
                    .expect("resolution data is homogeneous")
            };
            self.degrees.push(next.iter().map(|v| v.degree().unwrap()).collect());
            self.maps.push(next);
        }
    }

    /// Generator degrees of `F_i`.
    pub fn degrees(&self, i: usize) -> &[i32] {
        &self.degrees[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees[i].len()
    }

    /// Columns of `d_i: F_i → F_{i-1}` (`i ≥ 1`).
    pub fn differential(&self, i: usize) -> &[Vector] {
        &self.maps[i - 1]
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, degs) in self.degrees.iter().enumerate() {
            for &d in degs {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries, bound: self.bound() }
    }

    /// Total Betti numbers `β_0 … β_bound`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.bound()).map(|i| self.rank(i)).collect()
    }
}
