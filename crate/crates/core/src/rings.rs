//! Complete intersection rings `R = Q/(f_1..f_c)` and their hypersurface towers.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Ambient, GroebnerBasis, Vector};
use crate::polyalg::{Poly, PolyRing};

/// A validated graded complete intersection.
#[derive(Clone, Debug)]
pub struct CIRing {
    poly: PolyRing,
    relations: Vec<Poly>,
    ambient: Ambient,
    dim: usize,
    codim: usize,
    min_primes: Option<Vec<MinPrime>>,
}

/// A declared minimal prime with its Gröbner basis over `Q`.
#[derive(Clone, Debug)]
pub struct MinPrime {
    pub gens: Vec<Poly>,
    pub gb: GroebnerBasis,
    pub dim: usize,
}

impl PartialEq for CIRing {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.relations == other.relations
    }
}

impl Eq for CIRing {}

/// Krull dimension of `Q/(gens)` (`None` for the zero ring).
pub fn quotient_dim(poly: &PolyRing, gens: &[Poly]) -> Result<Option<usize>> {
    let amb = Ambient::free(poly.clone());
    let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0, 0)).collect();
    Ok(groebner_basis(&amb, &[0], &vs)?.hilbert(&amb).dim())
}

/// Rank of the linear parts of the relations, i.e. how many variables they eliminate.
fn linear_rank(poly: &PolyRing, relations: &[Poly]) -> usize {
    let f = poly.field();
    let n = poly.nvars();
    let mut rows: Vec<Vec<u32>> = relations
        .iter()
        .map(|g| {
            let mut row = alloc::vec![0u32; n];
            for (m, c) in g.terms() {
                if let Some(i) = (0..n).find(|&i| m.exp(i) == 1 && m.deg() == poly.weights()[i]) {
                    row[i] = *c;
                }
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = f.inv(rows[rank][col]);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let s = f.mul(rows[r][col], inv);
                for k in 0..n {
                    let t = f.mul(s, rows[rank][k]);
                    rows[r][k] = f.sub(rows[r][k], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

impl CIRing {
    /// Validates that the relations form a homogeneous regular sequence of
    /// positive-degree forms: each prefix must drop the dimension by one.
    pub fn new(poly: PolyRing, relations: Vec<Poly>, min_primes: Option<Vec<Vec<Poly>>>) -> Result<Self> {
        for (i, f) in relations.iter().enumerate() {
            poly.validate(f)?;
            if !f.is_homogeneous() {
                return Err(Error::InhomogeneousRelation { index: i });
            }
            if f.is_zero() || f.degree() == Some(0) {
                return Err(Error::InvalidInput(alloc::format!("relation {i} has no positive degree")));
            }
        }
        let n = poly.nvars();
        for j in 1..=relations.len() {
            let d = quotient_dim(&poly, &relations[..j])?;
            if d != Some(n - j) {
                return Err(Error::NotRegularSequence { index: j - 1 });
            }
        }
        let ambient = Ambient::new(poly.clone(), &relations)?;
        let dim = n - relations.len();
        let codim = n - linear_rank(&poly, &relations) - dim;
        let mut ring = CIRing { poly, relations, ambient, dim, codim, min_primes: None };
        if let Some(primes) = min_primes {
            ring.min_primes = Some(ring.validate_primes(primes)?);
        }
        Ok(ring)
    }

    fn validate_primes(&self, primes: Vec<Vec<Poly>>) -> Result<Vec<MinPrime>> {
        let free = Ambient::free(self.poly.clone());
        let mut out = Vec::new();
        for (i, gens) in primes.into_iter().enumerate() {
            for g in &gens {
                self.poly.validate(g)?;
            }
            let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0, 0)).collect();
            let gb = groebner_basis(&free, &[0], &vs)?;
            for f in &self.relations {
                if !gb.contains(&free, &Vector::from_poly(f, 0, 0)) {
                    return Err(Error::InvalidInput(alloc::format!(
                        "declared prime {i} does not contain the defining ideal"
                    )));
                }
            }
            let dim = gb.hilbert(&free).dim().ok_or_else(|| {
                Error::InvalidInput(alloc::format!("declared prime {i} is the unit ideal"))
            })?;
            out.push(MinPrime { gens, gb, dim });
        }
        if !out.iter().any(|p| p.dim == self.dim) {
            return Err(Error::InvalidInput("no declared prime has the dimension of the ring".into()));
        }
        Ok(out)
    }

    pub fn poly(&self) -> &PolyRing {
        &self.poly
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Embedding codimension `ν(m) − dim R`.
    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Number of relations `c`.
    pub fn relative_codim(&self) -> usize {
        self.relations.len()
    }

    pub fn is_hypersurface(&self) -> bool {
        self.relations.len() == 1
    }

    pub fn min_primes(&self) -> Option<&[MinPrime]> {
        self.min_primes.as_deref()
    }

    /// The stage `Q/(f_1..f_j)`.
    pub fn stage(&self, j: usize) -> CIRing {
        let rel = self.relations[..j].to_vec();
        let ambient = Ambient::new(self.poly.clone(), &rel).expect("prefix of a validated sequence");
        let n = self.poly.nvars();
        let codim = n - linear_rank(&self.poly, &rel) - (n - j);
        CIRing { poly: self.poly.clone(), relations: rel, ambient, dim: n - j, codim, min_primes: None }
    }

    /// `S_0 = Q, S_1 = Q/(f_1), …, S_c = R`, each a hypersurface in the previous one.
    pub fn hypersurface_tower(&self) -> Vec<Arc<CIRing>> {
        (0..=self.relations.len()).map(|j| Arc::new(self.stage(j))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(rels: &[&str]) -> Result<CIRing> {
        let q = PolyRing::standard(101, &["x", "y"]).unwrap();
        let rels = rels.iter().map(|s| q.parse(s).unwrap()).collect();
        CIRing::new(q, rels, None)
    }

    #[test]
    fn node_is_a_hypersurface() {
        let r = ring(&["x*y"]).unwrap();
        assert_eq!((r.dim(), r.codim(), r.is_hypersurface()), (1, 1, true));
        assert_eq!(r.hypersurface_tower().len(), 2);
    }

    #[test]
    fn artinian_codim_two() {
        let r = ring(&["x^2", "y^2"]).unwrap();
        assert_eq!((r.dim(), r.codim()), (0, 2));
        let t = r.hypersurface_tower();
        assert_eq!(t.len(), 3);
        assert_eq!(t.iter().map(|s| s.dim()).collect::<Vec<_>>(), alloc::vec![2, 1, 0]);
        assert_eq!(*t[2], r);
    }

    #[test]
    fn rejects_non_regular_sequences() {
        assert_eq!(ring(&["x", "x*y"]).unwrap_err(), Error::NotRegularSequence { index: 1 });
        assert_eq!(ring(&["x^2 + y"]).unwrap_err(), Error::InhomogeneousRelation { index: 0 });
    }

    #[test]
    fn polynomial_ring_tower() {
        let r = ring(&[]).unwrap();
        assert_eq!((r.dim(), r.codim()), (2, 0));
        assert_eq!(r.hypersurface_tower().len(), 1);
    }

    #[test]
    fn linear_relations_lower_codim() {
        let r = ring(&["x"]).unwrap();
        assert_eq!((r.dim(), r.codim(), r.relative_codim()), (1, 0, 1));
    }

    #[test]
    fn declared_primes_validated() {
        let q = PolyRing::standard(101, &["x", "y"]).unwrap();
        let xy = q.parse("x*y").unwrap();
        let primes = alloc::vec![alloc::vec![q.parse("x").unwrap()], alloc::vec![q.parse("y").unwrap()]];
        assert!(CIRing::new(q.clone(), alloc::vec![xy.clone()], Some(primes)).is_ok());
        let bad = alloc::vec![alloc::vec![q.parse("x+y").unwrap()]];
        assert!(CIRing::new(q, alloc::vec![xy], Some(bad)).is_err());
    }
}
