use cihom_core::polyalg::{Coeff, PrimeField};

/// Row space of a set of vectors, kept fully reduced: every pivot column is
/// zero in all other rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &(p, _) in &self.rows {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component in the row space.
    pub fn reduce(&self, v: &[Coeff]) -> Vec<Coeff> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Coeff]) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// Basis of `{c : Σ c_k images[k] = 0}` and the rank of the images.
pub fn kernel(field: PrimeField, width: usize, images: &[Vec<Coeff>]) -> (Vec<Vec<Coeff>>, usize) {
    let n = images.len();
    let f = field;
    // rows of [image | combination], reduced on the image part only
    let mut rows: Vec<(usize, Vec<Coeff>, Vec<Coeff>)> = Vec::new();
    let mut kernel = Vec::new();
    for (k, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut comb = vec![0; n];
        comb[k] = 1;
        for (p, row, rc) in &rows {
            let c = v[*p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
                for (x, &r) in comb.iter_mut().zip(rc) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => kernel.push(comb),
            Some(p) => {
                let inv = f.inv(v[p]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                rows.push((p, v, comb));
            }
        }
    }
    debug_assert!(rows.iter().all(|r| r.1.len() == width));
    let rank = rows.len();
    (kernel, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_a_small_matrix() {
        let f = PrimeField::new(7).unwrap();
        let imgs = vec![vec![1, 2], vec![2, 4], vec![0, 1]];
        let (k, r) = kernel(f, 2, &imgs);
        assert_eq!(r, 2);
        assert_eq!(k, vec![vec![5, 1, 0]]);
        let mut e = Echelon::new(f, 2);
        assert!(e.insert(&[1, 2]));
        assert!(!e.insert(&[3, 6]));
        assert_eq!(e.free_columns(), vec![1]);
    }
}
