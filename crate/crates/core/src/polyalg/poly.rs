use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::field::{Coeff, PrimeField};
use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// A polynomial: nonzero terms sorted strictly descending by monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: alloc::vec![(Monomial::ONE, c)] }
        }
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Build from terms that are already sorted descending with nonzero coefficients.
    pub fn from_sorted_terms(terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Poly { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    #[inline]
    pub fn lead(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Degree of the leading term (all terms for homogeneous input).
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.deg())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.deg() == m.deg()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant coefficient (0 if none).
    pub fn constant_coeff(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }
}

/// The ambient polynomial ring `F_p[x_1..x_n]` with positive variable weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: [u32; MAX_VARS],
}

/// Binary operations exposed by [`PolyRing::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::InvalidInput(alloc::format!(
                "at most {MAX_VARS} variables are supported, got {}",
                names.len()
            )));
        }
        if names.len() != weights.len() {
            return Err(Error::InvalidInput("variable names and weights differ in length".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidInput(alloc::format!("bad variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(alloc::format!("duplicate variable {n}")));
            }
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("variable weights must be positive".into()));
        }
        let mut w = [1u32; MAX_VARS];
        w[..weights.len()].copy_from_slice(&weights);
        Ok(PolyRing { field, names, weights: w })
    }

    /// Standard graded ring on the given variable names.
    pub fn standard(p: u32, names: &[&str]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        PolyRing::new(field, names.iter().map(|s| String::from(*s)).collect(), alloc::vec![1; names.len()])
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn weights(&self) -> &[u32; MAX_VARS] {
        &self.weights
    }

    pub fn var_weights(&self) -> &[u32] {
        &self.weights[..self.names.len()]
    }

    pub fn is_standard_graded(&self) -> bool {
        self.var_weights().iter().all(|&w| w == 1)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(Monomial::var(i, self.weights[i]), 1)
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps, &self.weights)
    }

    /// Checks that `f` only uses this ring's variables and coefficients.
    pub fn validate(&self, f: &Poly) -> Result<()> {
        let n = self.nvars();
        for (m, c) in f.terms() {
            if *c == 0 || *c >= self.field.p() || m.exps()[n..].iter().any(|&e| e != 0) {
                return Err(Error::InvalidInput("polynomial does not belong to this ring".into()));
            }
        }
        Ok(())
    }

    /// Checked arithmetic: both operands must belong to this ring.
    pub fn arith(&self, a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        })
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, 1, &Monomial::ONE)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, self.field.neg(1), &Monomial::ONE)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.scale(a, self.field.neg(1))
    }

    pub fn scale(&self, a: &Poly, c: Coeff) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|&(m, d)| (m, self.field.mul(c, d))).collect() }
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: Coeff) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|&(n, d)| (n.mul(m), self.field.mul(c, d))).collect() }
    }

    /// `a + c * m * b`, merged in one pass.
    pub fn add_scaled(&self, a: &Poly, b: &Poly, c: Coeff, m: &Monomial) -> Poly {
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (am, ac) = a.terms[i];
            let bm = b.terms[j].0.mul(m);
            match am.cmp(&bm) {
                Ordering::Greater => {
                    out.push((am, ac));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, f.mul(c, b.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(ac, f.mul(c, b.terms[j].1));
                    if s != 0 {
                        out.push((am, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        for &(bm, bc) in &b.terms[j..] {
            out.push((bm.mul(m), f.mul(c, bc)));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let (small, large) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, large, *c, m);
        }
        acc
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = Poly::constant(1);
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, a: &Poly) -> Poly {
        match a.lead() {
            None => Poly::zero(),
            Some(&(_, c)) if c == 1 => a.clone(),
            Some(&(_, c)) => self.scale(a, self.field.inv(c)),
        }
    }

    /// Builds a polynomial from unsorted, possibly repeated terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Coeff)>) -> Poly {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly { terms: out }
    }

    /// Substitute each variable `x_i` by `images[i]`.
    pub fn substitute(&self, f: &Poly, images: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in f.terms() {
            let mut t = Poly::constant(*c);
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = self.mul(&t, &self.pow(img, e as u32));
                }
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    pub fn format(&self, f: &Poly) -> String {
        super::parse::format_poly(self, f, false)
    }

    pub fn format_pretty(&self, f: &Poly) -> String {
        super::parse::format_poly(self, f, true)
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        super::parse::parse_poly(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::standard(101, &["x", "y"]).unwrap();
        let x = r.var(0);
        let y = r.var(1);
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(p, r.parse("x^2 - y^2").unwrap());
        assert!(r.mul(&x, &Poly::zero()).is_zero());
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = PolyRing::standard(2, &["x", "y"]).unwrap();
        let s = r.add(&r.var(0), &r.var(1));
        assert_eq!(r.format(&r.mul(&s, &s)), "x^2 + y^2");
    }

    #[test]
    fn checked_arith_rejects_foreign_polys() {
        let small = PolyRing::standard(101, &["x"]).unwrap();
        let big = PolyRing::standard(101, &["x", "y"]).unwrap();
        let y = big.var(1);
        assert!(small.arith(&small.var(0), &y, ArithOp::Add).is_err());
        assert!(big.arith(&big.var(0), &y, ArithOp::Mul).is_ok());
    }
}
