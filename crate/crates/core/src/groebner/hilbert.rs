use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::Zero;

use crate::polyalg::{Monomial, MAX_VARS};

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        Laurent { low: exp, coeffs: vec![c] }.normalized()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[k as usize]
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|t| *t.1 != 0).map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Laurent, sign: i64) -> Laurent {
        if self.is_zero() {
            return Laurent { low: other.low, coeffs: other.coeffs.iter().map(|c| sign * c).collect() };
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + sign * other.coeff(e)).collect();
        Laurent { low, coeffs }.normalized()
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent { low: self.low + other.low, coeffs }.normalized()
    }

    pub fn shift(&self, e: i32) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `1 - t^w`, if it exists.
    pub fn div_one_minus(&self, w: u32) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let w = w as usize;
        let n = self.coeffs.len();
        if n <= w {
            return None;
        }
        let mut q = vec![0i64; n - w];
        for k in 0..q.len() {
            q[k] = self.coeffs[k] + if k >= w { q[k - w] } else { 0 };
        }
        // q * (1 - t^w) must reproduce every coefficient
        for k in 0..n {
            let a = if k < q.len() { q[k] } else { 0 };
            let b = if k >= w && k - w < q.len() { q[k - w] } else { 0 };
            if self.coeffs[k] != a - b {
                return None;
            }
        }
        Some(Laurent { low: self.low, coeffs: q }.normalized())
    }

    /// Order of vanishing at `t = 1`.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 0;
        while p.eval_at_one() == 0 {
            p = p.div_one_minus(1).expect("root at 1 implies divisibility");
            k += 1;
        }
        Some(k)
    }
}

/// Hilbert series of a graded module over a polynomial ring with the given
/// variable weights, stored as `numerator / prod (1 - t^w_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Laurent,
    weights: Vec<u32>,
}

/// Dimension, Hilbert function values and (for standard gradings) the
/// Hilbert polynomial of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Krull dimension; `None` stands for the zero module (dimension −∞).
    pub dim: Option<usize>,
    /// `(degree, value)` for the requested range.
    pub values: Vec<(i32, i64)>,
    /// Coefficients of the Hilbert polynomial in ascending powers of `d`.
    pub polynomial: Option<Vec<Ratio<i128>>>,
    /// Values agree with the polynomial for every degree at or above this bound.
    pub regularity: Option<i32>,
}

impl HilbertSeries {
    pub fn new(numerator: Laurent, weights: Vec<u32>) -> Self {
        HilbertSeries { numerator, weights }
    }

    pub fn zero(weights: Vec<u32>) -> Self {
        HilbertSeries { numerator: Laurent::zero(), weights }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        debug_assert_eq!(self.weights, other.weights);
        HilbertSeries { numerator: self.numerator.add(&other.numerator), weights: self.weights.clone() }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        debug_assert_eq!(self.weights, other.weights);
        HilbertSeries { numerator: self.numerator.sub(&other.numerator), weights: self.weights.clone() }
    }

    pub fn shift(&self, e: i32) -> HilbertSeries {
        HilbertSeries { numerator: self.numerator.shift(e), weights: self.weights.clone() }
    }

    /// Krull dimension, `None` for the zero module.
    pub fn dim(&self) -> Option<usize> {
        self.numerator.order_at_one().map(|k| self.weights.len() - k)
    }

    /// Length (total vector-space dimension) when finite.
    pub fn length(&self) -> Option<u64> {
        let mut q = self.numerator.clone();
        for &w in &self.weights {
            q = q.div_one_minus(w)?;
        }
        Some(q.eval_at_one() as u64)
    }

    /// The Hilbert series as a Laurent polynomial, when the module has finite length.
    pub fn as_polynomial(&self) -> Option<Laurent> {
        let mut q = self.numerator.clone();
        for &w in &self.weights {
            q = q.div_one_minus(w)?;
        }
        Some(q)
    }

    /// Hilbert function on `from..=to`.
    pub fn values(&self, from: i32, to: i32) -> Vec<i64> {
        if to < from {
            return Vec::new();
        }
        if self.numerator.is_zero() {
            return vec![0; (to - from + 1) as usize];
        }
        let low = self.numerator.low().min(from);
        let len = (to - low + 1) as usize;
        // power series of 1 / prod(1 - t^w)
        let mut series = vec![0i64; len];
        series[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            for k in w..len {
                series[k] += series[k - w];
            }
        }
        (from..=to)
            .map(|d| {
                self.numerator
                    .terms()
                    .filter(|&(e, _)| e <= d)
                    .map(|(e, c)| c * series[(d - e) as usize])
                    .sum()
            })
            .collect()
    }

    pub fn value(&self, d: i32) -> i64 {
        self.values(d, d)[0]
    }

    /// Hilbert polynomial, for standard gradings only.
    pub fn hilbert_polynomial(&self) -> Option<(Vec<Ratio<i128>>, i32)> {
        if self.weights.iter().any(|&w| w != 1) {
            return None;
        }
        let Some(dim) = self.dim() else {
            return Some((Vec::new(), i32::MIN));
        };
        let mut k = self.numerator.clone();
        for _ in 0..self.weights.len() - dim {
            k = k.div_one_minus(1).expect("order at one");
        }
        if dim == 0 {
            return Some((Vec::new(), k.high() + 1));
        }
        // HF(d) = sum_j K_j * binom(d - j + dim - 1, dim - 1)
        let mut poly: Vec<Ratio<i128>> = vec![Ratio::zero(); dim];
        for (j, kj) in k.terms() {
            let b = binomial_poly((dim - 1) as i128 - j as i128, dim - 1);
            for (i, c) in b.into_iter().enumerate() {
                poly[i] += c * Ratio::from_integer(kj as i128);
            }
        }
        while poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        Some((poly, (k.high() - dim as i32 + 1).max(k.low())))
    }

    pub fn data(&self, from: i32, to: i32) -> HilbertData {
        let hp = self.hilbert_polynomial();
        HilbertData {
            dim: self.dim(),
            values: (from..=to).zip(self.values(from, to)).collect(),
            regularity: hp.as_ref().map(|h| h.1),
            polynomial: hp.map(|h| h.0),
        }
    }
}

/// Coefficients of `binom(d + a, k)` as a polynomial in `d`.
fn binomial_poly(a: i128, k: usize) -> Vec<Ratio<i128>> {
    let mut p: Vec<Ratio<i128>> = vec![Ratio::from_integer(1)];
    let mut fact: i128 = 1;
    for i in 0..k {
        // multiply by (d + a - i)
        let c = a - i as i128;
        let mut next = vec![Ratio::zero(); p.len() + 1];
        for (j, pj) in p.iter().enumerate() {
            next[j] += *pj * Ratio::from_integer(c);
            next[j + 1] += *pj;
        }
        p = next;
        fact *= i as i128 + 1;
    }
    p.into_iter().map(|c| c / Ratio::from_integer(fact)).collect()
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort();
    gens.dedup();
    let mut keep: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.iter() {
        if !keep.iter().any(|k| k.divides(g)) {
            keep.push(*g);
        }
    }
    *gens = keep;
}

/// Numerator of the Hilbert series of `Q / (gens)` over `prod (1 - t^w_i)`.
pub fn monomial_ideal_numerator(gens: &[Monomial], weights: &[u32; MAX_VARS], nvars: usize) -> Laurent {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    numerator_rec(g, weights, nvars)
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[u32; MAX_VARS], nvars: usize) -> Laurent {
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let mut counts = [0usize; MAX_VARS];
    for g in &gens {
        for (i, c) in counts.iter_mut().enumerate().take(nvars) {
            if g.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let pivot = (0..nvars).filter(|&i| counts[i] >= 2).max_by_key(|&i| (counts[i], core::cmp::Reverse(i)));
    match pivot {
        None => {
            // pairwise coprime generators
            let mut acc = Laurent::one();
            for g in &gens {
                acc = acc.mul(&Laurent::one().sub(&Laurent::monomial(g.deg() as i32, 1)));
            }
            acc
        }
        Some(i) => {
            let x = Monomial::var(i, weights[i]);
            let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exp(i) == 0).copied().collect();
            with_x.push(x);
            let mut colon: Vec<Monomial> = gens.iter().map(|g| g.colon_var(i, weights[i])).collect();
            minimalize(&mut colon);
            let a = numerator_rec(with_x, weights, nvars);
            let b = numerator_rec(colon, weights, nvars);
            a.add(&b.shift(weights[i] as i32))
        }
    }
}
