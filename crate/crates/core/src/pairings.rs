//! Hochster's θ-pairing and Dao's η-pairings, computed exactly from Tor lengths.
//!
//! Both pairings are read off the tail of the sequence `ℓ(Tor_i(M, N))`. Over
//! a complete intersection of codimension `c` that tail is, for each parity of
//! `i`, a polynomial of degree at most `c − 1`. We fit those polynomials
//! exactly on a window below the bound, validate them on held-out indices and
//! then sum the fitted tail symbolically.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::homres::{tor_profile, Periodicity, TorProfile};
use crate::modules::FPModule;
use crate::{Error, Result};

pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingKind {
    Theta,
    Eta(usize),
}

/// Everything needed to re-verify a pairing value from the observed lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCertificate {
    /// Least `f` such that `Tor_i` has finite length for `f ≤ i ≤ bound`.
    pub finite_length_from: usize,
    /// Inclusive index range the tail polynomials were fitted on.
    pub fit_window: (usize, usize),
    /// Tail polynomials in `i`, coefficients lowest degree first; slot 0 is
    /// for even `i`, slot 1 for odd `i`.
    pub fit_polynomials: [Vec<Rational>; 2],
    pub validation_indices: Vec<usize>,
    pub divergence_flag: bool,
    /// Present for θ: the periodicity of the resolution the tail was read from.
    pub periodicity: Option<Periodicity>,
    /// Observed lengths `ℓ(Tor_i)` for `0 ≤ i ≤ bound`, `None` when infinite.
    pub lengths: Vec<Option<u64>>,
}

impl PairingCertificate {
    /// The fitted polynomials reproduce every observed length on the fit
    /// window and the validation indices.
    pub fn reproduces_observations(&self) -> bool {
        let (a, b) = self.fit_window;
        (a..=b).chain(self.validation_indices.iter().copied()).all(|i| match self.lengths.get(i).copied().flatten() {
            Some(l) => eval(&self.fit_polynomials[i % 2], i as i128) == Rational::from_integer(l as i128),
            None => false,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingResult {
    pub kind: PairingKind,
    /// `None` exactly when the limit does not exist.
    pub value: Option<Rational>,
    pub certificate: PairingCertificate,
}

impl PairingResult {
    pub fn is_zero(&self) -> bool {
        self.value.is_some_and(|v| v.is_zero())
    }
}

/// Default bound `dim R + 2·codim R + 10`.
pub fn default_bound(m: &FPModule) -> usize {
    let r = m.ring();
    r.dim() + 2 * r.relative_codim() + 10
}

/// `θ(M, N) = ℓ(Tor_{2n}) − ℓ(Tor_{2n−1})` for `n ≫ 0`, over a hypersurface.
pub fn theta(m: &FPModule, n: &FPModule, bound: usize) -> Result<PairingResult> {
    if !m.ring().is_hypersurface() {
        return Err(Error::NotHypersurface);
    }
    let profile = tor_profile(m, n, bound)?;
    theta_from_profile(&profile, m.ring().dim())
}

/// θ from an already computed profile over a hypersurface of dimension `d`.
pub fn theta_from_profile(profile: &TorProfile, d: usize) -> Result<PairingResult> {
    let bound = profile.bound;
    let f = finite_from(profile)?;
    let start = (d + 2).max(f);
    if f > d + 2 {
        // Periodicity from d + 2 on means an infinite length there never goes away.
        return Err(Error::TailNotFiniteLength { index: f - 1 });
    }
    let periodicity = match &profile.periodic {
        Some(p) if bound >= start + 3 => p.clone(),
        _ => return Err(Error::NotStabilized { bound }),
    };
    let len = |i: usize| profile.lengths[i].unwrap() as i128;
    let even = if bound.is_multiple_of(2) { bound } else { bound - 1 };
    let (le, lo) = (len(even), len(even - 1));
    let constant = (start..=bound).all(|i| len(i) == if i % 2 == 0 { le } else { lo });
    if !constant {
        return Err(Error::NotStabilized { bound });
    }
    let certificate = PairingCertificate {
        finite_length_from: f,
        fit_window: (start, bound - 2),
        fit_polynomials: [vec![Rational::from_integer(le)], vec![Rational::from_integer(lo)]],
        validation_indices: vec![bound - 1, bound],
        divergence_flag: false,
        periodicity: Some(periodicity),
        lengths: profile.lengths.clone(),
    };
    Ok(PairingResult { kind: PairingKind::Theta, value: Some(Rational::from_integer(le - lo)), certificate })
}

/// `η_e(M, N) = lim (1/n^e) Σ_{i=f}^{n} (−1)^i ℓ(Tor_i(M, N))`.
pub fn eta(m: &FPModule, n: &FPModule, e: usize, bound: usize) -> Result<PairingResult> {
    let profile = tor_profile(m, n, bound)?;
    eta_from_profile(&profile, m.ring().relative_codim(), e, None)
}

/// η with the sum started at `start` instead of the least admissible index.
pub fn eta_from(m: &FPModule, n: &FPModule, e: usize, bound: usize, start: usize) -> Result<PairingResult> {
    let profile = tor_profile(m, n, bound)?;
    eta_from_profile(&profile, m.ring().relative_codim(), e, Some(start))
}

/// η over a complete intersection with `c` relations, from a computed profile.
pub fn eta_from_profile(profile: &TorProfile, c: usize, e: usize, start: Option<usize>) -> Result<PairingResult> {
    if e == 0 {
        return Err(Error::InvalidInput("η_e needs e ≥ 1".into()));
    }
    let bound = profile.bound;
    let f = finite_from(profile)?;
    let c = c.max(1);
    let lo = bound.saturating_sub(2 * c + 4);
    if f > lo {
        return Err(Error::TailNotFiniteLength { index: f - 1 });
    }
    if bound < 2 || (bound - 2 + 1).saturating_sub(lo) < 2 * c + 2 {
        return Err(Error::FitFailed { bound });
    }
    let hi = bound - 2;
    let len = |i: usize| Rational::from_integer(profile.lengths[i].unwrap() as i128);

    let mut polys: [Vec<Rational>; 2] = [Vec::new(), Vec::new()];
    for (parity, slot) in polys.iter_mut().enumerate() {
        let pts: Vec<(i128, Rational)> =
            (lo..=hi).filter(|i| i % 2 == parity).take(c).map(|i| (i as i128, len(i))).collect();
        *slot = interpolate(&pts);
    }
    let certificate = PairingCertificate {
        finite_length_from: f,
        fit_window: (lo, hi),
        fit_polynomials: polys,
        validation_indices: vec![bound - 1, bound],
        divergence_flag: false,
        periodicity: None,
        lengths: profile.lengths.clone(),
    };
    if !certificate.reproduces_observations() {
        return Err(Error::FitFailed { bound });
    }

    let first = start.unwrap_or(f).max(f);
    if first > lo {
        return Err(Error::InvalidInput("summation start lies beyond the fit window".into()));
    }
    let prefix: Rational = (first..lo).map(|i| sign(i) * len(i)).sum();
    let tail_term = |i: usize| sign(i) * eval(&certificate.fit_polynomials[i % 2], i as i128);

    // For n of fixed parity the partial sum is a polynomial in n of degree
    // ≤ c; recover it exactly from c + 2 sampled values.
    let mut limits = Vec::new();
    let mut divergent = false;
    for parity in 0..2 {
        let n0 = if lo % 2 == parity { lo } else { lo + 1 };
        let mut acc = prefix;
        let mut i = lo;
        let mut pts = Vec::new();
        for k in 0..c + 2 {
            let n = n0 + 2 * k;
            while i <= n {
                acc += tail_term(i);
                i += 1;
            }
            pts.push((n as i128, acc));
        }
        let s = interpolate(&pts);
        let deg = degree(&s);
        if deg.is_some_and(|d| d > e) {
            divergent = true;
        }
        limits.push(s.get(e).copied().unwrap_or_else(Rational::zero));
    }
    if limits[0] != limits[1] {
        divergent = true;
    }
    let mut certificate = certificate;
    certificate.divergence_flag = divergent;
    let value = (!divergent).then(|| limits[0]);
    Ok(PairingResult { kind: PairingKind::Eta(e), value, certificate })
}

fn finite_from(profile: &TorProfile) -> Result<usize> {
    profile.finite_length_from.ok_or(Error::TailNotFiniteLength { index: profile.bound })
}

fn sign(i: usize) -> Rational {
    if i.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Evaluate a coefficient vector (lowest degree first) at `x`.
pub fn eval(p: &[Rational], x: i128) -> Rational {
    let x = Rational::from_integer(x);
    p.iter().rev().fold(Rational::zero(), |acc, &c| acc * x + c)
}

fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// The unique polynomial of degree `< pts.len()` through the given points,
/// coefficients lowest degree first.
pub fn interpolate(pts: &[(i128, Rational)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); pts.len()];
    for (j, &(xj, yj)) in pts.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (k, &(xk, _)) in pts.iter().enumerate() {
            if k == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, &b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * Rational::from_integer(xk);
            }
            basis = next;
            denom *= Rational::from_integer(xj - xk);
        }
        let scale = yj / denom;
        for (o, b) in out.iter_mut().zip(basis) {
            *o += b * scale;
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use alloc::sync::Arc;

    use super::*;
    use crate::polyalg::{Poly, PolyRing};
    use crate::rings::CIRing;

    fn ring(rels: &[&str]) -> Arc<CIRing> {
        let q = PolyRing::standard(101, &["x", "y"]).unwrap();
        let rels = rels.iter().map(|s| q.parse(s).unwrap()).collect();
        Arc::new(CIRing::new(q, rels, None).unwrap())
    }

    fn cyc(r: &Arc<CIRing>, gens: &[&str]) -> FPModule {
        let g: Vec<Poly> = gens.iter().map(|s| r.poly().parse(s).unwrap()).collect();
        FPModule::cyclic(r.clone(), &g).unwrap()
    }

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn interpolation_is_exact() {
        let pts: Vec<(i128, Rational)> = (0..4).map(|x| (x, q(x * x * x - 2 * x + 1, 1))).collect();
        assert_eq!(interpolate(&pts), vec![q(1, 1), q(-2, 1), q(0, 1), q(1, 1)]);
        assert_eq!(eval(&interpolate(&pts), 7), q(330, 1));
    }

    #[test]
    fn theta_on_the_node() {
        let r = ring(&["x*y"]);
        let (rx, ry, rx2) = (cyc(&r, &["x"]), cyc(&r, &["y"]), cyc(&r, &["x^2"]));
        let b = default_bound(&rx);
        assert_eq!(theta(&rx, &rx2, b).unwrap().value, Some(q(-1, 1)));
        assert_eq!(theta(&rx, &rx, b).unwrap().value, Some(q(-1, 1)));
        assert_eq!(theta(&rx, &ry, b).unwrap().value, Some(q(1, 1)));
        let free = FPModule::free(r.clone(), vec![0]);
        assert_eq!(theta(&free, &rx2, b).unwrap().value, Some(q(0, 1)));
        let t = theta(&rx, &rx2, b).unwrap();
        assert!(t.certificate.reproduces_observations());
        assert!(t.certificate.periodicity.is_some());
    }

    #[test]
    fn theta_needs_a_hypersurface_and_room() {
        let a = ring(&["x^2", "y^2"]);
        let k = FPModule::residue_field(a);
        assert_eq!(theta(&k, &k, 10).unwrap_err(), Error::NotHypersurface);
        let r = ring(&["x*y"]);
        let rx = cyc(&r, &["x"]);
        assert_eq!(theta(&rx, &rx, 4).unwrap_err(), Error::NotStabilized { bound: 4 });
        let ry = cyc(&r, &["y"]);
        assert!(theta(&rx, &ry, 12).is_ok());
    }

    #[test]
    fn eta_on_the_node() {
        let r = ring(&["x*y"]);
        let (rx, rx2) = (cyc(&r, &["x"]), cyc(&r, &["x^2"]));
        let b = default_bound(&rx);
        assert_eq!(eta(&rx, &rx2, 1, b).unwrap().value, Some(q(-1, 2)));
        assert_eq!(eta(&rx, &rx, 2, b).unwrap().value, Some(q(0, 1)));
        assert_eq!(eta(&rx, &rx, 1, b).unwrap().value, Some(q(-1, 2)));
    }

    #[test]
    fn eta_over_codim_two() {
        let a = ring(&["x^2", "y^2"]);
        let k = FPModule::residue_field(a);
        let b = default_bound(&k);
        let two = eta(&k, &k, 2, b).unwrap();
        assert_eq!(two.value, Some(q(0, 1)));
        assert!(two.certificate.reproduces_observations());
        let one = eta(&k, &k, 1, b).unwrap();
        assert!(one.certificate.divergence_flag);
        assert_eq!(one.value, None);
    }

    #[test]
    fn eta_ignores_the_prefix() {
        let r = ring(&["x*y"]);
        let (rx, rx2) = (cyc(&r, &["x"]), cyc(&r, &["x^2"]));
        let b = default_bound(&rx);
        let base = eta(&rx, &rx2, 1, b).unwrap().value;
        for s in 1..6 {
            assert_eq!(eta_from(&rx, &rx2, 1, b, s).unwrap().value, base);
        }
    }
}
