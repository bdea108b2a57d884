use core::cmp::Ordering;

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 8;

/// A monomial with a cached weighted degree.
///
/// The total order (`Ord`) is degree first, then graded reverse lexicographic:
/// among monomials of equal degree, the one with the smaller exponent in the
/// last variable where they differ is larger. Unused exponent slots are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_VARS] };

    pub fn from_exps(exps: &[u16], weights: &[u32]) -> Self {
        debug_assert!(exps.len() <= MAX_VARS && exps.len() <= weights.len());
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0u32;
        for (i, &x) in exps.iter().enumerate() {
            e[i] = x;
            deg += x as u32 * weights[i];
        }
        Monomial { deg, exps: e }
    }

    pub fn var(i: usize, weight: u32) -> Self {
        let mut exps = [0u16; MAX_VARS];
        exps[i] = 1;
        Monomial { deg: weight, exps }
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps == [0; MAX_VARS]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            if exps[i] > 0 {
                deg += exps[i] as u32 * weights[i];
            }
        }
        Monomial { deg, exps }
    }

    pub fn gcd(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            if exps[i] > 0 {
                deg += exps[i] as u32 * weights[i];
            }
        }
        Monomial { deg, exps }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Remove variable `i` entirely (set its exponent to zero).
    pub fn without_var(&self, i: usize, weight: u32) -> Monomial {
        let mut m = *self;
        m.deg -= m.exps[i] as u32 * weight;
        m.exps[i] = 0;
        m
    }

    /// Lower the exponent of variable `i` by one if positive (the colon by `x_i`).
    pub fn colon_var(&self, i: usize, weight: u32) -> Monomial {
        let mut m = *self;
        if m.exps[i] > 0 {
            m.exps[i] -= 1;
            m.deg -= weight;
        }
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: [u32; 2] = [1, 1];

    fn m(a: u16, b: u16) -> Monomial {
        Monomial::from_exps(&[a, b], &W)
    }

    #[test]
    fn grevlex_examples() {
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 0) > m(0, 1));
        assert!(m(0, 3) > m(2, 0));
    }

    #[test]
    fn grevlex_three_vars() {
        let w = [1, 1, 1];
        let xz = Monomial::from_exps(&[1, 0, 1], &w);
        let y2 = Monomial::from_exps(&[0, 2, 0], &w);
        // grevlex: y^2 > xz because xz has the larger last exponent
        assert!(y2 > xz);
    }

    #[test]
    fn lcm_and_division() {
        let a = m(2, 1);
        let b = m(1, 3);
        let l = a.lcm(&b, &W);
        assert_eq!(l, m(2, 3));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), m(0, 2));
        assert_eq!(a.gcd(&b, &W), m(1, 1));
    }
}
