use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Cyclo, RootData};

/// Sparse multivariate Laurent polynomial over `Q(zeta)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    root: Arc<RootData>,
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Cyclo>,
}

impl LaurentPoly {
    pub fn zero(root: &Arc<RootData>, nvars: usize) -> Self {
        LaurentPoly {
            root: root.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Cyclo, nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponent: Vec<i64>, c: Cyclo) -> Self {
        let mut p = Self::zero(c.root(), exponent.len());
        p.add_term(exponent, &c);
        p
    }

    pub fn root(&self) -> &Arc<RootData> {
        &self.root
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Cyclo> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, c: &Cyclo) {
        debug_assert_eq!(exponent.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            root: self.root.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(&self.root, self.nvars);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(&self.root, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Multiplies by the monomial `y^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            root: self.root.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_exponent(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, k| {
            acc.iter().zip(k).map(|(a, b)| *a.min(b)).collect()
        }))
    }

    /// Componentwise maximum exponent over the support.
    pub fn max_exponent(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, k| {
            acc.iter().zip(k).map(|(a, b)| *a.max(b)).collect()
        }))
    }

    /// `self / d` when the quotient is again a Laurent polynomial.
    ///
    /// Lexicographic long division; every quotient exponent must stay inside
    /// the box `[min(self) - min(d), max(self) - max(d)]`, which bounds the
    /// loop when the division is not exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dk, dc) = d.leading()?;
        let dinv = dc.inv()?;
        let mut q = Self::zero(&self.root, self.nvars);
        if self.is_zero() {
            return Some(q);
        }
        let lo: Vec<i64> = sub_vec(&self.min_exponent()?, &d.min_exponent()?);
        let hi: Vec<i64> = sub_vec(&self.max_exponent()?, &d.max_exponent()?);
        let mut r = self.clone();
        while let Some((rk, rc)) = r.leading() {
            let e = sub_vec(rk, dk);
            if e.iter().zip(&lo).zip(&hi).any(|((x, l), h)| x < l || x > h) {
                return None;
            }
            let c = rc * &dinv;
            for (k, dc) in &d.terms {
                let ek = k.iter().zip(&e).map(|(a, b)| a + b).collect();
                r.add_term(ek, &-(&c * dc));
            }
            q.add_term(e, &c);
        }
        Some(q)
    }

    /// The term with the largest exponent in lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<i64>, &Cyclo)> {
        self.terms.iter().next_back()
    }
}

fn sub_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*y^{:?}", c, k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, root: &Arc<RootData>, nvars: usize, len: usize) -> LaurentPoly {
        let mut p = LaurentPoly::zero(root, nvars);
        for _ in 0..len {
            let e = (0..nvars).map(|_| rng.gen_range(-2..=2)).collect();
            let c = Cyclo::zeta_power(root, rng.gen_range(0..5)).scale(&crate::scalars::rat(rng.gen_range(1..4)));
            p.add_term(e, &c);
        }
        p
    }

    #[test]
    fn exact_division_recovers_factor() {
        let root = RootData::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=3);
            let a = random(&mut rng, &root, n, 3);
            let b = random(&mut rng, &root, n, 3);
            if b.is_zero() {
                continue;
            }
            let ab = a.mul(&b);
            assert_eq!(ab.exact_div(&b), Some(a));
        }
    }

    #[test]
    fn inexact_division_is_detected() {
        let root = RootData::new(3).unwrap();
        let one = Cyclo::one(&root);
        let x = LaurentPoly::monomial(vec![1], one.clone());
        let num = x.add(&LaurentPoly::constant(one.clone(), 1));
        let den = x.sub(&LaurentPoly::constant(one, 1));
        assert_eq!(num.exact_div(&den), None);
    }
}
