use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{chebyshev_expand, Cyclo, RootData, UniPoly};

/// Polynomial in central variables `alpha_p`, stored in the product
/// Chebyshev basis: the key `a` stands for `prod_p T_{a(p)}(alpha_p)`.
///
/// With no variables this is just a scalar stored under the empty key.
/// Because `T_0 = 2`, the unit is `2^{-P}` times the all-zero key.
#[derive(Clone, PartialEq, Eq)]
pub struct ChebPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Cyclo>,
}

impl ChebPoly {
    pub fn zero(nvars: usize) -> Self {
        ChebPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        let scale = BigRational::new(BigInt::one(), BigInt::one() << nvars);
        Self::term(vec![0; nvars], c.scale(&scale))
    }

    pub fn one(root: &Arc<RootData>, nvars: usize) -> Self {
        Self::constant(nvars, Cyclo::one(root))
    }

    /// `c * prod_p T_{a(p)}(alpha_p)`.
    pub fn term(index: Vec<u32>, c: Cyclo) -> Self {
        let mut terms = BTreeMap::new();
        let nvars = index.len();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        ChebPoly { nvars, terms }
    }

    /// `T_m(alpha_p)` alone.
    pub fn t(root: &Arc<RootData>, nvars: usize, p: usize, m: u32) -> Self {
        let mut idx = vec![0; nvars];
        idx[p] = m;
        let scale = BigRational::new(BigInt::one(), BigInt::one() << (nvars - 1));
        Self::term(idx, Cyclo::one(root).scale(&scale))
    }

    /// `alpha_p^m`, converted to the Chebyshev basis.
    pub fn power(root: &Arc<RootData>, nvars: usize, p: usize, m: u32) -> Self {
        let f = UniPoly::new({
            let mut v = vec![BigRational::from_integer(0.into()); m as usize + 1];
            v[m as usize] = BigRational::one();
            v
        });
        Self::from_univariate(root, nvars, p, &f)
    }

    /// A univariate power-basis polynomial in `alpha_p`.
    pub fn from_univariate(root: &Arc<RootData>, nvars: usize, p: usize, f: &UniPoly) -> Self {
        let mut acc = Self::zero(nvars);
        for (k, c) in chebyshev_expand(f) {
            acc.add_assign(&Self::t(root, nvars, p, k as u32).scale(&Cyclo::from_rational(root, c)));
        }
        acc
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Cyclo> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u32>, Cyclo> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: Vec<u32>, c: &Cyclo) {
        debug_assert_eq!(index.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &ChebPoly) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn add(&self, other: &ChebPoly) -> ChebPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> ChebPoly {
        ChebPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ChebPoly) -> ChebPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Cyclo) -> ChebPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ChebPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &ChebPoly) -> ChebPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for idx in product_indices(a, b) {
                    out.add_term(idx, &c);
                }
            }
        }
        out
    }

    /// Keeps the terms whose index satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[u32]) -> bool) -> ChebPoly {
        ChebPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces every index `a` by `f(a)`, summing collisions.
    pub fn map_indices(&self, mut f: impl FnMut(&[u32]) -> Vec<u32>) -> ChebPoly {
        let mut out = Self::zero(self.nvars);
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }
}

/// Expands `prod_p T_{a_p} T_{b_p}` into `2^P` product-basis indices.
fn product_indices(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::with_capacity(a.len())];
    for (&x, &y) in a.iter().zip(b) {
        let mut next = Vec::with_capacity(out.len() * 2);
        for prefix in out {
            let mut hi = prefix.clone();
            hi.push(x + y);
            next.push(hi);
            let mut lo = prefix;
            lo.push(x.abs_diff(y));
            next.push(lo);
        }
        out = next;
    }
    out
}

impl fmt::Debug for ChebPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ChebPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", c)?;
            for (p, &m) in k.iter().enumerate() {
                if m > 0 {
                    write!(f, "*T{}(alpha{})", m, p)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{chebyshev_collapse, rat};

    #[test]
    fn unit_is_neutral() {
        let r = RootData::new(3).unwrap();
        let one = ChebPoly::one(&r, 2);
        let t = ChebPoly::t(&r, 2, 1, 4).add(&ChebPoly::t(&r, 2, 0, 1));
        assert_eq!(one.mul(&t), t);
        assert_eq!(t.mul(&one), t);
    }

    #[test]
    fn single_variable_product_matches_power_basis() {
        let r = RootData::new(5).unwrap();
        let a = ChebPoly::power(&r, 1, 0, 3);
        let b = ChebPoly::power(&r, 1, 0, 2);
        assert_eq!(a.mul(&b), ChebPoly::power(&r, 1, 0, 5));
        // back to power basis
        let exp = a
            .terms()
            .iter()
            .map(|(k, c)| (k[0] as usize, c.as_rational().unwrap().clone()))
            .collect();
        assert_eq!(chebyshev_collapse(&exp), UniPoly::from_ints(&[0, 0, 0, 1]));
        let _ = rat(0);
    }

    #[test]
    fn variables_commute_and_associate() {
        let r = RootData::new(3).unwrap();
        let a = ChebPoly::t(&r, 2, 0, 2).add(&ChebPoly::t(&r, 2, 1, 1));
        let b = ChebPoly::t(&r, 2, 1, 3).add(&ChebPoly::one(&r, 2));
        let c = ChebPoly::t(&r, 2, 0, 5);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
